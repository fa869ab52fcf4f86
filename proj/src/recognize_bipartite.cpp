#include "scd/recognize.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace scd {

namespace {

std::vector<word> bits_of(const std::vector<int>& vs, int words) {
    std::vector<word> mask(static_cast<std::size_t>(words), 0);
    for (int v : vs) mask[v >> 6] |= word{1} << (v & 63);
    return mask;
}

// Recovers the two parts from the arcs: the underlying graph must 2-color,
// and every cross pair must carry exactly one arc. An arcless digraph is a
// valid bipartite tournament with an empty second part.
std::pair<std::vector<int>, std::vector<int>> bipartition(const digraph& d) {
    int n = d.size(), w = d.words_per_row();
    for (int v = 0; v < n; ++v)
        if (d.has_loop(v))
            throw std::invalid_argument("bipartite tournament expected to be irreflexive");
    std::vector<int> color(n, -1);
    int root = -1;
    for (int v = 0; v < n && root < 0; ++v)
        if (d.out_degree(v) + d.in_degree(v) > 0) root = v;
    std::vector<int> xs, ys;
    if (root < 0) {
        xs.resize(static_cast<std::size_t>(n));
        std::iota(xs.begin(), xs.end(), 0);
        return {xs, ys};
    }
    color[root] = 0;
    std::vector<int> stack{root};
    int seen = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int i = 0; i < w; ++i) {
            word bits = d.out_row(v)[i] | d.in_row(v)[i];
            while (bits) {
                int u = i * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (color[u] < 0) {
                    color[u] = color[v] ^ 1;
                    ++seen;
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    throw std::invalid_argument("underlying graph is not bipartite");
                }
            }
        }
    }
    if (seen < n) throw std::invalid_argument("underlying graph is not complete bipartite");
    for (int v = 0; v < n; ++v) (color[v] == 0 ? xs : ys).push_back(v);
    auto xmask = bits_of(xs, w);
    auto ymask = bits_of(ys, w);
    for (int v = 0; v < n; ++v) {
        const word* want = color[v] == 0 ? ymask.data() : xmask.data();
        const word* out = d.out_row(v);
        const word* in = d.in_row(v);
        for (int i = 0; i < w; ++i)
            if ((out[i] ^ in[i]) != want[i] || (out[i] | in[i]) != want[i])
                throw std::invalid_argument(
                    "not a bipartite tournament: cross pair with zero or two arcs");
    }
    return {xs, ys};
}

// Repeatedly removes vertices whose in-degree or out-degree vanishes inside
// the surviving set and records the removal order. Appending the removals in
// reverse after any gamma-free ordering of the core stays gamma-free: a peeled
// vertex is a source or a sink among the vertices placed before it, and cross
// completeness supplies the arc that would otherwise finish a gamma.
struct peel_result {
    std::vector<int> xs, ys;  // surviving core, ascending
    std::vector<int> removed; // removal order
};

peel_result peel_sources_and_sinks(const digraph& d, const std::vector<int>& xs,
                                   const std::vector<int>& ys) {
    int n = d.size();
    std::vector<int> outd(static_cast<std::size_t>(n)), ind(static_cast<std::size_t>(n));
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    peel_result res;
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        outd[v] = d.out_degree(v);
        ind[v] = d.in_degree(v);
        if (outd[v] == 0 || ind[v] == 0) queue.push_back(v);
    }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (!alive[v]) continue;
        alive[v] = 0;
        res.removed.push_back(v);
        for (int u : d.out_neighbors(v))
            if (alive[u] && --ind[u] == 0) queue.push_back(u);
        for (int u : d.in_neighbors(v))
            if (alive[u] && --outd[u] == 0) queue.push_back(u);
    }
    for (int v : xs)
        if (alive[v]) res.xs.push_back(v);
    for (int v : ys)
        if (alive[v]) res.ys.push_back(v);
    return res;
}

// Connected components, each as a sub-bigraph keeping the original labels.
// Components are ordered by their smallest row index, isolated columns last.
std::vector<bigraph> bigraph_components(const bigraph& g) {
    std::vector<int> row_comp(static_cast<std::size_t>(g.rows), -1);
    std::vector<int> col_comp(static_cast<std::size_t>(g.cols), -1);
    std::vector<std::vector<int>> comp_rows, comp_cols;
    auto explore = [&](int root, bool root_is_row) {
        int id = static_cast<int>(comp_rows.size());
        comp_rows.emplace_back();
        comp_cols.emplace_back();
        std::vector<std::pair<int, bool>> stack{{root, root_is_row}};
        (root_is_row ? row_comp : col_comp)[root] = id;
        while (!stack.empty()) {
            auto [v, is_row] = stack.back();
            stack.pop_back();
            (is_row ? comp_rows : comp_cols)[id].push_back(v);
            int limit = is_row ? g.cols : g.rows;
            for (int u = 0; u < limit; ++u) {
                if (!(is_row ? g.at(v, u) : g.at(u, v))) continue;
                int& mark = (is_row ? col_comp : row_comp)[u];
                if (mark < 0) {
                    mark = id;
                    stack.push_back({u, !is_row});
                }
            }
        }
    };
    for (int r = 0; r < g.rows; ++r)
        if (row_comp[r] < 0) explore(r, true);
    for (int c = 0; c < g.cols; ++c)
        if (col_comp[c] < 0) explore(c, false);
    std::vector<bigraph> comps;
    for (std::size_t id = 0; id < comp_rows.size(); ++id) {
        std::sort(comp_rows[id].begin(), comp_rows[id].end());
        std::sort(comp_cols[id].begin(), comp_cols[id].end());
        bigraph sub(static_cast<int>(comp_rows[id].size()), static_cast<int>(comp_cols[id].size()));
        for (std::size_t i = 0; i < comp_rows[id].size(); ++i) {
            sub.row_labels[i] = g.row_labels[comp_rows[id][i]];
            for (std::size_t j = 0; j < comp_cols[id].size(); ++j)
                sub.at(static_cast<int>(i), static_cast<int>(j)) =
                    g.at(comp_rows[id][i], comp_cols[id][j]);
        }
        for (std::size_t j = 0; j < comp_cols[id].size(); ++j)
            sub.col_labels[j] = g.col_labels[comp_cols[id][j]];
        comps.push_back(std::move(sub));
    }
    return comps;
}

// Any edge of the bigraph as (row label, column label).
std::pair<int, int> first_edge(const bigraph& g) {
    for (int r = 0; r < g.rows; ++r)
        for (int c = 0; c < g.cols; ++c)
            if (g.at(r, c)) return {g.row_labels[r], g.col_labels[c]};
    throw std::logic_error("bigraph component without an edge");
}

// Three pairwise independent bigraph edges (r, c) carry an induced B4: the
// rows beat their matched columns and every other row-column pair is beaten
// back, which is exactly the pattern with rows first in catalog order.
certificate b4_certificate(const std::array<std::pair<int, int>, 3>& edges) {
    certificate cert;
    cert.type = certificate::kind::named_obstruction;
    cert.name = "B4";
    cert.vertices = {edges[0].first,  edges[1].first,  edges[2].first,
                     edges[0].second, edges[1].second, edges[2].second};
    return cert;
}

void verify_ordering(const digraph& d, const std::vector<int>& ord) {
    if (d.size() > 1024) return;
    if (check_strong_ordering(d, ord))
        throw std::logic_error("constructed ordering failed verification");
}

} // namespace

std::pair<bigraph, bigraph> one_way_bigraphs(const digraph& d, const std::vector<int>& xs,
                                             const std::vector<int>& ys) {
    int w = d.words_per_row();
    for (const std::vector<int>* part : {&xs, &ys}) {
        auto mask = bits_of(*part, w);
        for (int v : *part)
            for (int i = 0; i < w; ++i)
                if (d.out_row(v)[i] & mask[i])
                    throw std::invalid_argument("arc joins two vertices of one part");
    }
    bigraph bx(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
    bigraph by(static_cast<int>(ys.size()), static_cast<int>(xs.size()));
    bx.row_labels = xs;
    bx.col_labels = ys;
    by.row_labels = ys;
    by.col_labels = xs;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j) {
            bx.at(static_cast<int>(i), static_cast<int>(j)) = d.has_arc(xs[i], ys[j]);
            by.at(static_cast<int>(j), static_cast<int>(i)) = d.has_arc(ys[j], xs[i]);
        }
    return {bx, by};
}

chain_orderings is_bipartite_chain(const bigraph& g) {
    chain_orderings res;
    auto order_side = [&](bool rows_side) {
        int m = rows_side ? g.rows : g.cols;
        int other = rows_side ? g.cols : g.rows;
        auto at = [&](int v, int u) { return rows_side ? g.at(v, u) : g.at(u, v); };
        std::vector<int> deg(static_cast<std::size_t>(m), 0);
        std::vector<int> order(static_cast<std::size_t>(m));
        std::iota(order.begin(), order.end(), 0);
        for (int v = 0; v < m; ++v)
            for (int u = 0; u < other; ++u) deg[v] += at(v, u);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (deg[a] != deg[b]) return deg[a] > deg[b];
            return a < b;
        });
        return order;
    };
    // Neighborhoods nest iff every consecutive degree-sorted pair nests, and a
    // failing pair yields the 2K2 directly: the larger side owns a private
    // neighbor by counting.
    auto nesting_break = [&](const std::vector<int>& order, bool rows_side,
                             std::array<int, 4>& witness) {
        int other = rows_side ? g.cols : g.rows;
        auto at = [&](int v, int u) { return rows_side ? g.at(v, u) : g.at(u, v); };
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            int big = order[i], small = order[i + 1];
            int priv_small = -1, priv_big = -1;
            for (int u = 0; u < other; ++u) {
                if (at(small, u) && !at(big, u)) priv_small = u;
                if (at(big, u) && !at(small, u)) priv_big = u;
            }
            if (priv_small < 0) continue;
            if (priv_big < 0)
                throw std::logic_error("degree-sorted pair without a private neighbor");
            if (rows_side)
                witness = {g.row_labels[big], g.row_labels[small], g.col_labels[priv_big],
                           g.col_labels[priv_small]};
            else
                witness = {g.row_labels[priv_big], g.row_labels[priv_small], g.col_labels[big],
                           g.col_labels[small]};
            return true;
        }
        return false;
    };
    auto rows = order_side(true);
    if (nesting_break(rows, true, res.witness)) return res;
    auto cols = order_side(false);
    if (nesting_break(cols, false, res.witness)) return res;
    res.chain = true;
    for (int r : rows) res.rows.push_back(g.row_labels[r]);
    for (int c : cols) res.cols.push_back(g.col_labels[c]);
    return res;
}

recognition_result recognize_irreflexive_bipartite(const digraph& d) {
    auto [xs, ys] = bipartition(d);
    recognition_result res;
    res.class_used = "bipartite";
    peel_result core = peel_sources_and_sinks(d, xs, ys);
    auto finish_yes = [&](std::vector<int> ordering) {
        ordering.insert(ordering.end(), core.removed.rbegin(), core.removed.rend());
        verify_ordering(d, ordering);
        res.strongly_chordal = true;
        res.ordering = std::move(ordering);
        return res;
    };
    if (core.xs.empty() && core.ys.empty()) return finish_yes({});

    auto [bx, by] = one_way_bigraphs(d, core.xs, core.ys);
    for (const bigraph* b : {&bx, &by}) {
        auto comps = bigraph_components(*b);
        if (comps.size() < 2) continue;
        res.strongly_chordal = false;
        if (comps.size() > 2) {
            res.reason = b4_certificate(
                {first_edge(comps[0]), first_edge(comps[1]), first_edge(comps[2])});
            return res;
        }
        chain_orderings first = is_bipartite_chain(comps[0]);
        chain_orderings second = is_bipartite_chain(comps[1]);
        if (!first.chain || !second.chain) {
            const chain_orderings& broken = first.chain ? second : first;
            auto extra = first_edge(first.chain ? comps[0] : comps[1]);
            res.reason = b4_certificate({std::pair<int, int>{broken.witness[0], broken.witness[2]},
                                         {broken.witness[1], broken.witness[3]},
                                         extra});
            return res;
        }
        // Rows of the first component descending, columns of the second
        // descending, then the same blocks of the other component ascending.
        // Descending first blocks kill the gamma pattern of the complement
        // side, ascending last blocks kill it on the direct side.
        std::vector<int> ordering = first.rows;
        ordering.insert(ordering.end(), second.cols.begin(), second.cols.end());
        ordering.insert(ordering.end(), first.cols.rbegin(), first.cols.rend());
        ordering.insert(ordering.end(), second.rows.rbegin(), second.rows.rend());
        return finish_yes(std::move(ordering));
    }

    res.strongly_chordal = false;
    res.certified = false;
    certificate cert;
    cert.type = certificate::kind::structural_violation;
    cert.detail = "both-one-way-bigraphs-connected";
    cert.vertices = core.xs;
    cert.vertices.insert(cert.vertices.end(), core.ys.begin(), core.ys.end());
    std::sort(cert.vertices.begin(), cert.vertices.end());
    res.reason = cert;
    return res;
}

} // namespace scd
