#include "scd/recognize.hpp"

#include "scd/obstructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace scd {

namespace {

// Word-wise: every distinct pair must be joined by exactly one arc.
void require_tournament(const digraph& d, bool allow_loops) {
    int n = d.size(), w = d.words_per_row();
    std::vector<word> expect(static_cast<std::size_t>(w), 0);
    for (int i = 0; i < n; ++i) expect[i >> 6] |= word{1} << (i & 63);
    for (int u = 0; u < n; ++u) {
        if (!allow_loops && d.has_loop(u))
            throw std::invalid_argument("tournament expected to be irreflexive");
        const word* out = d.out_row(u);
        const word* in = d.in_row(u);
        word self = word{1} << (u & 63);
        for (int i = 0; i < w; ++i) {
            word want = expect[i];
            if (i == (u >> 6)) want &= ~self;
            if ((out[i] ^ in[i]) != want)
                throw std::invalid_argument("not a tournament: vertex pair with zero or two arcs");
        }
    }
}

std::vector<word> bits_of(const std::vector<int>& vs, int words) {
    std::vector<word> mask(static_cast<std::size_t>(words), 0);
    for (int v : vs) mask[v >> 6] |= word{1} << (v & 63);
    return mask;
}

int projection_degree(const digraph& d, int v, const std::vector<word>& mask) {
    const word* row = d.out_row(v);
    int deg = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) deg += std::popcount(row[i] & mask[i]);
    return deg - (d.has_loop(v) ? 1 : 0);
}

int first_bit(const std::vector<word>& mask) {
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) return static_cast<int>(i * 64) + std::countr_zero(mask[i]);
    return -1;
}

// A directed triangle inside the strong component comp (|comp| >= 3):
// the maximum-degree vertex, any in-neighbour of it, and a common vertex
// closing the cycle, which the degree maximum guarantees to exist.
std::array<int, 3> triangle_in(const digraph& d, const std::vector<int>& comp,
                               const std::vector<word>& mask) {
    int v = comp[0], best = -1;
    for (int x : comp) {
        int deg = projection_degree(d, x, mask);
        if (deg > best) {
            best = deg;
            v = x;
        }
    }
    std::vector<word> cand(mask.size());
    for (std::size_t i = 0; i < mask.size(); ++i) cand[i] = d.in_row(v)[i] & mask[i];
    cand[v >> 6] &= ~(word{1} << (v & 63));
    int u = first_bit(cand);
    for (std::size_t i = 0; i < mask.size(); ++i) cand[i] = d.out_row(v)[i] & d.in_row(u)[i] & mask[i];
    cand[v >> 6] &= ~(word{1} << (v & 63));
    cand[u >> 6] &= ~(word{1} << (u & 63));
    int w = first_bit(cand);
    if (u < 0 || w < 0) throw std::logic_error("strong tournament component without a triangle");
    return {v, w, u};
}

// Checks that ord arranges its vertex set as a transitive chain with the
// spanning arc reversed (reversed = true) or as a plain chain. Loops are
// ignored; arcs leaving the set are ignored.
bool arrangement_valid(const digraph& d, const std::vector<int>& ord, bool reversed) {
    int m = static_cast<int>(ord.size());
    int words = d.words_per_row();
    std::vector<word> later(static_cast<std::size_t>(words), 0);
    std::vector<word> mask = bits_of(ord, words);
    std::vector<word> want(static_cast<std::size_t>(words));
    for (int p = m - 1; p >= 0; --p) {
        int v = ord[p];
        want = later;
        if (reversed) {
            if (p == 0) want[ord[m - 1] >> 6] &= ~(word{1} << (ord[m - 1] & 63));
            if (p == m - 1) want[ord[0] >> 6] |= word{1} << (ord[0] & 63);
        }
        if (d.has_loop(v)) want[v >> 6] |= word{1} << (v & 63);
        for (int i = 0; i < words; ++i)
            if ((d.out_row(v)[i] & mask[i]) != want[i]) return false;
        later[v >> 6] |= word{1} << (v & 63);
    }
    return true;
}

// Arrangement of a strong component with >= 4 vertices as a transitive chain
// plus the reversed spanning arc, identified from the projection out-degree
// sequence: all degrees distinct except the top pair and the bottom pair,
// each tied pair ordered dominator first. Empty when comp is not this shape.
std::vector<int> spanning_arrangement(const digraph& d, const std::vector<int>& comp,
                                      const std::vector<word>& mask) {
    int m = static_cast<int>(comp.size());
    std::vector<std::pair<int, int>> by_deg;  // (degree, vertex)
    for (int v : comp) by_deg.emplace_back(projection_degree(d, v, mask), v);
    std::sort(by_deg.begin(), by_deg.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    for (int p = 0; p < m; ++p) {
        int expected = (p <= 1) ? m - 2 : (p >= m - 2) ? 1 : m - 1 - p;
        if (by_deg[p].first != expected) return {};
    }
    std::vector<int> ord;
    for (auto& [deg, v] : by_deg) ord.push_back(v);
    if (d.has_arc(ord[1], ord[0])) std::swap(ord[0], ord[1]);
    if (d.has_arc(ord[m - 1], ord[m - 2])) std::swap(ord[m - 2], ord[m - 1]);
    if (!arrangement_valid(d, ord, true)) return {};
    return ord;
}

// The three rotations of a strong 3-vertex component (a directed triangle),
// smallest starting vertex first.
std::vector<std::vector<int>> triangle_rotations(const digraph& d, const std::vector<int>& comp) {
    int x = comp[0];
    int y = d.has_arc(comp[0], comp[1]) ? comp[1] : comp[2];
    int z = comp[0] + comp[1] + comp[2] - x - y;
    std::vector<std::vector<int>> rots = {{x, y, z}, {y, z, x}, {z, x, y}};
    std::sort(rots.begin(), rots.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return rots;
}

// Arrangement of the single nontrivial component when it is a reversed-chain
// tournament and the reversed arc has an irreflexive endpoint: the chain
// itself if its first vertex is loopless, otherwise the chain reversed.
std::optional<std::vector<int>> chain_form_segment(const digraph& d, const std::vector<int>& comp,
                                                   const std::vector<word>& mask) {
    std::vector<std::vector<int>> candidates;
    if (comp.size() == 3) {
        candidates = triangle_rotations(d, comp);
    } else {
        std::vector<int> arr = spanning_arrangement(d, comp, mask);
        if (arr.empty()) return std::nullopt;
        candidates.push_back(std::move(arr));
    }
    for (const auto& q : candidates)
        if (!d.has_loop(q.front())) return q;
    for (const auto& q : candidates)
        if (!d.has_loop(q.back())) return std::vector<int>(q.rbegin(), q.rend());
    return std::nullopt;
}

// Arrangement of the single nontrivial component in the deviant-vertex form:
// a loopless w whose removal leaves a transitive chain c1 > ... > c_{m-1},
// with w beating exactly the prefix c1..ck for some 2 <= k <= m-3, and a
// single loop on the boundary pair — on {c_{m-2}, c_{m-1}} when k = m-3
// (segment w, c1, .., c_{m-3}, loopless, looped), or on {c1, c2} when k = 2
// (segment w, c_{m-1}, .., c3, loopless, looped). Any vertex of this form
// lies on every triangle, so the candidates come from one found triangle.
std::optional<std::vector<int>> deviant_form_segment(const digraph& d, const std::vector<int>& comp,
                                                     const std::vector<word>& mask) {
    int m = static_cast<int>(comp.size());
    if (m < 5) return std::nullopt;
    std::array<int, 3> tri = triangle_in(d, comp, mask);
    for (int w : tri) {
        if (d.has_loop(w)) continue;
        std::vector<int> rest;
        for (int v : comp)
            if (v != w) rest.push_back(v);
        std::vector<word> rest_mask = bits_of(rest, d.words_per_row());
        std::vector<std::pair<int, int>> by_deg;
        for (int v : rest) by_deg.emplace_back(projection_degree(d, v, rest_mask), v);
        std::sort(by_deg.begin(), by_deg.end(), std::greater<>());
        bool distinct = true;
        for (int p = 0; p + 1 < m - 1 && distinct; ++p)
            if (by_deg[p].first == by_deg[p + 1].first) distinct = false;
        if (!distinct) continue;
        std::vector<int> chain;
        for (auto& [deg, v] : by_deg) chain.push_back(v);
        if (!arrangement_valid(d, chain, false)) continue;
        int k = 0;
        while (k < m - 1 && d.has_arc(w, chain[k])) ++k;
        bool prefix_only = true;
        for (int p = k; p < m - 1 && prefix_only; ++p)
            if (d.has_arc(w, chain[p])) prefix_only = false;
        if (!prefix_only || k < 2 || k > m - 3) continue;
        auto one_loop = [&](int u, int v) {
            return (d.has_loop(u) ? 1 : 0) + (d.has_loop(v) ? 1 : 0) == 1;
        };
        auto pair_order = [&](int u, int v) {
            return d.has_loop(u) ? std::pair{v, u} : std::pair{u, v};
        };
        if (k == m - 3 && one_loop(chain[m - 3], chain[m - 2])) {
            auto [loopless, looped] = pair_order(chain[m - 3], chain[m - 2]);
            std::vector<int> seg = {w};
            for (int p = 0; p < m - 3; ++p) seg.push_back(chain[p]);
            seg.push_back(loopless);
            seg.push_back(looped);
            return seg;
        }
        if (k == 2 && one_loop(chain[0], chain[1])) {
            auto [loopless, looped] = pair_order(chain[0], chain[1]);
            std::vector<int> seg = {w};
            for (int p = m - 2; p >= 2; --p) seg.push_back(chain[p]);
            seg.push_back(loopless);
            seg.push_back(looped);
            return seg;
        }
    }
    return std::nullopt;
}

// Verdict and ordering construction shared by both tournament recognizers.
// Nothing when the input has no strong ordering. Orderings are built as: the
// nontrivial component's segment, then the trivial components fanning
// outward (sources nearest-first, then sinks nearest-first); with no
// nontrivial component the condensation order itself works.
std::optional<std::vector<int>> construct_ordering(const digraph& d) {
    auto comps = d.strong_components();
    int big = -1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].size() < 2) continue;
        if (big >= 0) return std::nullopt;
        big = static_cast<int>(i);
    }
    std::vector<int> ord;
    if (big < 0) {
        for (const auto& c : comps) ord.push_back(c[0]);
        return ord;
    }
    std::vector<word> mask = bits_of(comps[big], d.words_per_row());
    std::optional<std::vector<int>> segment = chain_form_segment(d, comps[big], mask);
    if (!segment) segment = deviant_form_segment(d, comps[big], mask);
    if (!segment) return std::nullopt;
    ord = *segment;
    for (int i = big - 1; i >= 0; --i) ord.push_back(comps[i][0]);
    for (std::size_t i = big + 1; i < comps.size(); ++i) ord.push_back(comps[i][0]);
    return ord;
}

// Non-certifiable patterns the no-certificates may cite, smallest first.
const std::vector<obstruction>& citable_patterns() {
    static const std::vector<obstruction> patterns = [] {
        std::vector<obstruction> all = generate_T_circ(6);
        std::vector<obstruction> keep;
        for (obstruction& o : all)
            if (!construct_ordering(o.pattern)) keep.push_back(std::move(o));
        std::stable_sort(keep.begin(), keep.end(), [](const obstruction& a, const obstruction& b) {
            return a.pattern.size() < b.pattern.size();
        });
        return keep;
    }();
    return patterns;
}

constexpr int minimalization_bound = 512;

// Greedy single-pass minimalization: strong chordality is hereditary under
// induced subdigraphs, so each kept vertex stays necessary to the end.
certificate core_certificate(const digraph& d) {
    digraph core = d;
    std::vector<int> labels(d.size());
    std::iota(labels.begin(), labels.end(), 0);
    std::size_t idx = 0;
    while (idx < labels.size()) {
        std::vector<int> keep;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (i != idx) keep.push_back(static_cast<int>(i));
        digraph smaller = core.induced_subdigraph(keep);
        if (!construct_ordering(smaller)) {
            core = std::move(smaller);
            labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(idx));
        } else {
            ++idx;
        }
    }
    for (const obstruction& o : citable_patterns()) {
        if (o.pattern.size() > core.size()) break;
        if (auto map = find_induced(core, o.pattern)) {
            certificate cert;
            cert.type = certificate::kind::named_obstruction;
            cert.name = o.name;
            for (int v : *map) cert.vertices.push_back(labels[v]);
            return cert;
        }
    }
    certificate cert;
    cert.type = certificate::kind::structural_violation;
    cert.detail = "minimal-non-strongly-chordal-core";
    cert.vertices = labels;
    return cert;
}

certificate no_certificate(const digraph& d) {
    auto comps = d.strong_components();
    std::vector<const std::vector<int>*> big;
    for (const auto& c : comps)
        if (c.size() >= 2) big.push_back(&c);
    if (big.size() >= 2) {
        certificate cert;
        cert.type = certificate::kind::arc_disjoint_triangles;
        for (const std::vector<int>* comp : {big[0], big[1]}) {
            std::array<int, 3> tri = triangle_in(d, *comp, bits_of(*comp, d.words_per_row()));
            cert.vertices.insert(cert.vertices.end(), tri.begin(), tri.end());
        }
        return cert;
    }
    if (d.size() <= minimalization_bound) return core_certificate(d);
    certificate cert;
    cert.type = certificate::kind::structural_violation;
    cert.detail = "non-strongly-chordal-strong-component";
    cert.vertices = *big[0];
    return cert;
}

void verify_ordering(const digraph& d, const std::vector<int>& ord) {
    if (d.size() > 1024) return;
    if (check_strong_ordering(d, ord))
        throw std::logic_error("constructed ordering failed verification");
}

} // namespace

std::optional<reversal_form> transitive_or_one_reversal(const digraph& d) {
    require_tournament(d, false);
    auto comps = d.strong_components();
    int big = -1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].size() < 2) continue;
        if (big >= 0) return std::nullopt;
        big = static_cast<int>(i);
    }
    reversal_form form;
    if (big < 0) {
        for (const auto& c : comps) form.order.push_back(c[0]);
        return form;
    }
    const std::vector<int>& comp = comps[big];
    std::vector<int> arr;
    if (comp.size() == 3)
        arr = triangle_rotations(d, comp)[0];
    else
        arr = spanning_arrangement(d, comp, bits_of(comp, d.words_per_row()));
    if (arr.empty()) return std::nullopt;
    for (int i = 0; i < big; ++i) form.order.push_back(comps[i][0]);
    form.a = static_cast<int>(form.order.size());
    form.b = form.a + static_cast<int>(comp.size()) - 1;
    form.order.insert(form.order.end(), arr.begin(), arr.end());
    for (std::size_t i = big + 1; i < comps.size(); ++i) form.order.push_back(comps[i][0]);
    return form;
}

recognition_result recognize_irreflexive_tournament(const digraph& d) {
    require_tournament(d, false);
    recognition_result res;
    res.class_used = "tournament";
    if (auto ord = construct_ordering(d)) {
        res.strongly_chordal = true;
        res.ordering = std::move(*ord);
        verify_ordering(d, res.ordering);
        return res;
    }
    auto pair = find_arc_disjoint_triangles(d);
    if (!pair) throw std::logic_error("non-chordal tournament without an arc-disjoint triangle pair");
    certificate cert;
    cert.type = certificate::kind::arc_disjoint_triangles;
    cert.vertices.assign(pair->first.begin(), pair->first.end());
    cert.vertices.insert(cert.vertices.end(), pair->second.begin(), pair->second.end());
    res.reason = std::move(cert);
    return res;
}

recognition_result recognize_tournament_with_loops(const digraph& d) {
    require_tournament(d, true);
    recognition_result res;
    res.class_used = "tournament-with-loops";
    if (auto ord = construct_ordering(d)) {
        res.strongly_chordal = true;
        res.ordering = std::move(*ord);
        verify_ordering(d, res.ordering);
        return res;
    }
    res.reason = no_certificate(d);
    return res;
}

} // namespace scd
