#include "scd/obstructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace scd {

namespace {

// Arcs are encoded as two-digit integers 10*u + v; all fixed patterns keep
// their vertex ids in 0..9.
digraph from_codes(int n, std::initializer_list<int> loops, std::initializer_list<int> arcs) {
    digraph d(n);
    for (int v : loops) d.add_arc(v, v);
    for (int code : arcs) d.add_arc(code / 10, code % 10);
    return d;
}

digraph reflexive_triangle() {
    return from_codes(3, {0, 1, 2}, {1, 12, 20});
}

digraph t0_pattern() {
    return from_codes(4, {0, 3}, {1, 2, 12, 13, 23, 30});
}

std::vector<obstruction> build_catalog() {
    std::vector<obstruction> out;
    auto add = [&](const char* name, const char* family, digraph d) {
        out.push_back(obstruction{name, std::move(d), family});
    };
    add("T0", "tournament-with-loops", t0_pattern());
    add("T1", "tournament", from_codes(5, {}, {1, 2, 3, 12, 13, 23, 24, 34, 40, 41}));
    add("T2", "tournament", from_codes(5, {}, {1, 2, 3, 12, 14, 23, 31, 34, 40, 42}));
    add("T3", "tournament", from_codes(5, {}, {1, 4, 13, 20, 21, 30, 32, 41, 42, 43}));
    add("T4", "tournament", from_codes(5, {}, {1, 4, 12, 14, 20, 24, 30, 31, 32, 43}));
    add("T5", "tournament", from_codes(5, {}, {1, 2, 12, 13, 23, 24, 30, 34, 40, 41}));
    add("T6", "tournament",
        from_codes(6, {}, {5, 10, 20, 21, 24, 25, 30, 31, 32, 35, 40, 41, 43, 45, 51}));
    add("S1", "minus-arc", from_codes(5, {}, {4, 13, 20, 21, 30, 32, 41, 42, 43}));
    add("S2", "minus-arc", from_codes(5, {}, {2, 4, 13, 21, 30, 32, 41, 42, 43}));
    add("S3", "minus-arc", from_codes(5, {}, {3, 4, 13, 20, 21, 32, 41, 42, 43}));
    add("S4", "minus-arc", from_codes(5, {}, {2, 4, 14, 21, 30, 31, 32, 42, 43}));
    add("S5", "minus-arc", from_codes(5, {}, {3, 4, 14, 20, 21, 31, 32, 42, 43}));
    add("S6", "minus-arc", from_codes(5, {}, {3, 4, 12, 14, 20, 31, 32, 42, 43}));
    add("S7", "minus-arc", from_codes(5, {}, {2, 3, 21, 24, 31, 32, 40, 41, 43}));
    add("S8", "minus-arc", from_codes(5, {}, {2, 3, 4, 21, 24, 31, 32, 41, 43}));
    add("S9", "minus-arc", from_codes(5, {}, {3, 12, 20, 24, 31, 32, 40, 41, 43}));
    add("S10", "minus-arc", from_codes(5, {}, {2, 3, 12, 24, 31, 32, 40, 41, 43}));
    add("S11", "minus-arc", from_codes(5, {}, {2, 4, 12, 24, 30, 31, 32, 41, 43}));
    add("S12", "minus-arc", from_codes(5, {}, {3, 4, 12, 20, 24, 31, 32, 41, 43}));
    add("S13", "minus-arc", from_codes(5, {}, {2, 3, 4, 12, 24, 31, 32, 41, 43}));
    add("S14", "minus-arc", from_codes(5, {}, {2, 4, 12, 13, 24, 30, 32, 41, 43}));
    add("S15", "minus-arc",
        from_codes(6, {}, {2, 3, 5, 13, 21, 32, 40, 41, 42, 43, 51, 52, 53, 54}));
    add("S16", "minus-arc",
        from_codes(6, {}, {2, 3, 4, 5, 12, 13, 24, 32, 41, 43, 51, 52, 53, 54}));
    add("S17", "minus-arc",
        from_codes(6, {}, {2, 3, 4, 5, 12, 13, 14, 24, 32, 43, 51, 52, 53, 54}));
    add("S18", "minus-arc",
        from_codes(6, {}, {3, 20, 21, 23, 25, 31, 40, 41, 42, 43, 50, 51, 53, 54}));
    add("S19", "minus-arc",
        from_codes(6, {}, {2, 3, 21, 23, 25, 31, 40, 41, 42, 43, 50, 51, 53, 54}));
    add("B1", "bipartite", from_codes(7, {}, {4, 14, 15, 25, 26, 36, 42, 43, 50, 53, 60, 61}));
    add("B2", "bipartite",
        from_codes(8, {}, {5, 14, 15, 16, 25, 26, 27, 36, 40, 42, 43, 53, 60, 70, 71, 73}));
    add("B3", "bipartite", from_codes(7, {}, {4, 5, 15, 25, 26, 36, 41, 42, 43, 53, 60, 61}));
    add("B4", "bipartite", from_codes(6, {}, {3, 14, 25, 31, 32, 40, 42, 50, 51}));
    add("T202", "reflexive-multipartite",
        from_codes(6, {0, 1, 2, 3, 4, 5}, {1, 20, 21, 30, 31, 4, 5, 14, 15}));
    add("T1111", "reflexive-multipartite",
        from_codes(7, {0, 1, 2, 3, 4, 5, 6},
                   {1, 2, 12, 30, 31, 32, 4, 41, 42, 5, 15, 52, 6, 16, 26}));
    add("T10101", "reflexive-multipartite",
        from_codes(7, {0, 1, 2, 3, 4, 5, 6},
                   {1, 2, 3, 12, 13, 23, 40, 41, 42, 43, 5, 15, 52, 53, 6, 16, 26, 36}));
    add("REFLEXIVE_C3", "tournament-with-loops", reflexive_triangle());
    add("FENCE_6", "balanced", gen_fence(6));
    add("FENCE_8", "balanced", gen_fence(8));
    add("FENCE_10", "balanced", gen_fence(10));
    return out;
}

// Minimum row-major adjacency string over all relabelings; inputs stay small.
std::string canonical_string(const digraph& d) {
    int n = d.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s(static_cast<std::size_t>(n) * n, '0');
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d.has_arc(perm[i], perm[j])) s[static_cast<std::size_t>(i) * n + j] = '1';
        if (best.empty() || s < best) best = std::move(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

const std::vector<obstruction>& catalog() {
    static const std::vector<obstruction> entries = build_catalog();
    return entries;
}

const obstruction& catalog_entry(const std::string& name) {
    for (const obstruction& o : catalog())
        if (o.name == name) return o;
    throw std::invalid_argument("unknown obstruction name: " + name);
}

std::vector<obstruction> generate_T_circ(int max_n) {
    std::vector<obstruction> out;
    std::vector<std::string> seen;
    auto add = [&](std::string name, const digraph& d) {
        if (d.size() > max_n) return false;
        std::string c = canonical_string(d);
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) return false;
        seen.push_back(std::move(c));
        out.push_back(obstruction{std::move(name), d, "tournament-with-loops"});
        return true;
    };
    add("T0", t0_pattern());
    add("REFLEXIVE_C3", reflexive_triangle());
    const digraph t0 = t0_pattern();
    int next_id = 1;
    for (const char* base : {"T1", "T2", "T3", "T4", "T5", "T6"}) {
        const digraph& t = catalog_entry(base).pattern;
        int n = t.size();
        if (n > max_n) continue;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            // The loop set must induce a transitive subtournament.
            bool transitive = true;
            for (int a = 0; a < n && transitive; ++a)
                for (int b = a + 1; b < n && transitive; ++b)
                    for (int c = b + 1; c < n && transitive; ++c) {
                        if (!((mask >> a) & 1) || !((mask >> b) & 1) || !((mask >> c) & 1))
                            continue;
                        bool fwd = t.has_arc(a, b) && t.has_arc(b, c) && t.has_arc(c, a);
                        bool bwd = t.has_arc(a, c) && t.has_arc(c, b) && t.has_arc(b, a);
                        if (fwd || bwd) transitive = false;
                    }
            if (!transitive) continue;
            digraph decorated = t;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) decorated.add_arc(v, v);
            if (find_induced(decorated, t0)) continue;
            if (mask == 0) {
                add(base, decorated);
            } else if (add("TCIRC_" + std::to_string(next_id), decorated)) {
                ++next_id;
            }
        }
    }
    return out;
}

digraph gen_TT(int n) {
    if (n < 1) throw std::invalid_argument("transitive tournament needs at least one vertex");
    digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) d.add_arc(u, v);
    return d;
}

digraph gen_TT_star(int n) {
    if (n < 3) throw std::invalid_argument("source-sink reversal needs at least three vertices");
    digraph d = gen_TT(n);
    d.remove_arc(0, n - 1);
    d.add_arc(n - 1, 0);
    return d;
}

digraph gen_fence(int len) {
    if (len < 6 || len % 2 != 0)
        throw std::invalid_argument("a fence is an even cycle of length at least six");
    digraph d(len);
    for (int v = 1; v < len; v += 2) {
        d.add_arc(v, v - 1);
        d.add_arc(v, (v + 1) % len);
    }
    return d;
}

bool isomorphic(const digraph& a, const digraph& b) {
    if (a.size() != b.size() || a.arc_count() != b.arc_count()) return false;
    return canonical_string(a) == canonical_string(b);
}

std::optional<std::vector<int>> find_induced(const digraph& host, const digraph& pattern) {
    int k = pattern.size(), n = host.size();
    if (k > n) return std::nullopt;
    std::vector<int> pout(k), pin(k), hout(n), hin(n);
    for (int q = 0; q < k; ++q) {
        pout[q] = pattern.out_degree(q);
        pin[q] = pattern.in_degree(q);
    }
    for (int h = 0; h < n; ++h) {
        hout[h] = host.out_degree(h);
        hin[h] = host.in_degree(h);
    }
    std::vector<int> map(k, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> place = [&](int q) -> bool {
        if (q == k) return true;
        for (int h = 0; h < n; ++h) {
            if (used[h]) continue;
            if (host.has_loop(h) != pattern.has_loop(q)) continue;
            if (hout[h] < pout[q] || hin[h] < pin[q]) continue;
            bool ok = true;
            for (int r = 0; r < q && ok; ++r) {
                int g = map[r];
                if (pattern.has_arc(q, r) != host.has_arc(h, g) ||
                    pattern.has_arc(r, q) != host.has_arc(g, h))
                    ok = false;
            }
            if (!ok) continue;
            map[q] = h;
            used[h] = 1;
            if (place(q + 1)) return true;
            used[h] = 0;
            map[q] = -1;
        }
        return false;
    };
    if (place(0)) return map;
    return std::nullopt;
}

std::optional<triangle_pair> find_arc_disjoint_triangles(const digraph& d) {
    int n = d.size();
    std::vector<std::array<int, 3>> tris;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, a))
                    tris.push_back({a, b, c});
                if (d.has_arc(a, c) && d.has_arc(c, b) && d.has_arc(b, a))
                    tris.push_back({a, c, b});
            }
    auto arcs_of = [](const std::array<int, 3>& t) {
        return std::array<std::pair<int, int>, 3>{
            {{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}}};
    };
    for (std::size_t i = 0; i < tris.size(); ++i) {
        auto ai = arcs_of(tris[i]);
        for (std::size_t j = i + 1; j < tris.size(); ++j) {
            auto aj = arcs_of(tris[j]);
            bool disjoint = true;
            for (const auto& x : ai)
                for (const auto& y : aj)
                    if (x == y) disjoint = false;
            if (disjoint) return triangle_pair{tris[i], tris[j]};
        }
    }
    return std::nullopt;
}

} // namespace scd
