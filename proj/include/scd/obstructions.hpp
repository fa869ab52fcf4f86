#pragma once

#include "scd/digraph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace scd {

struct obstruction {
    std::string name;
    digraph pattern;
    std::string family;  // recognizer class whose no-certificates cite the pattern
};

// All fixed obstruction patterns, in a stable order.
const std::vector<obstruction>& catalog();

// Looks up a fixed obstruction by name.
// Throws std::invalid_argument for names not in catalog().
const obstruction& catalog_entry(const std::string& name);

// Obstructions for tournaments with loops, up to isomorphism: the mixed
// four-vertex tournament, the reflexive triangle, and every member of the
// irreflexive tournament family with loops added on a vertex set that induces
// a transitive subtournament and whose addition creates no induced mixed
// four-vertex tournament. Patterns larger than max_n are skipped.
std::vector<obstruction> generate_T_circ(int max_n);

// Transitive tournament on vertices 0..n-1 with arcs toward larger indices.
// Throws std::invalid_argument when n < 1.
digraph gen_TT(int n);

// gen_TT(n) with the source-to-sink arc (0, n-1) reversed.
// Throws std::invalid_argument when n < 3.
digraph gen_TT_star(int n);

// Oriented even cycle 0-1-...-(len-1)-0 in which every odd vertex dominates
// both neighbors. Throws std::invalid_argument unless len is even and >= 6.
digraph gen_fence(int len);

// True iff the two digraphs are related by a vertex relabeling. Intended for
// pattern-sized inputs; the check enumerates permutations.
bool isomorphic(const digraph& a, const digraph& b);

// Injective map from pattern vertices to host vertices preserving arcs,
// non-arcs, and loop status. map[i] is the host vertex for pattern vertex i.
std::optional<std::vector<int>> find_induced(const digraph& host, const digraph& pattern);

struct triangle_pair {
    std::array<int, 3> first, second;  // directed 3-cycles v0 -> v1 -> v2 -> v0
};

// Two directed triangles sharing no arc; shared vertices are allowed.
// Deterministic: triangles are enumerated as lexicographic triples rotated to
// start at their smallest vertex and the first disjoint pair is returned.
std::optional<triangle_pair> find_arc_disjoint_triangles(const digraph& d);

}  // namespace scd
