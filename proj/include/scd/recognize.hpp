#pragma once

#include "scd/digraph.hpp"
#include "scd/gamma.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scd {

// No-certificate payload. The flat shape mirrors the JSON the CLI emits.
struct certificate {
    enum class kind {
        named_obstruction,       // name from the catalog families; vertices =
                                 // embedding image in pattern vertex order
        arc_disjoint_triangles,  // vertices = both triangles in cycle order,
                                 // first then second
        structural_violation,    // detail = violation kind; vertices = witness
        oracle_exhausted,        // search gave up; never certified
    };
    kind type = kind::structural_violation;
    std::string name;
    std::string detail;
    std::vector<int> vertices;
};

struct recognition_result {
    bool strongly_chordal = false;
    bool certified = true;  // false when the verdict lacks independent evidence
    std::string class_used;
    std::vector<int> ordering;          // filled iff strongly_chordal
    std::optional<certificate> reason;  // filled iff not strongly_chordal
};

// Positions of an irreflexive tournament that is transitive or one arc
// reversal away from transitive: order[p] beats every later position, except
// that order[b] beats order[a] when a reversal is present (a = b = -1
// otherwise). Nothing when the tournament is not of this shape.
struct reversal_form {
    std::vector<int> order;
    int a = -1, b = -1;
};
std::optional<reversal_form> transitive_or_one_reversal(const digraph& d);

// Certifying recognizer for irreflexive tournaments: yes iff no two
// arc-disjoint triangles exist; no-certificates are such a pair.
// Throws std::invalid_argument unless D is an irreflexive tournament.
recognition_result recognize_irreflexive_tournament(const digraph& d);

// Certifying recognizer for tournaments with loops allowed. Yes iff every
// nontrivial strong component but at most one is absent and that component
// carries a valid arrangement (see recognize_tournament.cpp for the two
// admissible component forms). Throws std::invalid_argument unless D is a
// tournament.
recognition_result recognize_tournament_with_loops(const digraph& d);

// Splits a bipartite tournament into the two one-way bigraphs: the first
// keeps X->Y arcs (rows xs, columns ys), the second keeps Y->X arcs (rows ys,
// columns xs). The two biadjacency matrices are complement-transposes.
// Throws std::invalid_argument when an arc joins two vertices of one part.
std::pair<bigraph, bigraph> one_way_bigraphs(const digraph& d, const std::vector<int>& xs,
                                             const std::vector<int>& ys);

// Inclusion orders of both parts of a bigraph, or a 2K2 witness.
struct chain_orderings {
    bool chain = false;
    std::vector<int> rows, cols;   // neighborhood-descending orders when chain
    std::array<int, 4> witness{};  // rows r1, r2 and columns c1, c2 with
                                   // edges (r1,c1), (r2,c2) only
};
chain_orderings is_bipartite_chain(const bigraph& g);

// Certifying recognizer for irreflexive bipartite tournaments. The verdict
// "no" is uncertified exactly when both one-way bigraphs are connected.
// Throws std::invalid_argument when the input is not an irreflexive digraph
// whose underlying graph is complete bipartite.
recognition_result recognize_irreflexive_bipartite(const digraph& d);

// The eight positional critical-arc conditions for a transitive tournament
// with the arc spanning positions a < b reversed (1-based positions; pass
// a = b = 0 when no arc is reversed). Returns the first satisfied condition's
// index, or nothing when (x, y) is non-critical.
// Throws std::invalid_argument on out-of-range positions.
std::optional<int> is_critical_arc(int n, int a, int b, int x, int y);

// Certifying recognizer for irreflexive tournaments minus one arc.
// Throws std::invalid_argument unless exactly one vertex pair is non-adjacent
// and all others are joined by exactly one arc, loops absent.
recognition_result recognize_tournament_minus_arc(const digraph& d);

// Level of each vertex of s: its number of in-neighbors inside t. Requires D
// restricted to t to be a transitive tournament and every s-vertex to
// dominate exactly the positions after its level; throws std::invalid_argument
// otherwise.
std::vector<int> levels(const digraph& d, const std::vector<int>& t, const std::vector<int>& s);

// Certifying recognizer for reflexive multipartite tournaments. Class
// membership failures are reported in-band as structural violations
// (not-reflexive, not-complete-split), matching the staged certificate
// design; class members failing a stage get directed-cycle witnesses or a
// named obstruction among T202, T1111, T10101.
recognition_result recognize_reflexive_multipartite(const digraph& d);

// Partition of an irreflexive digraph into layers such that every arc steps
// one layer forward, per weakly connected component (components concatenated,
// each normalized to start at layer 0). Inconsistency yields ok = false plus
// a closed walk with unequal forward and backward arc counts.
// Throws std::invalid_argument when a loop is present.
struct layering_result {
    bool ok = true;
    std::vector<std::vector<int>> layers;
    std::vector<int> witness;
};
layering_result layering(const digraph& d);

// Certifying recognizer for balanced digraphs: every consecutive-layer
// bigraph must admit a gamma-free biadjacency ordering. No-certificates are
// induced fences when one is found; otherwise the verdict degrades to
// uncertified.
recognition_result recognize_balanced(const digraph& d);

// Classifies the input and dispatches to the matching recognizer; digraphs
// outside every supported class fall back to the ordering search under the
// given budget.
recognition_result recognize_auto(const digraph& d,
                                  long long oracle_budget = default_oracle_budget);

}  // namespace scd
