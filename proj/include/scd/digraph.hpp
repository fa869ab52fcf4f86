#pragma once

#include <cstdint>
#include <vector>

namespace scd {

using word = std::uint64_t;

// Directed graph on dense 0-based vertices, loops stored on the diagonal.
// Adjacency is kept both row-wise (out-arcs) and column-wise (in-arcs) as
// bit rows, so neighborhood tests run a word at a time. Instances are cheap
// to copy at the sizes this library targets and every operation is const
// after construction, so values can be shared across threads freely.
class digraph {
public:
    digraph() = default;
    explicit digraph(int n);

    int size() const { return n_; }
    int words_per_row() const { return words_; }

    void add_arc(int u, int v); // u == v adds a loop
    void remove_arc(int u, int v);
    bool has_arc(int u, int v) const;
    bool has_loop(int v) const { return has_arc(v, v); }

    // Raw bit rows; bit v of out_row(u) is the arc (u,v).
    const word* out_row(int u) const { return fwd_.data() + static_cast<std::size_t>(u) * words_; }
    const word* in_row(int v) const { return rev_.data() + static_cast<std::size_t>(v) * words_; }

    std::vector<int> out_neighbors(int u) const;
    std::vector<int> in_neighbors(int v) const;
    int out_degree(int u) const;
    int in_degree(int v) const;
    long long arc_count() const; // loops included

    // A vertex is simplicial when it is irreflexive, or reflexive and every
    // in-neighbor reaches every out-neighbor directly. Simple additionally
    // requires the out-neighborhoods of in-neighbors and the in-neighborhoods
    // of out-neighbors to form inclusion chains. A peak sits in the middle of
    // a transitive triple.
    bool is_simplicial(int v) const;
    bool is_simple(int v) const;
    bool is_peak(int v) const;

    // Strongly connected components in a topological order of the
    // condensation; loops do not affect connectivity.
    std::vector<std::vector<int>> strong_components() const;

    // Non-adjacent, same loop status, and identical in- and out-neighborhoods
    // outside {u, v}.
    bool are_false_twins(int u, int v) const;

    // Vertices of s renumbered in increasing original order; loops kept.
    digraph induced_subdigraph(const std::vector<int>& s) const;

    // Symmetric closure without loops.
    digraph underlying_graph() const;

    bool operator==(const digraph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<word> fwd_;
    std::vector<word> rev_;
};

// 0/1 matrix with the original identity of each row and column, used for
// bi-adjacency matrices of bipartite structures.
struct bigraph {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> a; // row-major
    std::vector<int> row_labels;
    std::vector<int> col_labels;

    bigraph() = default;
    bigraph(int r, int c);

    std::uint8_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    bool operator==(const bigraph&) const = default;
};

// The bigraph whose bi-adjacency matrix equals the adjacency matrix of d:
// rows and columns are both copies of the vertex set.
bigraph split_bigraph(const digraph& d);

// Bits set in the first n positions of a row.
std::vector<int> row_bits(const word* row, int n);
int row_popcount(const word* row, int words);

} // namespace scd
