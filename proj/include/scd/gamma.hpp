#pragma once

#include "scd/digraph.hpp"

#include <optional>
#include <vector>

namespace scd {

// Positions in a permuted matrix witnessing the forbidden pattern: rows i < j
// and columns k < l with entries (i,k) = (i,l) = (j,k) = 1 and (j,l) = 0.
struct gamma_violation {
    int i = 0, j = 0, k = 0, l = 0;
};

// Rows and columns of a square submatrix of size >= 3 that has exactly two
// ones in every selected row and column, listed in cycle order.
struct cycle_matrix_witness {
    std::vector<int> rows, cols;
};

// Checks the symmetric ordering ord of D's vertices for the gamma pattern in
// the permuted adjacency matrix. Returns the lexicographically first
// violation by (i, j, k, l), or nothing when the ordering is strong.
// Throws std::invalid_argument unless ord is a permutation of all vertices.
std::optional<gamma_violation> check_strong_ordering(const digraph& d,
                                                     const std::vector<int>& ord);

// True iff for each position p the vertex ord[p] is simple in the subdigraph
// induced by ord[p..n-1].
bool check_simple_ordering(const digraph& d, const std::vector<int>& ord);

struct oracle_result {
    enum class outcome { found, none, exhausted };
    outcome status = outcome::none;
    std::vector<int> ordering;  // filled iff status == found
    long long nodes = 0;        // placements attempted by the search
};

inline constexpr long long default_oracle_budget = 20'000'000;

// Backtracking search for a strong ordering. Vertices are tried in ascending
// index order, so the result is deterministic. Exceeding the node budget
// yields outcome::exhausted; it is a value, not an error.
oracle_result find_strong_ordering(const digraph& d,
                                   long long budget = default_oracle_budget);

// Exhaustive cycle-submatrix search. Returns nothing iff the matrix is
// totally balanced. Throws std::invalid_argument when either dimension
// exceeds dim_bound and std::runtime_error if the search budget is hit.
std::optional<cycle_matrix_witness> is_totally_balanced_bruteforce(const bigraph& m,
                                                                   int dim_bound = 12);

// Gamma check for a rectangular matrix under independent row and column
// permutations. Returns the lexicographically first violation in permuted
// positions. Throws std::invalid_argument unless row_order and col_order are
// permutations of the rows and columns of b.
std::optional<gamma_violation> check_gamma_free(const bigraph& b,
                                                const std::vector<int>& row_order,
                                                const std::vector<int>& col_order);

struct biadjacency_orderings {
    bool found = false;
    bool confident = true;  // false only for a failed greedy with no exhaustive fallback
    std::vector<int> row_order, col_order;
};

// Searches for row and column permutations making b's matrix gamma-free.
// A doubly-lexical greedy is tried first and its output re-verified; when it
// fails and the smaller dimension is at most 8, an exhaustive search decides.
// Beyond that threshold a greedy failure is reported with confident == false.
biadjacency_orderings gamma_free_biadjacency(const bigraph& b);

}  // namespace scd
