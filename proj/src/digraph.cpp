#include "scd/digraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace scd {

digraph::digraph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    fwd_.assign(static_cast<std::size_t>(n_) * words_, 0);
    rev_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void digraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
}

void digraph::add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    fwd_[static_cast<std::size_t>(u) * words_ + v / 64] |= word{1} << (v % 64);
    rev_[static_cast<std::size_t>(v) * words_ + u / 64] |= word{1} << (u % 64);
}

void digraph::remove_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    fwd_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(word{1} << (v % 64));
    rev_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(word{1} << (u % 64));
}

bool digraph::has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (fwd_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

std::vector<int> row_bits(const word* row, int n) {
    std::vector<int> out;
    int words = (n + 63) / 64;
    for (int w = 0; w < words; ++w) {
        word x = row[w];
        while (x) {
            int b = std::countr_zero(x);
            int v = w * 64 + b;
            if (v < n) out.push_back(v);
            x &= x - 1;
        }
    }
    return out;
}

int row_popcount(const word* row, int words) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(row[w]);
    return c;
}

std::vector<int> digraph::out_neighbors(int u) const {
    check_vertex(u);
    return row_bits(out_row(u), n_);
}

std::vector<int> digraph::in_neighbors(int v) const {
    check_vertex(v);
    return row_bits(in_row(v), n_);
}

int digraph::out_degree(int u) const {
    check_vertex(u);
    return row_popcount(out_row(u), words_);
}

int digraph::in_degree(int v) const {
    check_vertex(v);
    return row_popcount(in_row(v), words_);
}

long long digraph::arc_count() const {
    long long c = 0;
    for (int v = 0; v < n_; ++v) c += out_degree(v);
    return c;
}

namespace {

// row_a subset of row_b over the first `words` words
bool row_subset(const word* a, const word* b, int words) {
    for (int w = 0; w < words; ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

bool rows_intersect(const word* a, const word* b, int words) {
    for (int w = 0; w < words; ++w)
        if (a[w] & b[w]) return true;
    return false;
}

} // namespace

bool digraph::is_simplicial(int v) const {
    check_vertex(v);
    if (!has_loop(v)) return true;
    for (int u : in_neighbors(v))
        if (!row_subset(out_row(v), out_row(u), words_)) return false;
    return true;
}

bool digraph::is_simple(int v) const {
    if (!is_simplicial(v)) return false;
    auto chain = [&](const std::vector<int>& set, auto row_of) {
        for (std::size_t i = 0; i < set.size(); ++i)
            for (std::size_t j = i + 1; j < set.size(); ++j) {
                const word* a = row_of(set[i]);
                const word* b = row_of(set[j]);
                if (!row_subset(a, b, words_) && !row_subset(b, a, words_)) return false;
            }
        return true;
    };
    return chain(in_neighbors(v), [&](int u) { return out_row(u); }) &&
           chain(out_neighbors(v), [&](int u) { return in_row(u); });
}

bool digraph::is_peak(int v) const {
    check_vertex(v);
    for (int u : in_neighbors(v))
        if (rows_intersect(out_row(u), out_row(v), words_)) return true;
    return false;
}

std::vector<std::vector<int>> digraph::strong_components() const {
    // Kosaraju over the bit rows; the second pass discovers components in
    // condensation order.
    std::vector<word> unseen(static_cast<std::size_t>(words_), 0);
    auto reset = [&] {
        for (int v = 0; v < n_; ++v) unseen[v >> 6] |= word{1} << (v & 63);
    };
    auto take = [&](int v) { unseen[v >> 6] &= ~(word{1} << (v & 63)); };
    auto next_unseen = [&](const word* row) {
        for (int i = 0; i < words_; ++i)
            if (word w = row[i] & unseen[i]) return i * 64 + std::countr_zero(w);
        return -1;
    };
    reset();
    std::vector<int> finish;
    finish.reserve(n_);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (!(unseen[s >> 6] >> (s & 63) & 1)) continue;
        take(s);
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            int u = next_unseen(out_row(v));
            if (u >= 0) {
                take(u);
                stack.push_back(u);
            } else {
                finish.push_back(v);
                stack.pop_back();
            }
        }
    }
    reset();
    std::vector<std::vector<int>> comps;
    for (int idx = n_ - 1; idx >= 0; --idx) {
        int s = finish[idx];
        if (!(unseen[s >> 6] >> (s & 63) & 1)) continue;
        take(s);
        std::vector<int> comp;
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            int u;
            while ((u = next_unseen(in_row(v))) >= 0) {
                take(u);
                stack.push_back(u);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool digraph::are_false_twins(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("false twin test needs two distinct vertices");
    if (has_arc(u, v) || has_arc(v, u)) return false;
    if (has_loop(u) != has_loop(v)) return false;
    for (int w = 0; w < words_; ++w) {
        word mask = ~word{0};
        if (u / 64 == w) mask &= ~(word{1} << (u % 64));
        if (v / 64 == w) mask &= ~(word{1} << (v % 64));
        if ((out_row(u)[w] & mask) != (out_row(v)[w] & mask)) return false;
        if ((in_row(u)[w] & mask) != (in_row(v)[w] & mask)) return false;
    }
    return true;
}

digraph digraph::induced_subdigraph(const std::vector<int>& s) const {
    std::vector<int> keep = s;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int v : keep) check_vertex(v);
    digraph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (has_arc(keep[i], keep[j])) out.add_arc(static_cast<int>(i), static_cast<int>(j));
    return out;
}

digraph digraph::underlying_graph() const {
    digraph out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_arc(u, v) || has_arc(v, u)) {
                out.add_arc(u, v);
                out.add_arc(v, u);
            }
    return out;
}

bigraph::bigraph(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {
    row_labels.resize(r);
    col_labels.resize(c);
    for (int i = 0; i < r; ++i) row_labels[i] = i;
    for (int j = 0; j < c; ++j) col_labels[j] = j;
}

bigraph split_bigraph(const digraph& d) {
    bigraph b(d.size(), d.size());
    for (int u = 0; u < d.size(); ++u)
        for (int v = 0; v < d.size(); ++v)
            if (d.has_arc(u, v)) b.at(u, v) = 1;
    return b;
}

} // namespace scd
