#pragma once

#include <optional>
#include <vector>

#include "quandle/errors.hpp"

namespace quandle {

// Operation table of a finite magma on {0..n-1}, row-major: op(i,j) is
// x_i > x_j (row = element acted on, column = acting element). Immutable
// after construction; all operations on it are pure functions.
//
// External text and JSON use 1-based entries to match the usual matrix
// convention; everything in memory is 0-based.
class Table {
public:
    Table() = default;

    // rows must be square with entries in 0..n-1; throws ParseError otherwise.
    static Table from_rows(const std::vector<std::vector<int>>& rows);
    static Table from_flat(int n, std::vector<int> flat);

    // build from a callable op(i,j) -> 0-based element
    template <typename F>
    static Table from_op(int n, F&& f) {
        std::vector<int> flat;
        flat.reserve(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) flat.push_back(f(i, j));
        return from_flat(n, std::move(flat));
    }

    int order() const { return n_; }
    int op(int i, int j) const { return tab_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<int>& flat() const { return tab_; }

    friend bool operator==(const Table&, const Table&) = default;
    // lexicographic on (order, flattened entries)
    friend bool operator<(const Table& a, const Table& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.tab_ < b.tab_;
    }

private:
    int n_ = 0;
    std::vector<int> tab_;
};

struct AlgebraClass {
    bool is_shelf = false;      // right self-distributive
    bool is_rack = false;       // shelf + every column a bijection
    bool is_quandle = false;    // rack + idempotent diagonal
    bool is_latin = false;      // quandle + every row a bijection
    bool is_connected = false;  // quandle + single orbit

    friend bool operator==(const AlgebraClass&, const AlgebraClass&) = default;
};

// r[i] = #{j : x_i > x_j = x_i}   (row count)
// c[i] = #{j : x_j > x_i = x_j}   (column count)
struct CountProfile {
    std::vector<int> r;
    std::vector<int> c;

    friend bool operator==(const CountProfile&, const CountProfile&) = default;
};

AlgebraClass classify(const Table& t);
CountProfile count_profile(const Table& t);

// Partition of {0..n-1} into minimal subsets closed under the right action
// and its inverse; blocks ordered by least element, elements ascending.
std::vector<std::vector<int>> orbits(const Table& t);

// Smallest superset of seed closed under the operation. For finite racks
// closure under > alone also gives closure under the inverse action, since
// right translations restrict to bijections of the closed set.
std::vector<int> subquandle_closure(const Table& t, const std::vector<int>& seed);

// perm[old] = new label; result[perm[i]][perm[j]] = perm[op(i,j)]
Table relabel(const Table& t, const std::vector<int>& perm);

// Relabeling f with f(x > y) = f(x) > f(y), or nullopt. Pruned backtracking
// over bijections, image candidates restricted by (r,c) counts.
std::optional<std::vector<int>> find_isomorphism(const Table& a, const Table& b);

// Lexicographically least table (row-major flattening) over all n!
// relabelings. canonical_form(a) == canonical_form(b) iff a, b isomorphic.
// Orders above max_order are rejected with DomainError.
Table canonical_form(const Table& t, int max_order = 8);

// True iff t == canonical_form(t); aborts early, much cheaper on
// non-canonical tables.
bool is_canonical_form(const Table& t, int max_order = 8);

}  // namespace quandle
