#pragma once

#include <vector>

#include "quandle/poly.hpp"
#include "quandle/table.hpp"

namespace quandle {

// map[x] = image of x; verified to satisfy map(x > y) = map(x) > map(y)
struct Homomorphism {
    Table source;
    Table target;
    std::vector<int> map;
};

// throws DomainError when map is not a homomorphism source -> target
Homomorphism make_homomorphism(Table source, Table target, std::vector<int> map);

// Complete list of homomorphisms, ordered lexicographically by image tuple.
// Backtracking on element images with constraint propagation through
// map(x > y) = map(x) > map(y).
std::vector<std::vector<int>> all_homs(const Table& src, const Table& dst);

// sum over x of s^(r(f(x)) - r(x)) t^(c(f(x)) - c(x)); counts for x taken in
// the source, counts for f(x) in the target. Exponents may be negative.
BivariatePoly kqp(const Table& src, const Table& dst, const std::vector<int>& map);
inline BivariatePoly kqp(const Homomorphism& h) { return kqp(h.source, h.target, h.map); }

struct HomFlags {
    bool injective = false;
    bool surjective = false;
};
HomFlags classify_hom(const Table& src, const Table& dst, const std::vector<int>& map);

}  // namespace quandle
