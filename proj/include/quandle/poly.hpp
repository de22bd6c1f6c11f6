#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quandle/table.hpp"

namespace quandle {

using Int = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial over Z in two variables s, t. Terms are kept in
// an ordered map from (s-exponent, t-exponent) to a nonzero coefficient, so
// iteration order is the canonical ascending-lex term order.
class BivariatePoly {
public:
    using Key = std::pair<int, int>;  // (es, et)

    BivariatePoly() = default;
    static BivariatePoly constant(Int c);

    void add_term(int es, int et, const Int& coeff);
    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BivariatePoly& operator+=(const BivariatePoly& o);
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;
    friend bool operator<(const BivariatePoly& a, const BivariatePoly& b) {
        return a.terms_ < b.terms_;
    }

private:
    std::map<Key, Int> terms_;
};

// Laurent polynomial over Z in one variable z.
class ZPoly {
public:
    ZPoly() = default;

    void add_term(long long ez, const Int& coeff);
    const std::map<long long, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const ZPoly&, const ZPoly&) = default;

private:
    std::map<long long, Int> terms_;
};

// Multiset of polynomial values; keys in canonical term order, multiplicities
// positive.
using PolyMultiset = std::map<BivariatePoly, Int>;

// sum over x of s^r(x) t^c(x); accepts racks, whose counts may be zero
BivariatePoly qp(const Table& t);

// same sum restricted to members, with counts taken in the ambient table.
// members must be closed under the operation (DomainError otherwise).
BivariatePoly sub_qp(const Table& t, const std::vector<int>& members);

// qp with t = 1 collapsed onto s, and with s = 1 collapsed onto t
BivariatePoly row_poly(const Table& t);
BivariatePoly col_poly(const Table& t);

// Exact integer evaluation. Negative exponents require the corresponding
// base to be +1 or -1 (anything else has no exact integer power); violations
// raise DomainError.
Int evaluate(const BivariatePoly& p, long long s0, long long t0);

// Ascending-lex term order; coefficient 1 elided, exponent-0 factors elided,
// exponent 1 printed bare. "3s^3t^5 + 2s^5t^2", "3st", "0".
std::string canonical_text(const BivariatePoly& p);
std::string canonical_text(const ZPoly& p);

// inverse of canonical_text; ParseError on anything it would not print
BivariatePoly parse_poly(const std::string& text);

}  // namespace quandle
