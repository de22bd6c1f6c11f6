#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "quandle/families.hpp"
#include "quandle/poly.hpp"
#include "test_support.hpp"

using namespace quandle;
using support::table_1b;

namespace {

BivariatePoly poly(std::initializer_list<std::tuple<int, int, int>> terms) {
    BivariatePoly p;
    for (const auto& [es, et, c] : terms) p.add_term(es, et, c);
    return p;
}

}  // namespace

TEST_CASE("qp of trivial quandles is n s^n t^n") {
    for (int n = 1; n <= 8; ++n) {
        BivariatePoly expect;
        expect.add_term(n, n, n);
        CHECK(qp(trivial(n)) == expect);
    }
}

TEST_CASE("qp of the order-4 two-orbit quandle") {
    const Table q = table_1b({{1, 1, 2, 2}, {2, 2, 1, 1}, {3, 3, 3, 3}, {4, 4, 4, 4}});
    CHECK(qp(q) == poly({{2, 4, 2}, {4, 2, 2}}));
}

TEST_CASE("qp distinguishes the two order-6 quandles with equal orbits") {
    const Table a = table_1b({{1, 3, 2, 1, 1, 1},
                              {3, 2, 1, 2, 2, 2},
                              {2, 1, 3, 3, 3, 3},
                              {4, 4, 4, 4, 6, 5},
                              {5, 5, 5, 6, 5, 4},
                              {6, 6, 6, 5, 4, 6}});
    const Table b = table_1b({{1, 3, 2, 1, 3, 2},
                              {3, 2, 1, 3, 2, 1},
                              {2, 1, 3, 2, 1, 3},
                              {4, 6, 5, 4, 6, 5},
                              {6, 5, 4, 6, 5, 4},
                              {5, 4, 6, 5, 4, 6}});
    CHECK(qp(a) == poly({{4, 4, 6}}));
    CHECK(qp(b) == poly({{2, 2, 6}}));
}

TEST_CASE("qp of the all-zero-profile rack is the constant n") {
    CHECK(qp(constant_rack(3, 1)) == BivariatePoly::constant(3));
    CHECK(canonical_text(qp(constant_rack(4, 3))) == "4");
}

TEST_CASE("subquandle polynomial: embeddings of trivial subquandles differ") {
    const Table q = table_1b({{1, 1, 2, 2}, {2, 2, 1, 1}, {3, 3, 3, 3}, {4, 4, 4, 4}});
    CHECK(sub_qp(q, {0, 1}) == poly({{2, 4, 2}}));
    CHECK(sub_qp(q, {2, 3}) == poly({{4, 2, 2}}));
    CHECK(sub_qp(q, {0, 1, 2, 3}) == qp(q));
    CHECK_THROWS_AS(sub_qp(dihedral(3), {0, 1}), DomainError);  // not closed
}

TEST_CASE("orbit subquandle polynomials sum to qp") {
    std::mt19937 rng(31);
    for (int it = 0; it < 300; ++it) {
        const Table q = support::random_quandle(rng);
        BivariatePoly total;
        for (const auto& block : orbits(q)) total += sub_qp(q, block);
        CHECK(total == qp(q));
    }
}

TEST_CASE("evaluate: qp(1,1) is the order") {
    CHECK(evaluate(qp(trivial(3)), 1, 1) == 3);
    CHECK(evaluate(poly({{4, 4, 6}}), 1, 1) == 6);
    std::mt19937 rng(37);
    for (int it = 0; it < 300; ++it) {
        const Table q = support::random_quandle(rng);
        CHECK(evaluate(qp(q), 1, 1) == q.order());
    }
}

TEST_CASE("evaluate agrees with the independent evaluator") {
    CHECK(evaluate(poly({{2, 4, 2}, {4, 2, 2}}), 2, 1) == 40);
    CHECK(oracle::evaluate_reference(poly({{2, 4, 2}, {4, 2, 2}}), 2, 1) == 40);
    std::mt19937 rng(41);
    for (int it = 0; it < 200; ++it) {
        const Table q = support::random_quandle(rng);
        std::uniform_int_distribution<int> base(-3, 3);
        const long long s0 = base(rng), t0 = base(rng);
        CHECK(evaluate(qp(q), s0, t0) == oracle::evaluate_reference(qp(q), s0, t0));
    }
}

TEST_CASE("evaluate: negative exponents need unit bases") {
    BivariatePoly p;
    p.add_term(-1, 0, 2);
    CHECK(evaluate(p, 1, 5) == 2);
    CHECK(evaluate(p, -1, 5) == -2);
    CHECK_THROWS_AS(evaluate(p, 0, 5), DomainError);
    CHECK_THROWS_AS(evaluate(p, 2, 5), DomainError);
}

TEST_CASE("row and column polynomials") {
    CHECK(row_poly(trivial(3)) == poly({{3, 0, 3}}));
    CHECK(col_poly(trivial(3)) == poly({{0, 3, 3}}));
    CHECK(row_poly(dihedral(3)) == poly({{1, 0, 3}}));
    CHECK(col_poly(dihedral(3)) == poly({{0, 1, 3}}));
    const Table b = table_1b({{1, 3, 2, 1, 3, 2},
                              {3, 2, 1, 3, 2, 1},
                              {2, 1, 3, 2, 1, 3},
                              {4, 6, 5, 4, 6, 5},
                              {6, 5, 4, 6, 5, 4},
                              {5, 4, 6, 5, 4, 6}});
    CHECK(canonical_text(row_poly(b)) == "6s^2");
    CHECK(canonical_text(col_poly(b)) == "6t^2");
}

TEST_CASE("canonical text formatting") {
    CHECK(canonical_text(poly({{1, 1, 3}})) == "3st");
    CHECK(canonical_text(poly({{3, 5, 3}, {5, 2, 2}})) == "3s^3t^5 + 2s^5t^2");
    CHECK(canonical_text(BivariatePoly{}) == "0");
    CHECK(canonical_text(poly({{2, 4, 1}})) == "s^2t^4");
    CHECK(canonical_text(poly({{0, 0, 4}})) == "4");
    CHECK(canonical_text(poly({{0, 0, 1}})) == "1");
    CHECK(canonical_text(poly({{-1, 2, 2}})) == "2s^-1t^2");
    CHECK(canonical_text(poly({{0, 1, -1}, {1, 0, 1}})) == "-t + s");
}

TEST_CASE("qp invariant under relabeling") {
    std::mt19937 rng(43);
    for (int it = 0; it < 300; ++it) {
        const Table q = support::random_quandle(rng);
        const Table r = relabel(q, support::random_perm(rng, q.order()));
        CHECK(qp(q) == qp(r));
    }
}

TEST_CASE("latin quandles have qp = n st") {
    std::mt19937 rng(47);
    for (int it = 0; it < 300; ++it) {
        const Table q = support::random_latin_quandle(rng);
        BivariatePoly expect;
        expect.add_term(1, 1, q.order());
        CHECK(qp(q) == expect);
    }
}

TEST_CASE("canonical text round-trips through the parser") {
    CHECK(parse_poly("3s^3t^5 + 2s^5t^2") == poly({{3, 5, 3}, {5, 2, 2}}));
    CHECK(parse_poly("0") == BivariatePoly{});
    CHECK_THROWS_AS(parse_poly("3st +"), ParseError);
    CHECK_THROWS_AS(parse_poly("1st"), ParseError);  // not canonical
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> exp(-4, 4), coeff(-9, 9), nterms(0, 5);
    for (int it = 0; it < 500; ++it) {
        BivariatePoly p;
        const int k = nterms(rng);
        for (int i = 0; i < k; ++i) p.add_term(exp(rng), exp(rng), coeff(rng));
        CHECK(parse_poly(canonical_text(p)) == p);
    }
}

TEST_CASE("zpoly text and arithmetic") {
    ZPoly z;
    z.add_term(1, 3);
    z.add_term(3, 6);
    CHECK(canonical_text(z) == "3z + 6z^3");
    ZPoly c;
    c.add_term(0, 9);
    CHECK(canonical_text(c) == "9");
    ZPoly u;
    u.add_term(4, 2);
    CHECK(canonical_text(u) == "2z^4");
    u.add_term(4, -2);
    CHECK(u.is_zero());
}
