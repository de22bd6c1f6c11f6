#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "quandle/enumerate.hpp"
#include "quandle/families.hpp"
#include "quandle/hom.hpp"
#include "test_support.hpp"

using namespace quandle;

TEST_CASE("between trivial quandles every map is a homomorphism") {
    const auto homs = all_homs(trivial(2), trivial(3));
    CHECK(homs.size() == 9);
}

TEST_CASE("endomorphisms of the dihedral order-3 quandle are the affine maps") {
    const auto homs = all_homs(dihedral(3), dihedral(3));
    std::vector<std::vector<int>> expect;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            std::vector<int> f(3);
            for (int x = 0; x < 3; ++x) f[x] = (a * x + b) % 3;
            expect.push_back(std::move(f));
        }
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    CHECK(homs == expect);
    CHECK(homs.size() == 9);
}

TEST_CASE("constant maps are homomorphisms into any quandle") {
    std::mt19937 rng(67);
    for (int it = 0; it < 50; ++it) {
        const Table src = support::random_quandle(rng);
        const Table dst = support::random_quandle(rng);
        std::uniform_int_distribution<int> pick(0, dst.order() - 1);
        const int c = pick(rng);
        CHECK_NOTHROW(make_homomorphism(src, dst, std::vector<int>(src.order(), c)));
    }
}

TEST_CASE("make_homomorphism rejects non-homomorphisms") {
    // dihedral(3) -> dihedral(3), swap two elements without fixing the third
    CHECK_THROWS_AS(make_homomorphism(dihedral(3), dihedral(3), {1, 0, 0}), DomainError);
    CHECK_THROWS_AS(make_homomorphism(trivial(2), trivial(2), {0}), DomainError);
    CHECK_THROWS_AS(make_homomorphism(trivial(2), trivial(2), {0, 5}), DomainError);
}

TEST_CASE("hom search matches brute force for source and target orders <= 3") {
    std::vector<Table> small;
    for (int n = 1; n <= 3; ++n)
        for (const auto& e : enumerate_quandles(n).entries) small.push_back(e.table);
    for (const auto& src : small)
        for (const auto& dst : small) CHECK(all_homs(src, dst) == oracle::brute_force_homs(src, dst));
}

TEST_CASE("hom count is invariant under replacing either side by an isomorphic copy") {
    std::mt19937 rng(71);
    for (int it = 0; it < 40; ++it) {
        Table src = support::random_quandle(rng);
        Table dst = support::random_quandle(rng);
        if (src.order() > 4 || dst.order() > 4) continue;  // keep the search small
        const auto base = all_homs(src, dst).size();
        const Table src2 = relabel(src, support::random_perm(rng, src.order()));
        const Table dst2 = relabel(dst, support::random_perm(rng, dst.order()));
        CHECK(all_homs(src2, dst).size() == base);
        CHECK(all_homs(src, dst2).size() == base);
    }
}

TEST_CASE("every enumerated hom has a closed image") {
    std::mt19937 rng(73);
    for (int it = 0; it < 30; ++it) {
        const Table src = support::random_quandle(rng);
        const Table dst = support::random_quandle(rng);
        if (src.order() > 3 || dst.order() > 4) continue;
        for (const auto& f : all_homs(src, dst)) {
            std::vector<int> image(f);
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            CHECK(subquandle_closure(dst, image) == image);
        }
    }
}

TEST_CASE("kernel polynomial of the constant map between trivial quandles") {
    BivariatePoly expect;
    expect.add_term(1, 1, 2);  // 2st
    CHECK(kqp(trivial(2), trivial(3), {0, 0}) == expect);
}

TEST_CASE("kernel polynomial of isomorphisms is the constant order") {
    CHECK(kqp(dihedral(3), dihedral(3), {0, 1, 2}) == BivariatePoly::constant(3));
    std::mt19937 rng(79);
    for (int it = 0; it < 100; ++it) {
        const Table q = support::random_quandle(rng);
        const auto perm = support::random_perm(rng, q.order());
        const Table r = relabel(q, perm);
        CHECK(kqp(q, r, perm) == BivariatePoly::constant(q.order()));
    }
}

TEST_CASE("classify_hom flags") {
    const HomFlags id = classify_hom(dihedral(3), dihedral(3), {0, 1, 2});
    CHECK(id.injective);
    CHECK(id.surjective);
    const HomFlags constant = classify_hom(trivial(2), trivial(3), {0, 0});
    CHECK_FALSE(constant.injective);
    CHECK_FALSE(constant.surjective);
    // inclusion of the subquandle {1,2} of the order-4 two-orbit quandle
    const Table q = support::table_1b({{1, 1, 2, 2}, {2, 2, 1, 1}, {3, 3, 3, 3}, {4, 4, 4, 4}});
    CHECK_NOTHROW(make_homomorphism(trivial(2), q, {0, 1}));
    const HomFlags incl = classify_hom(trivial(2), q, {0, 1});
    CHECK(incl.injective);
    CHECK_FALSE(incl.surjective);
}

TEST_CASE("kqp exponents of injective homomorphisms are componentwise nonnegative") {
    std::vector<Table> small;
    for (int n = 1; n <= 4; ++n)
        for (const auto& e : enumerate_quandles(n).entries) small.push_back(e.table);
    int seen = 0;
    for (const auto& src : small)
        for (const auto& dst : small) {
            for (const auto& f : all_homs(src, dst)) {
                const HomFlags flags = classify_hom(src, dst, f);
                const BivariatePoly k = kqp(src, dst, f);
                if (flags.injective)
                    for (const auto& [key, coeff] : k.terms()) {
                        CHECK(key.first >= 0);
                        CHECK(key.second >= 0);
                    }
                ++seen;
            }
        }
    CHECK(seen > 1000);
}

TEST_CASE("the surjective sign rule has counterexamples") {
    // Collapsing the 2-element orbit of this quandle onto T_2 is surjective,
    // yet x_1 has column count 1 in the source and its image has column
    // count 2, so kqp contains a positive t-exponent. The fiber {x_2,x_3}
    // is permuted by the action of x_1 with no fixed point, which is what a
    // proof of the nonpositive-exponent rule would have to exclude.
    const Table src = support::table_1b({{1, 1, 1}, {3, 2, 2}, {2, 3, 3}});
    const Table dst = trivial(2);
    const std::vector<int> f = {0, 1, 1};
    CHECK_NOTHROW(make_homomorphism(src, dst, f));
    CHECK(classify_hom(src, dst, f).surjective);
    const BivariatePoly k = kqp(src, dst, f);
    BivariatePoly expect;
    expect.add_term(-1, 1, 1);
    expect.add_term(0, -1, 2);
    CHECK(k == expect);  // s^-1 t + 2 t^-1: positive t-exponent under a surjection
}

TEST_CASE("nonnegative exponents do not imply injectivity") {
    // the negative control: a constant map whose kernel polynomial is 2st
    const std::vector<int> f = {0, 0};
    const HomFlags flags = classify_hom(trivial(2), trivial(3), f);
    CHECK_FALSE(flags.injective);
    const BivariatePoly k = kqp(trivial(2), trivial(3), f);
    for (const auto& [key, coeff] : k.terms()) {
        CHECK(key.first >= 0);
        CHECK(key.second >= 0);
    }
}
