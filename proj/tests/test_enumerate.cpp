#include <set>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "quandle/enumerate.hpp"
#include "quandle/poly.hpp"
#include "test_support.hpp"

using namespace quandle;

namespace {

std::multiset<std::string> qp_texts(const Catalog& cat) {
    std::multiset<std::string> out;
    for (const auto& e : cat.entries) out.insert(canonical_text(e.qp));
    return out;
}

}  // namespace

TEST_CASE("census of quandles by order") {
    CHECK(enumerate_quandles(1).entries.size() == 1);
    CHECK(enumerate_quandles(2).entries.size() == 1);
    CHECK(enumerate_quandles(3).entries.size() == 3);
    CHECK(enumerate_quandles(4).entries.size() == 7);
    CHECK(enumerate_quandles(5).entries.size() == 22);
}

TEST_CASE("census of quandles of order 6") {
    CHECK(enumerate_quandles(6).entries.size() == 73);
}

TEST_CASE("order bounds are enforced") {
    CHECK_THROWS_AS(enumerate_quandles(0), DomainError);
    CHECK_THROWS_AS(enumerate_quandles(8), DomainError);
    CHECK_THROWS_AS(check_latin_conjecture(9), DomainError);
}

TEST_CASE("qp multiset for order 3") {
    const auto texts = qp_texts(enumerate_quandles(3));
    const std::multiset<std::string> expect = {"3s^3t^3", "2s^2t^3 + s^3t", "3st"};
    CHECK(texts == expect);
}

TEST_CASE("order-5 catalog repeats the expected polynomials") {
    const auto texts = qp_texts(enumerate_quandles(5));
    CHECK(texts.count("5st") == 3);
    CHECK(texts.count("3s^3t^5 + 2s^5t^2") == 2);
}

TEST_CASE("every catalog entry is a canonical quandle") {
    for (int n = 1; n <= 5; ++n) {
        const Catalog cat = enumerate_quandles(n);
        for (const auto& e : cat.entries) {
            CHECK(e.table.order() == n);
            CHECK(e.flags.is_quandle);
            CHECK(is_canonical_form(e.table));
            CHECK(e.qp == qp(e.table));
            CHECK(e.flags == classify(e.table));
        }
        for (std::size_t i = 1; i < cat.entries.size(); ++i)
            CHECK(cat.entries[i - 1].table < cat.entries[i].table);
    }
}

TEST_CASE("catalog entries are pairwise non-isomorphic (order <= 4)") {
    for (int n = 1; n <= 4; ++n) {
        const Catalog cat = enumerate_quandles(n);
        for (std::size_t i = 0; i < cat.entries.size(); ++i)
            for (std::size_t j = i + 1; j < cat.entries.size(); ++j)
                CHECK_FALSE(
                    find_isomorphism(cat.entries[i].table, cat.entries[j].table).has_value());
    }
}

TEST_CASE("pruned enumerator matches the naive oracle for orders <= 4") {
    for (int n = 1; n <= 4; ++n) {
        const Catalog cat = enumerate_quandles(n);
        std::vector<Table> ours;
        for (const auto& e : cat.entries) ours.push_back(e.table);
        CHECK(ours == oracle::naive_enumerate_canonical(n));
    }
}

TEST_CASE("pruned enumerator matches the naive oracle at order 5" * doctest::timeout(600)) {
    const Catalog cat = enumerate_quandles(5);
    std::vector<Table> ours;
    for (const auto& e : cat.entries) ours.push_back(e.table);
    CHECK(ours == oracle::naive_enumerate_canonical(5));
}

TEST_CASE("random quandles land in the catalog") {
    std::mt19937 rng(61);
    for (int it = 0; it < 100; ++it) {
        const Table q = support::random_quandle(rng);
        const Catalog cat = enumerate_quandles(q.order());
        const Table canon = canonical_form(q);
        bool found = false;
        for (const auto& e : cat.entries)
            if (e.table == canon) found = true;
        CHECK(found);
    }
}

TEST_CASE("latin conjecture report through order 5") {
    const ConjectureReport rep = check_latin_conjecture(5);
    CHECK(rep.holds());
    for (const auto& o : rep.orders) {
        CHECK(o.counterexamples.empty());
        // the converse is a theorem: every Latin quandle has qp = n st
        CHECK(o.latin_without_minimal_qp.empty());
    }
    // known Latin counts: one each for orders 1 and 3, one for 4, three for 5
    CHECK(rep.orders[0].with_minimal_qp == 1);
    CHECK(rep.orders[2].with_minimal_qp == 1);
    CHECK(rep.orders[3].with_minimal_qp == 1);
    CHECK(rep.orders[4].with_minimal_qp == 3);
}
