#pragma once

#include <string>
#include <vector>

#include "quandle/poly.hpp"
#include "quandle/table.hpp"

namespace quandle {

struct CatalogEntry {
    Table table;  // canonical form, the least labeling of its class
    BivariatePoly qp;
    AlgebraClass flags;
};

struct Catalog {
    int order = 0;
    std::vector<CatalogEntry> entries;  // pairwise non-isomorphic, sorted by table
};

// All quandles of order n up to isomorphism. Backtracking over columns:
// column j ranges over permutations fixing j (forced by idempotence and
// column bijectivity), self-distributivity is checked incrementally as
// columns land, and a completed table is kept iff it is the least labeling
// of its isomorphism class. n must lie in 1..max_order.
Catalog enumerate_quandles(int n, int max_order = 7);

// one row per class: canonical matrix and canonical qp text
std::vector<std::pair<Table, std::string>> qp_table(const Catalog& cat);

struct ConjectureOrderReport {
    int order = 0;
    int quandles = 0;
    int with_minimal_qp = 0;            // entries with qp = n*s*t
    std::vector<int> counterexamples;   // catalog indices with qp = n*s*t but not Latin
    std::vector<int> latin_without_minimal_qp;  // converse direction, expected empty
};

struct ConjectureReport {
    int max_order = 0;
    std::vector<ConjectureOrderReport> orders;
    bool holds() const {
        for (const auto& o : orders)
            if (!o.counterexamples.empty()) return false;
        return true;
    }
};

// For each order up to n_max, lists quandles whose polynomial is the minimal
// n*s*t but which are not Latin.
ConjectureReport check_latin_conjecture(int n_max, int max_order = 7);

}  // namespace quandle
