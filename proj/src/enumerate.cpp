#include "quandle/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace quandle {

namespace {

// permutations of {0..n-1} with fixed point j, in ascending order
std::vector<std::vector<int>> column_candidates(int n, int j) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (v != j) rest.push_back(v);
    std::vector<std::vector<int>> out;
    std::vector<int> others(rest.begin(), rest.end());
    std::sort(others.begin(), others.end());
    do {
        std::vector<int> col(n);
        col[j] = j;
        int k = 0;
        for (int i = 0; i < n; ++i)
            if (i != j) col[i] = others[k++];
        out.push_back(std::move(col));
    } while (std::next_permutation(others.begin(), others.end()));
    return out;
}

struct ColumnSearch {
    int n;
    std::vector<int> tab;  // row-major, -1 where the column is unplaced
    std::vector<std::vector<std::vector<int>>> candidates;  // per column
    std::vector<Table> found;

    explicit ColumnSearch(int order) : n(order), tab(static_cast<std::size_t>(order) * order, -1) {
        candidates.reserve(n);
        for (int j = 0; j < n; ++j) candidates.push_back(column_candidates(n, j));
    }

    int at(int i, int j) const { return tab[static_cast<std::size_t>(i) * n + j]; }
    void set_col(int j, const std::vector<int>& col) {
        for (int i = 0; i < n; ++i) tab[static_cast<std::size_t>(i) * n + j] = col[i];
    }
    void clear_col(int j) {
        for (int i = 0; i < n; ++i) tab[static_cast<std::size_t>(i) * n + j] = -1;
    }

    // Self-distributivity (a>b)>c = (a>c)>(b>c) needs columns b, c and b>c.
    // With columns 0..j placed, exactly the pairs whose needed columns peak
    // at j become checkable.
    bool distributive_so_far(int j) const {
        for (int b = 0; b <= j; ++b)
            for (int c = 0; c <= j; ++c) {
                const int k = at(b, c);
                if (k > j) continue;
                if (b != j && c != j && k != j) continue;  // checked earlier
                for (int a = 0; a < n; ++a)
                    if (at(at(a, b), c) != at(at(a, c), k)) return false;
            }
        return true;
    }

    void place(int j) {
        if (j == n) {
            Table t = Table::from_flat(n, tab);
            if (is_canonical_form(t, n)) found.push_back(std::move(t));
            return;
        }
        for (const auto& col : candidates[j]) {
            set_col(j, col);
            if (distributive_so_far(j)) place(j + 1);
        }
        clear_col(j);
    }
};

}  // namespace

Catalog enumerate_quandles(int n, int max_order) {
    if (n < 1 || n > max_order) throw DomainError("enumeration order out of range");
    ColumnSearch search(n);
    search.place(0);
    std::sort(search.found.begin(), search.found.end());
    Catalog cat;
    cat.order = n;
    cat.entries.reserve(search.found.size());
    for (auto& t : search.found) {
        CatalogEntry e;
        e.qp = qp(t);
        e.flags = classify(t);
        e.table = std::move(t);
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

std::vector<std::pair<Table, std::string>> qp_table(const Catalog& cat) {
    std::vector<std::pair<Table, std::string>> rows;
    rows.reserve(cat.entries.size());
    for (const auto& e : cat.entries) rows.emplace_back(e.table, canonical_text(e.qp));
    return rows;
}

ConjectureReport check_latin_conjecture(int n_max, int max_order) {
    if (n_max < 1 || n_max > max_order) throw DomainError("conjecture order out of range");
    ConjectureReport report;
    report.max_order = n_max;
    for (int n = 1; n <= n_max; ++n) {
        const Catalog cat = enumerate_quandles(n, max_order);
        BivariatePoly minimal;
        minimal.add_term(1, 1, n);
        ConjectureOrderReport o;
        o.order = n;
        o.quandles = static_cast<int>(cat.entries.size());
        for (int i = 0; i < static_cast<int>(cat.entries.size()); ++i) {
            const bool minimal_qp = cat.entries[i].qp == minimal;
            if (minimal_qp) ++o.with_minimal_qp;
            if (minimal_qp && !cat.entries[i].flags.is_latin) o.counterexamples.push_back(i);
            if (!minimal_qp && cat.entries[i].flags.is_latin)
                o.latin_without_minimal_qp.push_back(i);
        }
        report.orders.push_back(std::move(o));
    }
    return report;
}

}  // namespace quandle
