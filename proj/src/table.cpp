#include "quandle/table.hpp"

#include <algorithm>
#include <numeric>

namespace quandle {

Table Table::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw ParseError("operation table is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_flat(n, std::move(flat));
}

Table Table::from_flat(int n, std::vector<int> flat) {
    if (n < 1) throw ParseError("operation table must have order >= 1");
    if (static_cast<int>(flat.size()) != n * n)
        throw ParseError("operation table is not square");
    for (int v : flat)
        if (v < 0 || v >= n) throw ParseError("table entry out of range");
    Table t;
    t.n_ = n;
    t.tab_ = std::move(flat);
    return t;
}

namespace {

bool is_self_distributive(const Table& t) {
    const int n = t.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t.op(t.op(a, b), c) != t.op(t.op(a, c), t.op(b, c))) return false;
    return true;
}

bool columns_bijective(const Table& t) {
    const int n = t.order();
    std::vector<char> seen(n);
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < n; ++i) {
            if (seen[t.op(i, j)]) return false;
            seen[t.op(i, j)] = 1;
        }
    }
    return true;
}

bool rows_bijective(const Table& t) {
    const int n = t.order();
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            if (seen[t.op(i, j)]) return false;
            seen[t.op(i, j)] = 1;
        }
    }
    return true;
}

bool diagonal_idempotent(const Table& t) {
    for (int i = 0; i < t.order(); ++i)
        if (t.op(i, i) != i) return false;
    return true;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

AlgebraClass classify(const Table& t) {
    AlgebraClass k;
    k.is_shelf = is_self_distributive(t);
    k.is_rack = k.is_shelf && columns_bijective(t);
    k.is_quandle = k.is_rack && diagonal_idempotent(t);
    k.is_latin = k.is_quandle && rows_bijective(t);
    k.is_connected = k.is_quandle && orbits(t).size() == 1;
    return k;
}

CountProfile count_profile(const Table& t) {
    const int n = t.order();
    CountProfile p;
    p.r.assign(n, 0);
    p.c.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (t.op(i, j) == i) ++p.r[i];
            if (t.op(j, i) == j) ++p.c[i];
        }
    return p;
}

std::vector<std::vector<int>> orbits(const Table& t) {
    const int n = t.order();
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) uf.unite(i, t.op(i, j));
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of(n, -1);
    for (int i = 0; i < n; ++i) {
        int root = uf.find(i);
        if (block_of[root] < 0) {
            block_of[root] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[block_of[root]].push_back(i);
    }
    return blocks;  // blocks appear by least element, members ascending
}

std::vector<int> subquandle_closure(const Table& t, const std::vector<int>& seed) {
    const int n = t.order();
    std::vector<char> in(n, 0);
    std::vector<int> members;
    auto add = [&](int x) {
        if (x < 0 || x >= n) throw DomainError("closure seed element out of range");
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
        }
    };
    for (int s : seed) add(s);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            add(t.op(members[i], members[j]));
            add(t.op(members[j], members[i]));
        }
    std::sort(members.begin(), members.end());
    return members;
}

Table relabel(const Table& t, const std::vector<int>& perm) {
    const int n = t.order();
    if (static_cast<int>(perm.size()) != n) throw DomainError("relabeling has wrong length");
    std::vector<char> seen(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) throw DomainError("relabeling is not a permutation");
        seen[v] = 1;
    }
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            flat[static_cast<std::size_t>(perm[i]) * n + perm[j]] = perm[t.op(i, j)];
    return Table::from_flat(n, std::move(flat));
}

std::optional<std::vector<int>> find_isomorphism(const Table& a, const Table& b) {
    const int n = a.order();
    if (n != b.order()) return std::nullopt;

    const CountProfile pa = count_profile(a), pb = count_profile(b);
    {
        // multisets of (r,c) pairs must agree
        std::vector<std::pair<int, int>> ma(n), mb(n);
        for (int i = 0; i < n; ++i) {
            ma[i] = {pa.r[i], pa.c[i]};
            mb[i] = {pb.r[i], pb.c[i]};
        }
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (ma != mb) return std::nullopt;
    }

    std::vector<int> f(n, -1);
    std::vector<char> used(n, 0);

    auto consistent = [&](int m) {
        // check every pair over assigned elements whose product image is known
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m; ++j) {
                const int z = a.op(i, j);
                if (f[z] >= 0 && f[z] != b.op(f[i], f[j])) return false;
            }
        return true;
    };

    auto dfs = [&](auto&& self, int m) -> bool {
        if (m == n) return true;
        for (int y = 0; y < n; ++y) {
            if (used[y]) continue;
            if (pa.r[m] != pb.r[y] || pa.c[m] != pb.c[y]) continue;
            f[m] = y;
            used[y] = 1;
            if (consistent(m) && self(self, m + 1)) return true;
            f[m] = -1;
            used[y] = 0;
        }
        return false;
    };

    if (dfs(dfs, 0)) return f;
    return std::nullopt;
}

namespace {

// Shared search for the lexicographically least relabeling. pi[k] is the old
// element that becomes k; walking the flattened table compares the decided
// prefix against `best`. Entries whose value is an element not yet relabeled
// are at least m, which still prunes when best[p] < m.
struct CanonicalSearch {
    const Table& q;
    int n;
    std::vector<int> best;
    std::vector<int> pi, sigma;
    std::vector<int> row_count;
    bool stop_on_better;  // minimality check mode
    bool found_better = false;
    bool idempotent = true;
    int rmax = 0;

    CanonicalSearch(const Table& table, bool minimality_mode)
        : q(table),
          n(table.order()),
          best(table.flat()),
          pi(table.order(), -1),
          sigma(table.order(), -1),
          row_count(count_profile(table).r),
          stop_on_better(minimality_mode) {
        for (int i = 0; i < n; ++i)
            if (q.op(i, i) != i) idempotent = false;
        for (int e = 0; e < n; ++e) rmax = std::max(rmax, row_count[e]);
    }

    enum Walk { kPrune, kOpen, kBetter };

    Walk walk(int m) const {
        for (int p = 0; p < n * n; ++p) {
            const int i = p / n, j = p % n;
            if (i >= m || j >= m) return kOpen;
            const int v = sigma[q.op(pi[i], pi[j])];
            if (v < 0) {
                if (best[p] < m) return kPrune;
                return kOpen;
            }
            if (v < best[p]) return kBetter;
            if (v > best[p]) return kPrune;
        }
        return kOpen;
    }

    void dfs(int m) {
        if (found_better && stop_on_better) return;
        const Walk w = walk(m);
        if (w == kPrune) return;
        if (w == kBetter && stop_on_better) {
            // every completion of this prefix beats the table itself
            found_better = true;
            return;
        }
        if (m == n) {
            std::vector<int> cand(static_cast<std::size_t>(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    cand[static_cast<std::size_t>(i) * n + j] = sigma[q.op(pi[i], pi[j])];
            if (cand < best) {
                if (stop_on_better) {
                    found_better = true;
                    return;
                }
                best = std::move(cand);
            }
            return;
        }
        // For an idempotent table the first element of the least relabeling
        // must maximize the row count: its zeros can all be placed at the
        // front of row 0, beating any smaller row count outright.
        std::vector<int> cands;
        for (int e = 0; e < n; ++e) {
            if (sigma[e] >= 0) continue;
            if (m == 0 && idempotent && row_count[e] != rmax) continue;
            cands.push_back(e);
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [&](int x, int y) { return row_count[x] > row_count[y]; });
        for (int e : cands) {
            pi[m] = e;
            sigma[e] = m;
            dfs(m + 1);
            sigma[e] = -1;
            pi[m] = -1;
            if (found_better && stop_on_better) return;
        }
    }
};

}  // namespace

Table canonical_form(const Table& t, int max_order) {
    if (t.order() > max_order) throw DomainError("order above canonical-form bound");
    if (t.order() <= 1) return t;
    CanonicalSearch s(t, /*minimality_mode=*/false);
    s.dfs(0);
    return Table::from_flat(t.order(), std::move(s.best));
}

bool is_canonical_form(const Table& t, int max_order) {
    if (t.order() > max_order) throw DomainError("order above canonical-form bound");
    if (t.order() <= 1) return true;
    CanonicalSearch s(t, /*minimality_mode=*/true);
    if (s.idempotent) {
        // the least labeling starts with an element of maximal row count and
        // packs that row's zeros to the front, so most tables fail in O(n)
        if (s.row_count[0] != s.rmax) return false;
        for (int j = 0; j < s.n; ++j)
            if ((t.op(0, j) == 0) != (j < s.rmax)) return false;
    }
    s.dfs(0);
    return !s.found_better;
}

}  // namespace quandle
