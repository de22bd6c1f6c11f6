#include "quandle/families.hpp"

#include <numeric>

namespace quandle {

namespace {

int mod(long long v, int n) {
    const long long m = v % n;
    return static_cast<int>(m < 0 ? m + n : m);
}

void require_order(int n) {
    if (n < 1) throw DomainError("order must be >= 1");
}

}  // namespace

Table trivial(int n) {
    require_order(n);
    return Table::from_op(n, [](int i, int) { return i; });
}

Table alexander_cyclic(int n, int a) {
    require_order(n);
    if (std::gcd(mod(a, n), n) != 1) throw DomainError("multiplier is not invertible mod n");
    return Table::from_op(n, [&](int x, int y) {
        return mod(static_cast<long long>(a) * x + static_cast<long long>(1 - a) * y, n);
    });
}

Table dihedral(int n) {
    require_order(n);
    return Table::from_op(n, [&](int x, int y) { return mod(2LL * y - x, n); });
}

GroupInfo verify_group(const Table& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                    throw DomainError("table is not associative");
    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (int x = 0; x < n; ++x)
            if (g.op(cand, x) != x || g.op(x, cand) != x) {
                ok = false;
                break;
            }
        if (ok) e = cand;
    }
    if (e < 0) throw DomainError("table has no identity element");
    GroupInfo info{e, std::vector<int>(n, -1)};
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (g.op(x, y) == e && g.op(y, x) == e) {
                info.inverse[x] = y;
                break;
            }
        if (info.inverse[x] < 0) throw DomainError("table element has no inverse");
    }
    return info;
}

namespace {

int group_pow(const Table& g, const GroupInfo& info, int x, int e) {
    int base = x;
    if (e < 0) {
        base = info.inverse[x];
        e = -e;
    }
    int acc = info.identity;
    for (int i = 0; i < e; ++i) acc = g.op(acc, base);
    return acc;
}

}  // namespace

Table conjugation(const Table& cayley, int nfold) {
    const GroupInfo info = verify_group(cayley);
    const int n = cayley.order();
    return Table::from_op(n, [&](int x, int y) {
        const int yn = group_pow(cayley, info, y, nfold);
        return cayley.op(cayley.op(info.inverse[yn], x), yn);
    });
}

Table homogeneous(const Table& cayley, const std::vector<int>& s) {
    const GroupInfo info = verify_group(cayley);
    const int n = cayley.order();
    if (static_cast<int>(s.size()) != n) throw DomainError("automorphism has wrong length");
    std::vector<char> seen(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n || seen[v]) throw DomainError("map is not a bijection");
        seen[v] = 1;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (s[cayley.op(x, y)] != cayley.op(s[x], s[y]))
                throw DomainError("map is not a group automorphism");
    return Table::from_op(n, [&](int x, int y) {
        return cayley.op(s[cayley.op(x, info.inverse[y])], y);
    });
}

Table symplectic(int p) {
    if (p != 2 && p != 3) throw DomainError("p must be a prime <= 3");
    const int n = p * p;
    auto part = [&](int v) { return std::pair{v / p, v % p}; };
    return Table::from_op(n, [&](int x, int y) {
        const auto [xa, xb] = part(x);
        const auto [ya, yb] = part(y);
        const int form = mod(static_cast<long long>(xa) * yb - static_cast<long long>(xb) * ya, p);
        return mod(xa + static_cast<long long>(form) * ya, p) * p +
               mod(xb + static_cast<long long>(form) * yb, p);
    });
}

Table constant_rack(int n, int k) {
    require_order(n);
    if (k < 0 || k >= n) throw DomainError("shift must lie in 0..n-1");
    return Table::from_op(n, [&](int i, int) { return mod(i + k, n); });
}

}  // namespace quandle
