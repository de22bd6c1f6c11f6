#include "quandle/hom.hpp"

#include <algorithm>

namespace quandle {

Homomorphism make_homomorphism(Table source, Table target, std::vector<int> map) {
    const int n = source.order();
    if (static_cast<int>(map.size()) != n) throw DomainError("map has wrong length");
    for (int v : map)
        if (v < 0 || v >= target.order()) throw DomainError("map image out of range");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (map[source.op(x, y)] != target.op(map[x], map[y]))
                throw DomainError("map is not a homomorphism");
    return Homomorphism{std::move(source), std::move(target), std::move(map)};
}

std::vector<std::vector<int>> all_homs(const Table& src, const Table& dst) {
    const int n = src.order();
    std::vector<std::vector<int>> result;
    std::vector<int> val(n, -1);
    std::vector<int> trail;

    // assign images forced by pairs of already-assigned elements
    auto propagate = [&]() -> bool {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < n; ++x) {
                if (val[x] < 0) continue;
                for (int y = 0; y < n; ++y) {
                    if (val[y] < 0) continue;
                    const int z = src.op(x, y);
                    const int w = dst.op(val[x], val[y]);
                    if (val[z] < 0) {
                        val[z] = w;
                        trail.push_back(z);
                        changed = true;
                    } else if (val[z] != w) {
                        return false;
                    }
                }
            }
        }
        return true;
    };

    auto dfs = [&](auto&& self) -> void {
        int x = 0;
        while (x < n && val[x] >= 0) ++x;
        if (x == n) {
            result.push_back(val);
            return;
        }
        for (int img = 0; img < dst.order(); ++img) {
            const std::size_t mark = trail.size();
            val[x] = img;
            trail.push_back(x);
            if (propagate()) self(self);
            while (trail.size() > mark) {
                val[trail.back()] = -1;
                trail.pop_back();
            }
        }
    };

    dfs(dfs);
    std::sort(result.begin(), result.end());
    return result;
}

BivariatePoly kqp(const Table& src, const Table& dst, const std::vector<int>& map) {
    const CountProfile ps = count_profile(src);
    const CountProfile pd = count_profile(dst);
    BivariatePoly out;
    for (int x = 0; x < src.order(); ++x)
        out.add_term(pd.r[map[x]] - ps.r[x], pd.c[map[x]] - ps.c[x], 1);
    return out;
}

HomFlags classify_hom(const Table&, const Table& dst, const std::vector<int>& map) {
    HomFlags flags;
    std::vector<char> hit(dst.order(), 0);
    bool repeat = false;
    for (int v : map) {
        if (hit[v]) repeat = true;
        hit[v] = 1;
    }
    flags.injective = !repeat;
    flags.surjective = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
    return flags;
}

}  // namespace quandle
