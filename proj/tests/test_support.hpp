#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "quandle/enumerate.hpp"
#include "quandle/families.hpp"
#include "quandle/table.hpp"

namespace support {

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(QUANDLE_FIXTURE_DIR) / name;
}

// literal matrices written 1-based, exactly as they appear in operation
// tables
inline quandle::Table table_1b(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<int>> zero_based;
    for (const auto& row : rows) {
        std::vector<int> r;
        for (int v : row) r.push_back(v - 1);
        zero_based.push_back(std::move(r));
    }
    return quandle::Table::from_rows(zero_based);
}

inline std::vector<int> random_perm(std::mt19937& rng, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(p[i], p[pick(rng)]);
    }
    return p;
}

// all quandles of orders 1..5 up to isomorphism, enumerated once per process
inline const std::vector<quandle::Table>& small_quandle_pool() {
    static const std::vector<quandle::Table> pool = [] {
        std::vector<quandle::Table> out;
        for (int n = 1; n <= 5; ++n)
            for (const auto& e : quandle::enumerate_quandles(n).entries) out.push_back(e.table);
        return out;
    }();
    return pool;
}

inline quandle::Table random_quandle(std::mt19937& rng) {
    const auto& pool = small_quandle_pool();
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const quandle::Table& base = pool[pick(rng)];
    return relabel(base, random_perm(rng, base.order()));
}

// Latin quandles: pool members that are Latin plus linear ones of larger
// order (dihedral of odd order, cyclic Alexander with both a and 1-a units)
inline quandle::Table random_latin_quandle(std::mt19937& rng) {
    static const std::vector<quandle::Table> latins = [] {
        std::vector<quandle::Table> out;
        for (const auto& t : small_quandle_pool())
            if (classify(t).is_latin) out.push_back(t);
        for (int n : {7, 9}) out.push_back(quandle::dihedral(n));
        out.push_back(quandle::alexander_cyclic(7, 3));
        out.push_back(quandle::alexander_cyclic(9, 5));
        return out;
    }();
    std::uniform_int_distribution<std::size_t> pick(0, latins.size() - 1);
    const quandle::Table& base = latins[pick(rng)];
    return relabel(base, random_perm(rng, base.order()));
}

// Cayley table of the symmetric group on three points; product ij is
// "apply i, then j"
inline quandle::Table s3_cayley() {
    const std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto compose = [&](int i, int j) {
        std::vector<int> prod(3);
        for (int x = 0; x < 3; ++x) prod[x] = perms[j][perms[i][x]];
        for (int k = 0; k < 6; ++k)
            if (perms[k] == prod) return k;
        return -1;
    };
    return quandle::Table::from_op(6, compose);
}

inline quandle::Table cyclic_cayley(int n) {
    return quandle::Table::from_op(n, [n](int i, int j) { return (i + j) % n; });
}

}  // namespace support
