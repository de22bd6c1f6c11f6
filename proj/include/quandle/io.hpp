#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "quandle/enumerate.hpp"
#include "quandle/link.hpp"
#include "quandle/poly.hpp"
#include "quandle/table.hpp"

namespace quandle {

// Interchange text format, 1-based entries:
//   first line: n
//   then n lines of n whitespace-separated integers
// '#' starts a comment anywhere.
Table read_table(std::istream& in);
Table read_table_file(const std::filesystem::path& path);
std::string format_table(const Table& t);

LinkDiagram read_link_file(const std::filesystem::path& path);

// JSON renderings. Keys are emitted sorted and all values are integers,
// strings, or booleans, so dump() is byte-stable under reparse.
nlohmann::json poly_json(const BivariatePoly& p);      // [{"coeff","es","et"}...]
nlohmann::json zpoly_json(const ZPoly& p);             // [{"coeff","ez"}...]
nlohmann::json multiset_json(const PolyMultiset& m);   // [{"multiplicity","poly"}...]
nlohmann::json class_json(const AlgebraClass& k);
nlohmann::json matrix_json(const Table& t);            // 1-based rows
nlohmann::json catalog_json(const Catalog& cat);       // per the catalog index schema

// catalog-<n>.json plus one quandle file per entry, in dir
void write_catalog(const Catalog& cat, const std::filesystem::path& dir);

}  // namespace quandle
