#include "quandle/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace quandle {

namespace {

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<long long> line_ints(const std::string& line) {
    std::istringstream in(line);
    std::vector<long long> out;
    long long v;
    while (in >> v) out.push_back(v);
    if (!in.eof()) throw ParseError("non-numeric token in table file: " + line);
    return out;
}

long long json_coeff(const Int& v) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw DomainError("coefficient exceeds JSON integer range");
    return static_cast<long long>(v);
}

}  // namespace

Table read_table(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::vector<int>> rows;
    while (std::getline(in, line)) {
        const auto ints = line_ints(strip_comment(line));
        if (ints.empty()) continue;
        if (n < 0) {
            if (ints.size() != 1 || ints[0] < 1 || ints[0] > 1000)
                throw ParseError("table file must start with the order on its own line");
            n = static_cast<int>(ints[0]);
            continue;
        }
        if (static_cast<int>(rows.size()) == n) throw ParseError("extra rows in table file");
        std::vector<int> row;
        for (long long v : ints) {
            if (v < 1 || v > n) throw ParseError("table entry out of range 1..n");
            row.push_back(static_cast<int>(v - 1));
        }
        if (static_cast<int>(row.size()) != n) throw ParseError("row has wrong length");
        rows.push_back(std::move(row));
    }
    if (n < 0) throw ParseError("empty table file");
    if (static_cast<int>(rows.size()) != n) throw ParseError("missing rows in table file");
    return Table::from_rows(rows);
}

Table read_table_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path.string());
    return read_table(in);
}

std::string format_table(const Table& t) {
    std::ostringstream out;
    out << t.order() << '\n';
    for (int i = 0; i < t.order(); ++i) {
        for (int j = 0; j < t.order(); ++j) {
            if (j) out << ' ';
            out << t.op(i, j) + 1;
        }
        out << '\n';
    }
    return out.str();
}

LinkDiagram read_link_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_link_text(buf.str());
}

nlohmann::json poly_json(const BivariatePoly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& [k, v] : p.terms())
        arr.push_back({{"coeff", json_coeff(v)}, {"es", k.first}, {"et", k.second}});
    return arr;
}

nlohmann::json zpoly_json(const ZPoly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& [e, v] : p.terms())
        arr.push_back({{"coeff", json_coeff(v)}, {"ez", e}});
    return arr;
}

nlohmann::json multiset_json(const PolyMultiset& m) {
    auto arr = nlohmann::json::array();
    for (const auto& [poly, mult] : m)
        arr.push_back({{"multiplicity", json_coeff(mult)}, {"poly", canonical_text(poly)}});
    return arr;
}

nlohmann::json class_json(const AlgebraClass& k) {
    return {{"connected", k.is_connected},
            {"latin", k.is_latin},
            {"quandle", k.is_quandle},
            {"rack", k.is_rack},
            {"shelf", k.is_shelf}};
}

nlohmann::json matrix_json(const Table& t) {
    auto arr = nlohmann::json::array();
    for (int i = 0; i < t.order(); ++i) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < t.order(); ++j) row.push_back(t.op(i, j) + 1);
        arr.push_back(std::move(row));
    }
    return arr;
}

nlohmann::json catalog_json(const Catalog& cat) {
    auto arr = nlohmann::json::array();
    for (const auto& e : cat.entries)
        arr.push_back({{"connected", e.flags.is_connected},
                       {"latin", e.flags.is_latin},
                       {"matrix", matrix_json(e.table)},
                       {"qp", canonical_text(e.qp)}});
    return arr;
}

void write_catalog(const Catalog& cat, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const std::string order = std::to_string(cat.order);
    {
        std::ofstream out(dir / ("catalog-" + order + ".json"));
        out << catalog_json(cat).dump() << '\n';
    }
    for (std::size_t i = 0; i < cat.entries.size(); ++i) {
        std::ofstream out(dir / ("quandle-" + order + "-" + std::to_string(i + 1) + ".txt"));
        out << format_table(cat.entries[i].table);
    }
}

}  // namespace quandle
