// Command-line surface for the quandle toolkit: classification, quandle
// polynomials, enumeration, homomorphisms, and link coloring invariants.
// Exit codes: 0 success, 1 domain error (not a quandle, subset not closed,
// bad evaluation point), 2 parse/usage error.

#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "quandle/enumerate.hpp"
#include "quandle/families.hpp"
#include "quandle/hom.hpp"
#include "quandle/io.hpp"
#include "quandle/link.hpp"
#include "quandle/poly.hpp"
#include "quandle/table.hpp"

namespace {

using nlohmann::json;
using namespace quandle;

void emit(const json& j) { std::cout << j.dump() << '\n'; }

int parse_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'");
    }
}

long long to_json_int(const Int& v) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw DomainError("value exceeds JSON integer range");
    return static_cast<long long>(v);
}

std::vector<int> parse_one_based_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(parse_int(cur) - 1);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (out.empty()) throw ParseError("expected a comma-separated element list");
    return out;
}

Table load_rack(const std::string& path) {
    Table t = read_table_file(path);
    if (!classify(t).is_rack) throw DomainError("not a rack: " + path);
    return t;
}

Table load_quandle(const std::string& path) {
    Table t = read_table_file(path);
    if (!classify(t).is_quandle) throw DomainError("not a quandle: " + path);
    return t;
}

std::string describe(const AlgebraClass& k) {
    if (!k.is_shelf) return "not a shelf";
    if (!k.is_rack) return "shelf (not a rack)";
    if (!k.is_quandle) return "rack (not a quandle)";
    std::string out = "quandle";
    if (k.is_latin) out += ", latin";
    if (k.is_connected) out += ", connected";
    return out;
}

int run_verify(const std::string& path, bool as_json) {
    const Table t = read_table_file(path);
    const AlgebraClass k = classify(t);
    if (as_json)
        emit(class_json(k));
    else
        std::cout << describe(k) << '\n';
    return 0;
}

int run_qp(const std::string& path, bool row, bool col,
           const std::vector<long long>& spec, bool as_json) {
    const Table t = load_rack(path);
    const CountProfile prof = count_profile(t);
    bool zero_profile = true;
    for (int i = 0; i < t.order(); ++i)
        if (prof.r[i] != 0 || prof.c[i] != 0) zero_profile = false;

    std::vector<std::pair<std::string, BivariatePoly>> outputs;
    if (row) outputs.emplace_back("row", row_poly(t));
    if (col) outputs.emplace_back("col", col_poly(t));
    if (outputs.empty()) outputs.emplace_back("qp", qp(t));

    json j;
    j["zero_profile"] = zero_profile;
    for (const auto& [label, poly] : outputs) {
        if (!spec.empty()) {
            const Int value = evaluate(poly, spec[0], spec[1]);
            if (as_json)
                j[label] = to_json_int(value);
            else if (outputs.size() == 1)
                std::cout << value.str() << '\n';
            else
                std::cout << label << ": " << value.str() << '\n';
        } else {
            if (as_json)
                j[label] = poly_json(poly);
            else if (outputs.size() == 1)
                std::cout << canonical_text(poly) << '\n';
            else
                std::cout << label << ": " << canonical_text(poly) << '\n';
        }
    }
    if (as_json)
        emit(j);
    else if (zero_profile)
        std::cout << "note: every row and column count is zero; "
                     "an alternative convention reports 0\n";
    return 0;
}

int run_subqp(const std::string& path, const std::string& subset, bool as_json) {
    const Table t = load_rack(path);
    const BivariatePoly p = sub_qp(t, parse_one_based_list(subset));
    if (as_json)
        emit(json{{"subqp", poly_json(p)}});
    else
        std::cout << canonical_text(p) << '\n';
    return 0;
}

int run_orbits(const std::string& path, bool as_json) {
    const Table t = load_rack(path);
    const auto blocks = orbits(t);
    if (as_json) {
        auto arr = json::array();
        for (const auto& b : blocks) {
            auto jb = json::array();
            for (int x : b) jb.push_back(x + 1);
            arr.push_back(std::move(jb));
        }
        emit(json{{"orbits", arr}});
    } else {
        for (const auto& b : blocks) {
            for (std::size_t i = 0; i < b.size(); ++i)
                std::cout << (i ? " " : "") << b[i] + 1;
            std::cout << '\n';
        }
    }
    return 0;
}

int run_iso(const std::string& path_a, const std::string& path_b, bool as_json) {
    const Table a = load_rack(path_a);
    const Table b = load_rack(path_b);
    const auto f = find_isomorphism(a, b);
    if (as_json) {
        json j{{"isomorphic", f.has_value()}};
        if (f) {
            auto arr = json::array();
            for (int v : *f) arr.push_back(v + 1);
            j["map"] = std::move(arr);
        }
        emit(j);
    } else if (f) {
        std::cout << "isomorphic\n";
        for (std::size_t i = 0; i < f->size(); ++i)
            std::cout << (i ? " " : "") << (*f)[i] + 1;
        std::cout << '\n';
    } else {
        std::cout << "not isomorphic\n";
    }
    return 0;
}

int run_enumerate(int n, const std::string& out_dir, bool as_json) {
    const Catalog cat = enumerate_quandles(n);
    if (!out_dir.empty()) write_catalog(cat, out_dir);
    if (as_json) {
        emit(catalog_json(cat));
        return 0;
    }
    std::cout << "order " << n << ": " << cat.entries.size() << " quandles\n";
    for (std::size_t i = 0; i < cat.entries.size(); ++i) {
        const auto& e = cat.entries[i];
        std::cout << '\n'
                  << "# " << i + 1 << "  qp: " << canonical_text(e.qp)
                  << (e.flags.is_latin ? "  latin" : "")
                  << (e.flags.is_connected ? "  connected" : "") << '\n'
                  << format_table(e.table);
    }
    return 0;
}

int run_conjecture(int n_max, bool as_json) {
    const ConjectureReport rep = check_latin_conjecture(n_max);
    if (as_json) {
        auto orders = json::array();
        for (const auto& o : rep.orders) {
            auto cx = json::array();
            for (int i : o.counterexamples) cx.push_back(i + 1);
            orders.push_back({{"counterexamples", cx},
                              {"order", o.order},
                              {"quandles", o.quandles},
                              {"with_minimal_qp", o.with_minimal_qp}});
        }
        emit(json{{"holds", rep.holds()}, {"max_order", rep.max_order}, {"orders", orders}});
        return 0;
    }
    for (const auto& o : rep.orders) {
        std::cout << "order " << o.order << ": " << o.quandles << " quandles, "
                  << o.with_minimal_qp << " with qp = " << o.order << "st, counterexamples: ";
        if (o.counterexamples.empty()) {
            std::cout << "none\n";
        } else {
            for (std::size_t i = 0; i < o.counterexamples.size(); ++i)
                std::cout << (i ? " " : "") << o.counterexamples[i] + 1;
            std::cout << '\n';
        }
    }
    std::cout << (rep.holds() ? "every quandle with minimal qp is Latin through order "
                              : "counterexample found at or below order ")
              << n_max << '\n';
    return 0;
}

int run_hom(const std::string& src_path, const std::string& dst_path, bool with_kqp,
            bool as_json) {
    const Table src = load_quandle(src_path);
    const Table dst = load_quandle(dst_path);
    const auto homs = all_homs(src, dst);
    if (as_json) {
        auto arr = json::array();
        for (const auto& h : homs) {
            auto m = json::array();
            for (int v : h) m.push_back(v + 1);
            json entry{{"map", std::move(m)}};
            if (with_kqp) entry["kqp"] = canonical_text(kqp(src, dst, h));
            arr.push_back(std::move(entry));
        }
        emit(arr);
        return 0;
    }
    for (const auto& h : homs) {
        for (std::size_t i = 0; i < h.size(); ++i) std::cout << (i ? " " : "") << h[i] + 1;
        if (with_kqp) std::cout << '\t' << canonical_text(kqp(src, dst, h));
        std::cout << '\n';
    }
    return 0;
}

int run_construct(const std::vector<std::string>& args, bool as_json) {
    if (args.empty()) throw ParseError("construct requires a family name");
    const std::string& family = args[0];
    auto want = [&](std::size_t k) {
        if (args.size() != k + 1)
            throw ParseError("construct " + family + " takes " + std::to_string(k) +
                             " parameter(s)");
    };
    Table t;
    if (family == "trivial") {
        want(1);
        t = trivial(parse_int(args[1]));
    } else if (family == "dihedral") {
        want(1);
        t = dihedral(parse_int(args[1]));
    } else if (family == "alexander") {
        want(2);
        t = alexander_cyclic(parse_int(args[1]), parse_int(args[2]));
    } else if (family == "conjugation") {
        want(2);
        t = conjugation(read_table_file(args[1]), parse_int(args[2]));
    } else if (family == "homogeneous") {
        want(2);
        t = homogeneous(read_table_file(args[1]), parse_one_based_list(args[2]));
    } else if (family == "symplectic") {
        want(1);
        t = symplectic(parse_int(args[1]));
    } else if (family == "constant-rack") {
        want(2);
        t = constant_rack(parse_int(args[1]), parse_int(args[2]));
    } else {
        throw ParseError("unknown family: " + family);
    }
    if (as_json)
        emit(json{{"matrix", matrix_json(t)}});
    else
        std::cout << format_table(t);
    return 0;
}

int run_color(const std::string& link_path, const std::string& q_path, bool list,
              bool as_json) {
    const LinkDiagram d = read_link_file(link_path);
    const Table t = load_quandle(q_path);
    const auto cols = colorings(d, t);
    if (as_json) {
        json j{{"count", cols.size()}};
        if (list) {
            auto arr = json::array();
            for (const auto& c : cols) {
                auto jc = json::array();
                for (int v : c) jc.push_back(v + 1);
                arr.push_back(std::move(jc));
            }
            j["colorings"] = std::move(arr);
        }
        emit(j);
        return 0;
    }
    std::cout << cols.size() << '\n';
    if (list)
        for (const auto& c : cols) {
            for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "") << c[i] + 1;
            std::cout << '\n';
        }
    return 0;
}

int run_phi(const std::string& link_path, const std::string& q_path,
            const std::vector<long long>& spec, bool as_json) {
    const LinkDiagram d = read_link_file(link_path);
    const Table t = load_quandle(q_path);
    if (!spec.empty()) {
        const ZPoly z = phi_qp_specialized(d, t, spec[0], spec[1]);
        if (as_json)
            emit(zpoly_json(z));
        else
            std::cout << canonical_text(z) << '\n';
        return 0;
    }
    const PolyMultiset ms = phi_qp(d, t);
    if (as_json) {
        emit(multiset_json(ms));
        return 0;
    }
    for (const auto& [poly, mult] : ms)
        std::cout << mult.str() << " x " << canonical_text(poly) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite quandle toolkit: polynomials, enumeration, link invariants"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit canonical JSON instead of text");

    auto* verify = app.add_subcommand("verify", "classify a table (shelf/rack/quandle/latin)");
    std::string verify_path;
    verify->add_option("table", verify_path, "quandle file")->required();

    auto* qp_cmd = app.add_subcommand("qp", "quandle polynomial of a rack or quandle");
    std::string qp_path;
    bool qp_row = false, qp_col = false;
    std::vector<long long> qp_spec;
    qp_cmd->add_option("table", qp_path, "quandle file")->required();
    qp_cmd->add_flag("--row", qp_row, "row polynomial qp(s,1)");
    qp_cmd->add_flag("--col", qp_col, "column polynomial qp(1,t)");
    qp_cmd->add_option("--spec", qp_spec, "evaluate at integers s t")->expected(2);

    auto* subqp = app.add_subcommand("subqp", "subquandle polynomial of a closed subset");
    std::string subqp_path, subqp_subset;
    subqp->add_option("table", subqp_path, "quandle file")->required();
    subqp->add_option("--subset", subqp_subset, "comma-separated 1-based elements")->required();

    auto* orbits_cmd = app.add_subcommand("orbits", "orbit decomposition");
    std::string orbits_path;
    orbits_cmd->add_option("table", orbits_path, "quandle file")->required();

    auto* iso = app.add_subcommand("iso", "isomorphism test with witness");
    std::string iso_a, iso_b;
    iso->add_option("table-a", iso_a, "first quandle file")->required();
    iso->add_option("table-b", iso_b, "second quandle file")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "all quandles of an order up to isomorphism");
    int enum_n = 0;
    std::string enum_out;
    enum_cmd->add_option("n", enum_n, "order (1..7)")->required();
    enum_cmd->add_option("--out", enum_out, "directory for catalog files");

    auto* conj = app.add_subcommand("conjecture", "check that minimal qp implies Latin");
    int conj_n = 0;
    conj->add_option("nmax", conj_n, "largest order to check")->required();

    auto* hom_cmd = app.add_subcommand("hom", "all homomorphisms between two quandles");
    std::string hom_src, hom_dst;
    bool hom_kqp = false;
    hom_cmd->add_option("source", hom_src, "source quandle file")->required();
    hom_cmd->add_option("target", hom_dst, "target quandle file")->required();
    hom_cmd->add_flag("--kqp", hom_kqp, "append the kernel polynomial of each map");

    auto* construct = app.add_subcommand("construct", "emit a standard family member");
    std::vector<std::string> construct_args;
    construct->add_option("params", construct_args,
                          "family and parameters: trivial n | dihedral n | alexander n t | "
                          "conjugation group-file nfold | homogeneous group-file images | "
                          "symplectic p | constant-rack n k");

    auto* color = app.add_subcommand("color", "count (or list) colorings of a link diagram");
    std::string color_link, color_q;
    bool color_list = false;
    color->add_option("link", color_link, "link file (native or PD)")->required();
    color->add_option("table", color_q, "target quandle file")->required();
    color->add_flag("--list", color_list, "list every coloring");

    auto* phi = app.add_subcommand("phi", "subquandle polynomial invariant of a link");
    std::string phi_link, phi_q;
    std::vector<long long> phi_spec;
    phi->add_option("link", phi_link, "link file (native or PD)")->required();
    phi->add_option("table", phi_q, "target quandle file")->required();
    phi->add_option("--spec", phi_spec, "specialize at integers s0 t0")->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) return run_verify(verify_path, as_json);
        if (*qp_cmd) return run_qp(qp_path, qp_row, qp_col, qp_spec, as_json);
        if (*subqp) return run_subqp(subqp_path, subqp_subset, as_json);
        if (*orbits_cmd) return run_orbits(orbits_path, as_json);
        if (*iso) return run_iso(iso_a, iso_b, as_json);
        if (*enum_cmd) return run_enumerate(enum_n, enum_out, as_json);
        if (*conj) return run_conjecture(conj_n, as_json);
        if (*hom_cmd) return run_hom(hom_src, hom_dst, hom_kqp, as_json);
        if (*construct) return run_construct(construct_args, as_json);
        if (*color) return run_color(color_link, color_q, color_list, as_json);
        if (*phi) return run_phi(phi_link, phi_q, phi_spec, as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
