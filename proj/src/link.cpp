#include "quandle/link.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace quandle {

namespace {

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

void validate_closure(const LinkDiagram& d) {
    std::vector<int> in_count(d.arc_count, 0), out_count(d.arc_count, 0);
    std::vector<char> over_seen(d.arc_count, 0);
    auto check_range = [&](int a) {
        if (a < 0 || a >= d.arc_count) throw ParseError("arc id out of range");
    };
    for (const auto& cr : d.crossings) {
        check_range(cr.under_in);
        check_range(cr.over);
        check_range(cr.under_out);
        ++in_count[cr.under_in];
        ++out_count[cr.under_out];
        over_seen[cr.over] = 1;
    }
    for (int a = 0; a < d.arc_count; ++a) {
        // (1,1) for an arc split off at an underpass; an arc in no crossing
        // at all is a crossingless unknot component
        if (!((in_count[a] == 1 && out_count[a] == 1) ||
              (in_count[a] == 0 && out_count[a] == 0 && !over_seen[a])))
            throw ParseError("diagram is not closed: arc " + std::to_string(a + 1) +
                             " has unbalanced under-passes");
    }
    if (!d.components.empty()) {
        std::vector<char> seen(d.arc_count, 0);
        for (const auto& comp : d.components)
            for (int a : comp) {
                check_range(a);
                if (seen[a]) throw ParseError("component lines repeat an arc");
                seen[a] = 1;
            }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw ParseError("component lines do not cover every arc");
    }
}

}  // namespace

LinkDiagram parse_native_link(const std::string& text) {
    LinkDiagram d;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (blank(line)) continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string kw;
            ls >> kw;
            if (kw != "arcs") throw ParseError("native link file must start with 'arcs <n>'");
            if (!(ls >> d.arc_count) || d.arc_count < 1)
                throw ParseError("invalid arc count");
            std::string junk;
            if (ls >> junk) throw ParseError("trailing tokens after arc count");
            have_header = true;
            continue;
        }
        std::string first;
        ls >> first;
        if (first == "component") {
            std::vector<int> comp;
            int a;
            while (ls >> a) comp.push_back(a - 1);
            if (!ls.eof()) throw ParseError("malformed component line");
            if (comp.empty()) throw ParseError("empty component line");
            d.components.push_back(std::move(comp));
            continue;
        }
        Crossing cr;
        try {
            std::size_t pos = 0;
            cr.under_in = std::stoi(first, &pos) - 1;
            if (pos != first.size()) throw std::invalid_argument(first);
        } catch (const std::exception&) {
            throw ParseError("malformed crossing line: " + line);
        }
        std::string sign;
        if (!(ls >> cr.over >> cr.under_out >> sign))
            throw ParseError("malformed crossing line: " + line);
        --cr.over;
        --cr.under_out;
        if (sign == "+")
            cr.sign = +1;
        else if (sign == "-")
            cr.sign = -1;
        else
            throw ParseError("crossing sign must be + or -");
        std::string junk;
        if (ls >> junk) throw ParseError("trailing tokens on crossing line");
        d.crossings.push_back(cr);
    }
    if (!have_header) throw ParseError("empty link file");
    validate_closure(d);
    return d;
}

namespace {

struct EdgeUnionFind {
    std::vector<int> parent;
    explicit EdgeUnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct PdCrossing {
    int a, b, c, d;  // 0-based edges, counterclockwise from the incoming under-edge
};

std::vector<PdCrossing> tokenize_pd(const std::string& text) {
    std::vector<PdCrossing> out;
    std::size_t i = 0;
    auto skip_sep = [&] {
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    auto read_int = [&]() -> int {
        skip_sep();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw ParseError("expected edge label in PD code");
        try {
            return std::stoi(text.substr(start, i - start));
        } catch (const std::exception&) {
            throw ParseError("edge label out of range in PD code");
        }
    };
    while (true) {
        skip_sep();
        if (i >= text.size()) break;
        if (text[i] != 'X') throw ParseError("PD code token must start with 'X'");
        ++i;
        skip_sep();
        if (i >= text.size() || text[i] != '[') throw ParseError("expected '[' in PD token");
        ++i;
        PdCrossing cr{};
        cr.a = read_int() - 1;
        cr.b = read_int() - 1;
        cr.c = read_int() - 1;
        cr.d = read_int() - 1;
        skip_sep();
        if (i >= text.size() || text[i] != ']') throw ParseError("expected ']' in PD token");
        ++i;
    out.push_back(cr);
    }
    if (out.empty()) throw ParseError("PD code has no crossings");
    return out;
}

}  // namespace

LinkDiagram parse_pd_code(const std::string& text) {
    const std::vector<PdCrossing> pd = tokenize_pd(text);
    const int num_edges = 2 * static_cast<int>(pd.size());

    std::vector<int> appearances(num_edges, 0);
    for (const auto& cr : pd)
        for (int e : {cr.a, cr.b, cr.c, cr.d}) {
            if (e < 0 || e >= num_edges)
                throw ParseError("PD edge labels must be 1..2*crossings");
            ++appearances[e];
        }
    for (int e = 0; e < num_edges; ++e)
        if (appearances[e] != 2)
            throw ParseError("PD edge " + std::to_string(e + 1) +
                             " appears " + std::to_string(appearances[e]) +
                             " times, expected 2");

    // strand components: under-strands join a-c, over-strands join b-d
    EdgeUnionFind strands(num_edges);
    for (const auto& cr : pd) {
        strands.unite(cr.a, cr.c);
        strands.unite(cr.b, cr.d);
    }
    // each component must be a contiguous label range [lo..hi]
    std::map<int, std::pair<int, int>> range;  // root -> (lo, hi)
    for (int e = 0; e < num_edges; ++e) {
        auto [it, fresh] = range.try_emplace(strands.find(e), std::pair{e, e});
        if (!fresh) {
            it->second.first = std::min(it->second.first, e);
            it->second.second = std::max(it->second.second, e);
        }
    }
    std::vector<int> comp_lo(num_edges), comp_hi(num_edges);
    {
        std::vector<int> size_check(num_edges, 0);
        for (int e = 0; e < num_edges; ++e) {
            const auto [lo, hi] = range.at(strands.find(e));
            comp_lo[e] = lo;
            comp_hi[e] = hi;
            ++size_check[lo];
        }
        for (const auto& [root, lohi] : range)
            if (size_check[lohi.first] != lohi.second - lohi.first + 1)
                throw ParseError("PD components are not consecutively labeled");
    }
    auto succ = [&](int e) { return e == comp_hi[e] ? comp_lo[e] : e + 1; };

    for (const auto& cr : pd)
        if (succ(cr.a) != cr.c)
            throw ParseError("PD under-strand labels are not consecutive");

    // over-pass direction fixes the sign: the over strand entering at d is a
    // positive crossing, entering at b a negative one
    std::vector<int> signs;
    signs.reserve(pd.size());
    for (const auto& cr : pd) {
        const bool positive = succ(cr.d) == cr.b;
        const bool negative = succ(cr.b) == cr.d;
        if (positive && negative)
            throw ParseError("ambiguous PD code: two-edge component admits both orientations");
        if (!positive && !negative)
            throw ParseError("inconsistent PD code: over-pass labels not adjacent");
        signs.push_back(positive ? +1 : -1);
    }

    // arcs are maximal over-passes: merging b with d never splits an arc
    EdgeUnionFind arcs(num_edges);
    for (const auto& cr : pd) arcs.unite(cr.b, cr.d);
    std::vector<int> arc_id(num_edges, -1);
    int next_arc = 0;
    for (int e = 0; e < num_edges; ++e) {
        const int root = arcs.find(e);
        if (arc_id[root] < 0) arc_id[root] = next_arc++;
        arc_id[e] = arc_id[root];
    }

    LinkDiagram d;
    d.arc_count = next_arc;
    for (std::size_t k = 0; k < pd.size(); ++k) {
        Crossing cr;
        cr.under_in = arc_id[pd[k].a];
        cr.over = arc_id[pd[k].b];
        cr.under_out = arc_id[pd[k].c];
        cr.sign = signs[k];
        d.crossings.push_back(cr);
    }
    // arcs grouped by strand component, components ordered by least edge
    std::map<int, std::vector<int>> comp_arcs;
    for (int e = 0; e < num_edges; ++e) comp_arcs[comp_lo[e]].push_back(arc_id[e]);
    for (auto& [lo, list] : comp_arcs) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        d.components.push_back(std::move(list));
    }
    validate_closure(d);
    return d;
}

LinkDiagram parse_link_text(const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (text[i] == 'X') return parse_pd_code(text);
        return parse_native_link(text);
    }
    throw ParseError("empty link file");
}

std::vector<std::vector<int>> colorings(const LinkDiagram& d, const Table& t) {
    const int n = t.order();
    // under_in from (under_out, over): inv[over][out] is the unique c with
    // c > over = out, which needs bijective columns
    std::vector<std::vector<int>> inv(n, std::vector<int>(n, -1));
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            if (inv[y][t.op(x, y)] >= 0)
                throw DomainError("target is not a rack: column not bijective");
            inv[y][t.op(x, y)] = x;
        }

    std::vector<int> color(d.arc_count, -1);
    std::vector<int> trail;
    std::vector<std::vector<int>> found;

    auto propagate = [&]() -> bool {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& cr : d.crossings) {
                // orient the relation so "out = in > over" holds as written
                const int in = cr.sign > 0 ? cr.under_in : cr.under_out;
                const int out = cr.sign > 0 ? cr.under_out : cr.under_in;
                if (color[cr.over] < 0) continue;
                if (color[in] >= 0) {
                    const int w = t.op(color[in], color[cr.over]);
                    if (color[out] < 0) {
                        color[out] = w;
                        trail.push_back(out);
                        changed = true;
                    } else if (color[out] != w) {
                        return false;
                    }
                } else if (color[out] >= 0) {
                    color[in] = inv[color[cr.over]][color[out]];
                    trail.push_back(in);
                    changed = true;
                }
            }
        }
        return true;
    };

    auto dfs = [&](auto&& self) -> void {
        int arc = 0;
        while (arc < d.arc_count && color[arc] >= 0) ++arc;
        if (arc == d.arc_count) {
            found.push_back(color);
            return;
        }
        for (int v = 0; v < n; ++v) {
            const std::size_t mark = trail.size();
            color[arc] = v;
            trail.push_back(arc);
            if (propagate()) self(self);
            while (trail.size() > mark) {
                color[trail.back()] = -1;
                trail.pop_back();
            }
        }
    };

    dfs(dfs);
    std::sort(found.begin(), found.end());
    return found;
}

std::uint64_t counting_invariant(const LinkDiagram& d, const Table& t) {
    return colorings(d, t).size();
}

PolyMultiset phi_qp(const LinkDiagram& d, const Table& t) {
    PolyMultiset out;
    for (const auto& col : colorings(d, t)) {
        std::vector<int> used(col);
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        // the image is the subquandle generated by the arc colors
        const std::vector<int> image = subquandle_closure(t, used);
        out[sub_qp(t, image)] += 1;
    }
    return out;
}

ZPoly phi_qp_specialized(const LinkDiagram& d, const Table& t, long long s0, long long t0) {
    ZPoly out;
    for (const auto& [poly, mult] : phi_qp(d, t)) {
        const Int value = evaluate(poly, s0, t0);
        if (value < std::numeric_limits<long long>::min() ||
            value > std::numeric_limits<long long>::max())
            throw DomainError("specialized exponent exceeds machine range");
        out.add_term(static_cast<long long>(value), mult);
    }
    return out;
}

}  // namespace quandle
