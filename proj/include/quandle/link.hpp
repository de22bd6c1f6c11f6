#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quandle/poly.hpp"
#include "quandle/table.hpp"

namespace quandle {

// One crossing in arc terms, 0-based arc ids. At sign +1 the relation is
// color(under_out) = color(under_in) > color(over); at sign -1 it is
// color(under_in) = color(under_out) > color(over).
struct Crossing {
    int under_in = 0;
    int over = 0;
    int under_out = 0;
    int sign = +1;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct LinkDiagram {
    int arc_count = 0;
    std::vector<Crossing> crossings;
    // optional partition of arcs into link components; empty when unknown
    std::vector<std::vector<int>> components;
};

// Native crossing-list format:
//   arcs <n>
//   component <a> <b> ...        (optional lines, 1-based arcs)
//   <under_in> <over> <under_out> <sign>   one line per crossing, sign + or -
// '#' starts a comment. Every arc must appear exactly once as under_in and
// once as under_out, or not at all in under slots (a closed component with
// no underpasses).
LinkDiagram parse_native_link(const std::string& text);

// PD notation: X[a,b,c,d] tokens, 1-based edge labels numbered consecutively
// along each component; a is the incoming under-edge, c the outgoing one.
// Signs come from the successor convention on the over pair (b,d); codes
// where both readings are consistent (two-edge components) are rejected as
// ambiguous. Over-passes merge edges into arcs.
LinkDiagram parse_pd_code(const std::string& text);

// dispatch on the first token: "arcs" -> native, "X[" -> PD
LinkDiagram parse_link_text(const std::string& text);

// All colorings of arcs by elements of t satisfying every crossing relation,
// ordered lexicographically. t must be a rack so that under_in is determined
// by (under_out, over).
std::vector<std::vector<int>> colorings(const LinkDiagram& d, const Table& t);

std::uint64_t counting_invariant(const LinkDiagram& d, const Table& t);

// multiset of subquandle polynomials of coloring images (images taken as the
// closure of the used colors, counts in the ambient target)
PolyMultiset phi_qp(const LinkDiagram& d, const Table& t);

// sum of z^(image polynomial evaluated at (s0,t0)) over colorings
ZPoly phi_qp_specialized(const LinkDiagram& d, const Table& t, long long s0, long long t0);

}  // namespace quandle
