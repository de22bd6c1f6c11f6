#include "quandle/poly.hpp"

#include <algorithm>
#include <cctype>

namespace quandle {

BivariatePoly BivariatePoly::constant(Int c) {
    BivariatePoly p;
    p.add_term(0, 0, c);
    return p;
}

void BivariatePoly::add_term(int es, int et, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find({es, et});
    if (it == terms_.end()) {
        terms_.emplace(Key{es, et}, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, v);
    return *this;
}

void ZPoly::add_term(long long ez, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(ez);
    if (it == terms_.end()) {
        terms_.emplace(ez, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

BivariatePoly qp(const Table& t) {
    const CountProfile p = count_profile(t);
    BivariatePoly out;
    for (int i = 0; i < t.order(); ++i) out.add_term(p.r[i], p.c[i], 1);
    return out;
}

BivariatePoly sub_qp(const Table& t, const std::vector<int>& members) {
    const int n = t.order();
    std::vector<char> in(n, 0);
    for (int x : members) {
        if (x < 0 || x >= n) throw DomainError("subset element out of range");
        in[x] = 1;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (in[a] && in[b] && !in[t.op(a, b)])
                throw DomainError("subset is not closed under the operation");
    const CountProfile p = count_profile(t);
    BivariatePoly out;
    for (int x = 0; x < n; ++x)
        if (in[x]) out.add_term(p.r[x], p.c[x], 1);
    return out;
}

BivariatePoly row_poly(const Table& t) {
    const BivariatePoly full = qp(t);
    BivariatePoly out;
    for (const auto& [k, v] : full.terms()) out.add_term(k.first, 0, v);
    return out;
}

BivariatePoly col_poly(const Table& t) {
    const BivariatePoly full = qp(t);
    BivariatePoly out;
    for (const auto& [k, v] : full.terms()) out.add_term(0, k.second, v);
    return out;
}

namespace {

Int int_pow(long long base, int exp) {
    if (exp < 0) {
        // only unit bases have exact integer inverses
        if (base == 1) return 1;
        if (base == -1) return (exp % 2 == 0) ? 1 : -1;
        throw DomainError("negative exponent requires base +1 or -1");
    }
    Int acc = 1, b = base;
    for (int i = 0; i < exp; ++i) acc *= b;
    return acc;
}

std::string coeff_body(const Int& coeff, const std::string& factors) {
    const Int mag = abs(coeff);
    if (factors.empty()) return mag.str();
    if (mag == 1) return factors;
    return mag.str() + factors;
}

std::string var_factor(char var, int e) {
    if (e == 0) return "";
    std::string out(1, var);
    if (e != 1) out += "^" + std::to_string(e);
    return out;
}

}  // namespace

Int evaluate(const BivariatePoly& p, long long s0, long long t0) {
    Int acc = 0;
    for (const auto& [k, v] : p.terms())
        acc += v * int_pow(s0, k.first) * int_pow(t0, k.second);
    return acc;
}

std::string canonical_text(const BivariatePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [k, v] : p.terms()) {
        const std::string body = coeff_body(v, var_factor('s', k.first) + var_factor('t', k.second));
        if (out.empty())
            out = (v < 0 ? "-" : "") + body;
        else
            out += (v < 0 ? " - " : " + ") + body;
    }
    return out;
}

std::string canonical_text(const ZPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, v] : p.terms()) {
        std::string factor;
        if (e != 0) {
            factor = "z";
            if (e != 1) factor += "^" + std::to_string(e);
        }
        const std::string body = coeff_body(v, factor);
        if (out.empty())
            out = (v < 0 ? "-" : "") + body;
        else
            out += (v < 0 ? " - " : " + ") + body;
    }
    return out;
}

namespace {

// minimal scanner for the canonical polynomial text
struct Scanner {
    const std::string& s;
    std::size_t i = 0;

    explicit Scanner(const std::string& text) : s(text) {}

    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++i;
        return true;
    }
    bool eat_str(const std::string& w) {
        if (s.compare(i, w.size(), w) != 0) return false;
        i += w.size();
        return true;
    }

    long long integer() {
        bool neg = eat('-');
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer in polynomial text");
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return neg ? -v : v;
    }

    Int magnitude() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected coefficient in polynomial text");
        Int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return v;
    }
};

}  // namespace

BivariatePoly parse_poly(const std::string& text) {
    BivariatePoly out;
    Scanner sc(text);
    if (sc.eat_str("0") && sc.done()) return out;
    sc.i = 0;

    bool neg = sc.eat('-');
    while (true) {
        Int coeff = std::isdigit(static_cast<unsigned char>(sc.peek())) ? sc.magnitude() : Int(1);
        int es = 0, et = 0;
        if (sc.eat('s')) es = sc.eat('^') ? static_cast<int>(sc.integer()) : 1;
        if (sc.eat('t')) et = sc.eat('^') ? static_cast<int>(sc.integer()) : 1;
        out.add_term(es, et, neg ? -coeff : coeff);
        if (sc.done()) break;
        if (sc.eat_str(" + "))
            neg = false;
        else if (sc.eat_str(" - "))
            neg = true;
        else
            throw ParseError("unexpected character in polynomial text");
    }
    if (canonical_text(out) != text) throw ParseError("polynomial text is not canonical");
    return out;
}

}  // namespace quandle
