#include "wn/parse.hpp"

#include <cctype>

namespace wn {

namespace {

struct ExprParser {
    const std::string& s;
    size_t pos = 0;
    const CtxPtr& ctx;

    ExprParser(const std::string& text, const CtxPtr& c) : s(text), ctx(c) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(msg + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }

    mpz_class integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return mpz_class(s.substr(start, pos - start));
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected identifier");
        return s.substr(start, pos - start);
    }

    Poly atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Poly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == '-') {
            eat('-');
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(ctx, mpq_class(integer()));
        std::string name = ident();
        auto idx = ctx->var_index(name);
        if (!idx) fail("unknown variable '" + name + "' in " + ctx->describe());
        return Poly::variable(ctx, *idx);
    }

    Poly factor() {
        Poly base = atom();
        if (eat('^')) {
            mpz_class n = integer();
            if (n < 0 || n > 4096) fail("exponent out of range");
            return base.pow(static_cast<unsigned>(n.get_ui()));
        }
        return base;
    }

    Poly term() {
        Poly r = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                eat('*');
                r = r * factor();
            } else if (c == '/') {
                eat('/');
                Poly d = factor();
                if (!d.is_constant() || d.is_zero())
                    fail("division only by nonzero constants");
                mpq_class dc = d.terms().front().c;
                if (!ctx->ring.is_unit(dc))
                    fail("division by non-unit '" + dc.get_str() + "' over " +
                         ctx->ring.describe());
                r = r.scaled(ctx->ring.inv(dc));
            } else {
                return r;
            }
        }
    }

    Poly expr() {
        Poly r = peek() == '-' ? Poly::zero(ctx) : term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                eat('+');
                r = r + term();
            } else if (c == '-') {
                eat('-');
                r = r - term();
            } else {
                return r;
            }
        }
    }

    Poly parse_all() {
        Poly r = expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return r;
    }
};

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// split on commas at depth 0
std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!strip(cur).empty() || !out.empty()) out.push_back(strip(cur));
    return out;
}

} // namespace

Poly parse_poly(const std::string& text, const CtxPtr& ctx) {
    ExprParser p(text, ctx);
    return p.parse_all();
}

std::vector<Poly> parse_poly_list(const std::string& text, const CtxPtr& ctx) {
    std::vector<Poly> out;
    for (auto& piece : split_commas(text))
        if (!piece.empty()) out.push_back(parse_poly(piece, ctx));
    return out;
}

CoeffRing parse_coeff_ring(const std::string& text) {
    std::string t = strip(text);
    if (t == "ZZ") return CoeffRing::ZZ();
    if (t == "QQ") return CoeffRing::QQ();
    if (t.rfind("GF(", 0) == 0 && t.back() == ')')
        return CoeffRing::GF(mpz_class(strip(t.substr(3, t.size() - 4))));
    if (t.rfind("ZM(", 0) == 0 && t.back() == ')') {
        auto parts = split_commas(t.substr(3, t.size() - 4));
        if (parts.size() != 2) throw parse_error("ZM(p,k) expects two arguments");
        return CoeffRing::ZMod(mpz_class(parts[0]), std::stoul(parts[1]));
    }
    throw parse_error("unknown base ring '" + t + "'");
}

RingSpec parse_ring_spec(const std::string& text, MonomialOrder order) {
    std::string t = strip(text);
    size_t lb = t.find('[');
    size_t rb = t.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw parse_error("ring spec must look like BASE[v1,...] or BASE[...]/(...)");
    CoeffRing base = parse_coeff_ring(t.substr(0, lb));
    std::vector<std::string> vars;
    for (auto& v : split_commas(t.substr(lb + 1, rb - lb - 1))) {
        if (v.empty()) throw parse_error("empty variable name");
        vars.push_back(v);
    }
    RingSpec spec{make_context(base, vars, order), {}};
    std::string rest = strip(t.substr(rb + 1));
    if (!rest.empty()) {
        if (rest.front() != '/') throw parse_error("expected '/' before defining ideal");
        rest = strip(rest.substr(1));
        if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
            throw parse_error("defining ideal must be parenthesized");
        spec.defining = parse_poly_list(rest.substr(1, rest.size() - 2), spec.ctx);
    }
    return spec;
}

} // namespace wn
