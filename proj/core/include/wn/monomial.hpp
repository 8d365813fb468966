#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "wn/coeff.hpp"

namespace wn {

/// Exponent vector; length always equals the ambient variable count.
struct Monomial {
    std::vector<uint32_t> e;

    explicit Monomial(size_t n = 0) : e(n, 0) {}
    explicit Monomial(std::vector<uint32_t> exps) : e(std::move(exps)) {}

    size_t nvars() const { return e.size(); }
    uint64_t degree() const { return std::accumulate(e.begin(), e.end(), uint64_t{0}); }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    /// o / this, assuming divisibility.
    Monomial quotient_into(const Monomial& o) const {
        Monomial r(o);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

enum class OrderKind { Lex, GrevLex, Block };

/// Total multiplicative order with 1 minimal. Block(k) puts the first k
/// variables into a grevlex block that dominates the inner order on the
/// rest; this is the elimination order for the variable prefix.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    size_t block = 0;          // eliminated-prefix length, Block only
    OrderKind inner = OrderKind::GrevLex; // inner order, Block only

    static MonomialOrder lex() { return {OrderKind::Lex, 0, OrderKind::Lex}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0, OrderKind::GrevLex}; }
    static MonomialOrder elim(size_t k, OrderKind in = OrderKind::GrevLex) {
        return {OrderKind::Block, k, in};
    }

    bool operator==(const MonomialOrder& o) const {
        if (kind != o.kind) return false;
        if (kind == OrderKind::Block) return block == o.block && inner == o.inner;
        return true;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    /// -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        return cmp_range(kind, a, b, 0, a.nvars());
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::string describe() const {
        switch (kind) {
        case OrderKind::Lex: return "lex";
        case OrderKind::GrevLex: return "grevlex";
        default:
            return "block(" + std::to_string(block) + "," +
                   (inner == OrderKind::Lex ? "lex" : "grevlex") + ")";
        }
    }

private:
    static int cmp_lex(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        }
        return 0;
    }
    static int cmp_grevlex(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
        uint64_t da = 0, db = 0;
        for (size_t i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (size_t i = hi; i-- > lo;) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        return 0;
    }
    int cmp_range(OrderKind k, const Monomial& a, const Monomial& b, size_t lo, size_t hi) const {
        if (k == OrderKind::Block) {
            size_t mid = std::min(block, hi);
            if (int c = cmp_grevlex(a, b, lo, mid)) return c;
            return inner == OrderKind::Lex ? cmp_lex(a, b, mid, hi) : cmp_grevlex(a, b, mid, hi);
        }
        return k == OrderKind::Lex ? cmp_lex(a, b, lo, hi) : cmp_grevlex(a, b, lo, hi);
    }
};

} // namespace wn
