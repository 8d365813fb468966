#include "wn/coeff.hpp"

namespace wn {

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    mpz_class d = 3;
    while (d * d <= n) {
        if (n % d == 0) return false;
        d += 2;
    }
    return true;
}

CoeffRing::CoeffRing(CoeffKind kind, mpz_class p, unsigned k)
    : kind_(kind), p_(std::move(p)), k_(k), modulus_(0) {
    if (kind_ == CoeffKind::PrimeField) modulus_ = p_;
    if (kind_ == CoeffKind::IntegerModPrimePower) {
        mpz_pow_ui(modulus_.get_mpz_t(), p_.get_mpz_t(), k_);
    }
}

CoeffRing CoeffRing::GF(const mpz_class& p) {
    if (!is_prime(p)) throw precondition_failed("GF(p): p = " + p.get_str() + " is not prime");
    return CoeffRing(CoeffKind::PrimeField, p, 1);
}

CoeffRing CoeffRing::ZMod(const mpz_class& p, unsigned k) {
    if (!is_prime(p)) throw precondition_failed("ZMod: p = " + p.get_str() + " is not prime");
    if (k == 0) throw precondition_failed("ZMod: k must be positive");
    return CoeffRing(CoeffKind::IntegerModPrimePower, p, k);
}

mpq_class CoeffRing::canon(const mpq_class& a) const {
    switch (kind_) {
    case CoeffKind::RationalField: {
        mpq_class r = a;
        r.canonicalize();
        return r;
    }
    case CoeffKind::IntegerRing: {
        if (a.get_den() != 1) throw precondition_failed("non-integer coefficient over ZZ");
        return a;
    }
    default: {
        if (a.get_den() != 1) throw precondition_failed("non-integer coefficient over modular ring");
        mpz_class n = a.get_num() % modulus_;
        if (n < 0) n += modulus_;
        return mpq_class(n);
    }
    }
}

unsigned CoeffRing::val_p(const mpz_class& a) const {
    // a != 0, canonical in [0, p^k)
    unsigned v = 0;
    mpz_class t = a;
    while (v < k_ && t % p_ == 0) {
        t /= p_;
        ++v;
    }
    return v;
}

bool CoeffRing::is_unit(const mpq_class& a) const {
    mpq_class c = canon(a);
    switch (kind_) {
    case CoeffKind::RationalField: return c != 0;
    case CoeffKind::PrimeField: return c != 0;
    case CoeffKind::IntegerRing: return c == 1 || c == -1;
    default: return c != 0 && c.get_num() % p_ != 0;
    }
}

mpq_class CoeffRing::inv(const mpq_class& a) const {
    mpq_class c = canon(a);
    if (!is_unit(c)) throw precondition_failed("inverse of a non-unit");
    switch (kind_) {
    case CoeffKind::RationalField: return mpq_class(1) / c;
    case CoeffKind::IntegerRing: return c; // +-1
    default: {
        mpz_class r;
        if (mpz_invert(r.get_mpz_t(), c.get_num().get_mpz_t(), modulus_.get_mpz_t()) == 0)
            throw precondition_failed("inverse of a non-unit");
        return mpq_class(r);
    }
    }
}

bool CoeffRing::divides(const mpq_class& a, const mpq_class& b) const {
    mpq_class ca = canon(a), cb = canon(b);
    if (ca == 0) return cb == 0;
    switch (kind_) {
    case CoeffKind::RationalField:
    case CoeffKind::PrimeField: return true;
    case CoeffKind::IntegerRing: return cb.get_num() % ca.get_num() == 0;
    default: {
        if (cb == 0) return true;
        return val_p(ca.get_num()) <= val_p(cb.get_num());
    }
    }
}

mpq_class CoeffRing::div_exact(const mpq_class& b, const mpq_class& a) const {
    mpq_class ca = canon(a), cb = canon(b);
    if (ca == 0) throw precondition_failed("division by zero");
    switch (kind_) {
    case CoeffKind::RationalField: return canon(cb / ca);
    case CoeffKind::PrimeField: return canon(cb * inv(ca));
    case CoeffKind::IntegerRing: {
        if (cb.get_num() % ca.get_num() != 0) throw precondition_failed("inexact division over ZZ");
        return mpq_class(mpz_class(cb.get_num() / ca.get_num()));
    }
    default: {
        if (cb == 0) return mpq_class(0);
        unsigned va = val_p(ca.get_num()), vb = val_p(cb.get_num());
        if (va > vb) throw precondition_failed("inexact division over ZZ/p^k");
        mpz_class pa;
        mpz_pow_ui(pa.get_mpz_t(), p_.get_mpz_t(), va);
        mpz_class ua = ca.get_num() / pa; // unit part
        mpz_class uinv;
        mpz_invert(uinv.get_mpz_t(), ua.get_mpz_t(), modulus_.get_mpz_t());
        mpz_class q = (cb.get_num() / pa) * uinv;
        return canon(mpq_class(q));
    }
    }
}

std::pair<mpq_class, mpq_class> CoeffRing::euclid(const mpq_class& b, const mpq_class& a) const {
    mpq_class ca = canon(a), cb = canon(b);
    if (ca == 0) throw precondition_failed("euclidean division by zero");
    switch (kind_) {
    case CoeffKind::RationalField:
    case CoeffKind::PrimeField:
        return {div_exact(cb, ca), mpq_class(0)};
    case CoeffKind::IntegerRing: {
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), cb.get_num().get_mpz_t(), ca.get_num().get_mpz_t());
        if (ca < 0) { // force 0 <= r < |a|
            mpz_cdiv_qr(q.get_mpz_t(), r.get_mpz_t(), cb.get_num().get_mpz_t(),
                        ca.get_num().get_mpz_t());
        }
        return {mpq_class(q), mpq_class(r)};
    }
    default: {
        if (cb == 0) return {mpq_class(0), mpq_class(0)};
        if (divides(ca, cb)) return {div_exact(cb, ca), mpq_class(0)};
        return {mpq_class(0), cb};
    }
    }
}

CoeffRing::Bezout CoeffRing::gcdext(const mpq_class& a, const mpq_class& b) const {
    mpq_class ca = canon(a), cb = canon(b);
    switch (kind_) {
    case CoeffKind::RationalField:
    case CoeffKind::PrimeField: {
        if (ca != 0) return {mpq_class(1), inv(ca), mpq_class(0)};
        if (cb != 0) return {mpq_class(1), mpq_class(0), inv(cb)};
        return {mpq_class(0), mpq_class(0), mpq_class(0)};
    }
    case CoeffKind::IntegerRing: {
        mpz_class g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), ca.get_num().get_mpz_t(),
                   cb.get_num().get_mpz_t());
        return {mpq_class(g), mpq_class(x), mpq_class(y)};
    }
    default: {
        if (ca == 0 && cb == 0) return {mpq_class(0), mpq_class(0), mpq_class(0)};
        unsigned va = ca == 0 ? k_ : val_p(ca.get_num());
        unsigned vb = cb == 0 ? k_ : val_p(cb.get_num());
        mpz_class g;
        mpz_pow_ui(g.get_mpz_t(), p_.get_mpz_t(), std::min(va, vb));
        if (va <= vb) {
            // g = u^{-1} * a with u the unit part of a
            mpq_class x = div_exact(mpq_class(g), ca);
            return {mpq_class(g), x, mpq_class(0)};
        }
        mpq_class y = div_exact(mpq_class(g), cb);
        return {mpq_class(g), mpq_class(0), y};
    }
    }
}

mpq_class CoeffRing::assoc_unit(const mpq_class& a) const {
    mpq_class c = canon(a);
    if (c == 0) throw precondition_failed("assoc_unit of zero");
    switch (kind_) {
    case CoeffKind::RationalField:
    case CoeffKind::PrimeField: return inv(c);
    case CoeffKind::IntegerRing: return c < 0 ? mpq_class(-1) : mpq_class(1);
    default: {
        unsigned v = val_p(c.get_num());
        mpz_class pv;
        mpz_pow_ui(pv.get_mpz_t(), p_.get_mpz_t(), v);
        mpz_class u = c.get_num() / pv;
        mpz_class uinv;
        mpz_invert(uinv.get_mpz_t(), u.get_mpz_t(), modulus_.get_mpz_t());
        return mpq_class(uinv);
    }
    }
}

mpq_class CoeffRing::from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw parse_error("division by zero");
    if (kind_ == CoeffKind::RationalField) {
        mpq_class r(num, den);
        r.canonicalize();
        return r;
    }
    // Non-field bases (and GF(p)) admit n/d only when d is a unit.
    mpq_class d = canon(mpq_class(den));
    if (!is_unit(d))
        throw parse_error("coefficient " + num.get_str() + "/" + den.get_str() +
                          " not representable over " + describe());
    return canon(mpq_class(num) * inv(d));
}

std::string CoeffRing::describe() const {
    switch (kind_) {
    case CoeffKind::IntegerRing: return "ZZ";
    case CoeffKind::RationalField: return "QQ";
    case CoeffKind::PrimeField: return "GF(" + p_.get_str() + ")";
    default: return "ZM(" + p_.get_str() + "," + std::to_string(k_) + ")";
    }
}

} // namespace wn
