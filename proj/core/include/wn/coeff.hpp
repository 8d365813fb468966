#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace wn {

struct wn_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Mismatched ambient rings / variable lists.
struct incompatible_context : wn_error {
    using wn_error::wn_error;
};
/// Operation not supported over the given base ring.
struct unsupported_base : wn_error {
    using wn_error::wn_error;
};
/// A stated precondition failed verification.
struct precondition_failed : wn_error {
    using wn_error::wn_error;
};
struct parse_error : wn_error {
    using wn_error::wn_error;
};

enum class CoeffKind {
    IntegerRing,         // ZZ
    RationalField,       // QQ
    PrimeField,          // GF(p)
    IntegerModPrimePower // ZZ/p^k, k >= 1
};

/// Deterministic primality test (trial division; inputs are desk-scale).
bool is_prime(const mpz_class& n);

// Coefficients are stored as mpq_class; every ring other than QQ keeps the
// denominator at 1 and the numerator canonically reduced (mod p^k where
// applicable, least non-negative representative).
class CoeffRing {
public:
    static CoeffRing ZZ() { return CoeffRing(CoeffKind::IntegerRing, 0, 0); }
    static CoeffRing QQ() { return CoeffRing(CoeffKind::RationalField, 0, 0); }
    static CoeffRing GF(const mpz_class& p);
    static CoeffRing ZMod(const mpz_class& p, unsigned k);

    CoeffKind kind() const { return kind_; }
    const mpz_class& p() const { return p_; }
    unsigned k() const { return k_; }
    /// p^k for IntegerModPrimePower, p for PrimeField, 0 otherwise.
    const mpz_class& modulus() const { return modulus_; }

    bool is_field() const {
        return kind_ == CoeffKind::RationalField || kind_ == CoeffKind::PrimeField;
    }
    /// ZZ and ZZ/p^k: Euclidean but not a field. Strong GB territory.
    bool is_euclidean_nonfield() const {
        return kind_ == CoeffKind::IntegerRing || kind_ == CoeffKind::IntegerModPrimePower;
    }

    /// Reduce a raw value to the canonical representative.
    mpq_class canon(const mpq_class& a) const;
    bool is_zero(const mpq_class& a) const { return canon(a) == 0; }
    bool is_unit(const mpq_class& a) const;
    /// Multiplicative inverse of a unit.
    mpq_class inv(const mpq_class& a) const;

    /// Exact divisibility a | b in this ring.
    bool divides(const mpq_class& a, const mpq_class& b) const;
    mpq_class div_exact(const mpq_class& b, const mpq_class& a) const;

    /// Euclidean division b = q*a + r with r canonical ("small"): over ZZ,
    /// 0 <= r < |a|; over ZZ/p^k, r = b when v_p(b) < v_p(a) else 0; over a
    /// field, r = 0. Returns {q, r}.
    std::pair<mpq_class, mpq_class> euclid(const mpq_class& b, const mpq_class& a) const;

    /// gcd g = x*a + y*b with g the canonical positive generator of (a,b).
    struct Bezout {
        mpq_class g, x, y;
    };
    Bezout gcdext(const mpq_class& a, const mpq_class& b) const;

    /// Normalizing unit u so that u*a is the canonical associate (positive
    /// over ZZ, p^v over ZZ/p^k, 1 over a field when a is the leading coeff).
    mpq_class assoc_unit(const mpq_class& a) const;

    /// Parse an integer (or a/b in QQ) literal into this ring; throws
    /// parse_error when the value is not representable (e.g. 1/2 over ZZ).
    mpq_class from_fraction(const mpz_class& num, const mpz_class& den) const;

    std::string describe() const;

    bool operator==(const CoeffRing& o) const {
        return kind_ == o.kind_ && p_ == o.p_ && k_ == o.k_;
    }
    bool operator!=(const CoeffRing& o) const { return !(*this == o); }

private:
    CoeffRing(CoeffKind kind, mpz_class p, unsigned k);
    CoeffKind kind_;
    mpz_class p_;
    unsigned k_;
    mpz_class modulus_;
    unsigned val_p(const mpz_class& a) const;
};

} // namespace wn
