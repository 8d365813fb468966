#pragma once

#include "wn/fpring.hpp"

namespace wn {

/// Point of projective space, coordinates canonicalized: zeros up to the
/// first unit coordinate, which is scaled to 1. modulus 0 means integer
/// (lift) coordinates, otherwise coordinates live in GF(modulus).
struct ProjPoint {
    mpz_class modulus = 0;
    std::vector<mpz_class> coords;

    bool operator==(const ProjPoint& o) const {
        return modulus == o.modulus && coords == o.coords;
    }
    std::string str() const;
};

/// Canonicalize integer coordinates as a point over GF(p): strip the common
/// p-power, reduce mod p, scale the first nonzero coordinate to 1.
/// Independent of the chosen lift. Throws on the zero vector.
ProjPoint specialize(const std::vector<mpz_class>& lift, const mpz_class& p);

/// All points of P^d(GF(p)), canonical representatives in deterministic
/// order: pivot position ascending, trailing coordinates counting up.
std::vector<ProjPoint> enumerate_proj(unsigned d, const mpz_class& p);

/// Scan context: ring, chosen generators x_0..x_d of the distinguished
/// maximal ideal, primes to avoid outright, and spots where the hyperplane
/// section must additionally miss the symbolic square.
struct SectionContext {
    FPRing R;
    std::vector<Poly> x_list;
    std::vector<PrimeSpot> bad_primes;
    std::vector<PrimeSpot> wn_spots;
};

/// sum alpha_i * x_i as a normal form in R.
Poly section_element(const SectionContext& ctx, const std::vector<mpz_class>& lift);

/// p^(n) = (p^n R_p) cap R, computed as the saturation of p^n + defining
/// relations at the spot's saturation element, with validation flags.
struct SymbolicPowerResult {
    Ideal ideal;          // in the polynomial cover
    bool contained = false; // p^(n) subseteq p
    unsigned steps = 0;     // saturation iterations
};
SymbolicPowerResult symbolic_power(const PrimeSpot& p, unsigned n);

struct ScanVerdict {
    ProjPoint alpha;
    std::vector<mpz_class> lift;
    bool good = false;
    std::string reason; // empty when good
};

struct ScanReport {
    mpz_class q;
    size_t total = 0;
    size_t good_count = 0;
    std::vector<ScanVerdict> verdicts;
};

/// Exhaustive scan of P^d(GF(q)), q prime: a point is good when its section
/// element avoids every bad prime and the symbolic square of every wn spot.
/// Lifts are the canonical representatives in {0..q-1}. Parallel over points
/// (WN_THREADS), result independent of the thread count.
ScanReport bertini_scan(const SectionContext& ctx, const mpz_class& q);

} // namespace wn
