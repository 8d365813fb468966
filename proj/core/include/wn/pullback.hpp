#pragma once

#include "wn/wnlab.hpp"

namespace wn {

/// Fiber-product data R x_{R/I} B for a subring B of R/I given by generators.
struct PullbackSpec {
    FPRing R;
    Ideal I;                   // in R's polynomial cover
    std::vector<Poly> B_gens;  // lifts in R of the subring generators
    mpz_class p = 2;
    unsigned e_bound = 4;
};

/// Reducedness evidence for R/I: every probe element that lies in the
/// radical of the cover ideal already lies in the ideal. Advisory only.
bool reduced_probe(const PullbackSpec& spec);

/// Per-variable generic pure inseparability: least e with v^(p^e) in B.
struct GpiResult {
    bool ok = false;                        // every variable resolved
    std::vector<int> exponent;              // per R/I variable, -1 = not found
    std::vector<std::string> var_names;
};
GpiResult gpi_check(const PullbackSpec& spec);

/// Presentation of the pullback subring R' = {r in R : r mod I in B},
/// generated by the lifts of B_gens, the non-constant generators of I and
/// any extra generators, with the inclusion R' -> R.
struct PullbackResult {
    FPRing Rprime;
    RingMap inclusion;            // Rprime -> R
    std::vector<Poly> generators; // images in R, one per Rprime variable
    unsigned probe_degree = 0;    // surjectivity probe bound that passed
};
PullbackResult fiber_product(const PullbackSpec& spec,
                             const std::vector<Poly>& extra_gens = {},
                             unsigned probe_degree = 3);

/// Search for s in R with s outside R', s^(p^e) in R' for some e <= e_bound
/// and p*s in R'; the result is a re-verified Manaresi-style witness that
/// R' is not weakly normal in R. nullopt when no witness in range.
std::optional<Certificate> certify_not_wn(const PullbackResult& pb, const mpz_class& p,
                                          unsigned degree_bound = 3,
                                          unsigned e_bound = 3);

} // namespace wn
