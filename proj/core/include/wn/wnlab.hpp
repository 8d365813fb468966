#pragma once

#include "wn/certificates.hpp"

namespace wn {

/// Swan's condition on a pair b^3 = c^2: the witness a (forced to c/b in the
/// fraction field of the asserted domain) exists with a^2 = b, a^3 = c, or
/// the pair is a seminormality violation.
Certificate swan_check(const FPRing& R, const Poly& b, const Poly& c);

/// Yanagihara's p-power condition on (b, c, e) and a non-zerodivisor d with
/// c^p = b*d^p, p*c = d*e: witness a with a^p = b, p*a = e, or a violation.
Certificate yanagihara_check(const FPRing& R, const mpz_class& p, const Poly& b,
                             const Poly& c, const Poly& d, const Poly& e);

/// s certifies failure of weak normality of R in S when f(s) - g(s) is
/// nilpotent in S (x)_R S and s is outside the image of R.
Certificate manaresi_witness(const RingMap& phi, const Poly& s);

/// Sound-but-incomplete positive probe of the equalizer condition over a
/// finite probe set; returns the first ManaresiWitness found, else an
/// EqualizerPass recording the probed set (explicitly not a proof).
Certificate equalizer_probe(const RingMap& phi, const std::vector<Poly>& probe_set);

/// All monomials of the ring's variables up to a degree bound, ascending.
std::vector<Poly> default_probe_set(const CtxPtr& ctx, unsigned degree_bound);

enum class SearchMode { Swan, Yanagihara, Both };

/// Exhaustive violation search over elements a of the extension ring S
/// (phi: R -> S, S the asserted normalization): every polynomial with
/// monomial degree <= degree_bound and integer coefficients in
/// [-height_bound, height_bound], in deterministic lexicographic order.
/// Empty result is evidence within bounds, not a proof.
std::vector<Certificate> bounded_violation_search(const RingMap& phi,
                                                  unsigned degree_bound,
                                                  unsigned height_bound,
                                                  SearchMode mode = SearchMode::Swan,
                                                  const mpz_class& p = 2);

/// Re-verify a certificate's defining identities from scratch.
bool verify_certificate(const Certificate& cert, const FPRing& R);
bool verify_certificate(const Certificate& cert, const RingMap& phi);

} // namespace wn
