#pragma once

#include <map>
#include <optional>

#include "wn/poly.hpp"

namespace wn {

struct Ideal {
    CtxPtr ctx;
    std::vector<Poly> gens; // zero generators pruned

    Ideal() = default;
    Ideal(CtxPtr c, std::vector<Poly> g);
    std::string str() const;
};

/// Reduced Groebner basis; over Euclidean bases (ZZ, ZZ/p^k) this is a strong
/// basis: closed under S- and G-polynomial reduction, giving canonical
/// normal forms. Immutable once built.
struct GroebnerBasis {
    CtxPtr ctx; // carries the order the basis was computed under
    std::vector<Poly> basis;
    bool strong_flag = false;
};

/// Buchberger completion + inter-reduction. The order is taken from the
/// ideal's context. Supported bases: QQ, GF(p) (classic), ZZ, ZZ/p^k
/// (strong, with G-polynomials and annihilator multiples).
GroebnerBasis buchberger(const Ideal& I);

/// Canonical normal form: no term is divisible (monomial and, over Euclidean
/// bases, coefficient modulo the leading coefficient) by any basis lead.
Poly normal_form(const Poly& f, const GroebnerBasis& G);

bool ideal_member(const Poly& f, const GroebnerBasis& G);
bool ideal_member(const Poly& f, const Ideal& I);

/// f in sqrt(I), via 1 in I + (1 - t*f) in the ambient ring extended by t.
/// Valid over ZZ, QQ and GF(p).
bool radical_member(const Poly& f, const Ideal& I);

// --- ideal-theoretic toolbox ---

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, unsigned n);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
/// (I : f)
Ideal ideal_quotient(const Ideal& I, const Poly& f);
/// (I : f^inf); iterates quotients until stabilization.
struct SaturationResult {
    Ideal ideal;
    unsigned steps = 0; // quotient iterations until stable
};
SaturationResult ideal_saturate(const Ideal& I, const Poly& f);

/// Equality of ideals via canonical GB comparison (same context and order).
bool ideal_equal(const Ideal& I, const Ideal& J);

/// Rebuild the ideal's polynomials in another context (variables matched by
/// name, coefficients through the target ring).
Ideal transport_ideal(const Ideal& I, const CtxPtr& dst);

/// Eliminate the first k context variables: GB under a block order, keep the
/// basis elements free of the prefix, expressed in the context on vars[k:].
Ideal eliminate_prefix(const Ideal& I, size_t k);

/// Krull dimension of the generic fiber (over QQ) and of each special fiber
/// (over GF(p)), via the dimension of the leading-term ideal. -1 means the
/// fiber is empty (unit ideal).
struct FiberDims {
    int generic;
    std::map<mpz_class, int> special;
};
FiberDims dim_fiberwise(const Ideal& I, const std::vector<mpz_class>& primes);

/// Certifying property: every S-polynomial (and G-polynomial / annihilator
/// multiple over Euclidean bases) of basis pairs reduces to zero.
bool certify_basis(const GroebnerBasis& G);

// --- representation-tracked variant, for explicit cofactor extraction ---

/// Basis where every element carries its representation in the input
/// generators: basis[i] == sum_j rep[i][j] * gens[j].
struct TrackedBasis {
    CtxPtr ctx;
    std::vector<Poly> gens;
    std::vector<Poly> basis;
    std::vector<std::vector<Poly>> rep;
};
TrackedBasis buchberger_tracked(const Ideal& I);

/// f == sum_j cofactors[j] * gens[j] + remainder.
struct TrackedNF {
    Poly remainder;
    std::vector<Poly> cofactors; // indexed like TrackedBasis::gens
};
TrackedNF normal_form_tracked(const Poly& f, const TrackedBasis& G);

} // namespace wn
