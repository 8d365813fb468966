#pragma once

#include <optional>

#include "wn/groebner.hpp"

namespace wn {

/// Finitely presented algebra base[vars]/defining with a cached (strong) GB.
/// Element equality is equality of normal forms. Immutable after build.
class FPRing {
public:
    FPRing() = default;
    FPRing(CtxPtr ctx, Ideal defining, bool asserted_domain = false);
    /// Polynomial ring: empty defining ideal.
    static FPRing poly_ring(CtxPtr ctx) { return FPRing(std::move(ctx), Ideal{}, true); }

    const CtxPtr& ctx() const { return ctx_; }
    const Ideal& defining() const { return defining_; }
    const GroebnerBasis& gb() const { return *gb_; }
    bool asserted_domain() const { return asserted_domain_; }

    Poly nf(const Poly& f) const { return normal_form(f, *gb_); }
    bool is_zero(const Poly& f) const { return nf(f).is_zero(); }
    bool equal(const Poly& a, const Poly& b) const { return nf(a - b).is_zero(); }
    /// 1 != 0 in the quotient.
    bool is_proper() const;

    std::string describe() const;

private:
    CtxPtr ctx_;
    Ideal defining_;
    std::shared_ptr<const GroebnerBasis> gb_;
    bool asserted_domain_ = false;
};

/// Homomorphism given by one target element per source variable.
/// Well-definedness (defining relations map to zero) is checked at build.
class RingMap {
public:
    RingMap(FPRing source, FPRing target, std::vector<Poly> images);

    const FPRing& source() const { return source_; }
    const FPRing& target() const { return target_; }
    const std::vector<Poly>& images() const { return images_; }

    Poly apply(const Poly& f) const;

    /// Combined context [target vars | source vars] (source variables renamed
    /// when they collide with target names); used for graph ideals and for
    /// parsing relative presentations.
    const CtxPtr& combined_ctx() const { return combined_; }
    /// Combined-context names of the source variables, in source order.
    const std::vector<std::string>& source_alias() const { return src_alias_; }

    /// Relative presentation of the target over the image (relations in
    /// combined_ctx()); required by relative_differentials.
    void set_relative_presentation(std::vector<Poly> rels);
    const std::vector<Poly>& relative_presentation() const { return rels_; }

    static RingMap identity(const FPRing& R);

private:
    FPRing source_, target_;
    std::vector<Poly> images_;
    CtxPtr combined_;
    std::vector<std::string> src_alias_;
    std::vector<Poly> rels_;
};

/// Module over an FPRing, given by generator count and relation rows.
struct PresentedModule {
    FPRing ring;
    size_t gens = 0;
    std::vector<std::vector<Poly>> relations; // each row has `gens` entries
};

/// Prime ideal of an FPRing; primality is user-asserted, properness checked.
struct PrimeSpot {
    FPRing ring;
    Ideal ideal; // generators in the polynomial cover
    bool asserted_prime = true;
    std::optional<Poly> saturation_element;

    PrimeSpot(FPRing R, Ideal I, std::optional<Poly> sat = std::nullopt);
    /// Cover ideal including the ring's defining relations.
    Ideal cover() const { return ideal_sum(ideal, ring.defining()); }
};

/// Advisory probe: looks for a zero-divisor pair f*g in p with f,g outside p
/// among products of generator normal forms up to a degree bound; returns
/// false when one is found (so the primality assertion is suspect).
bool prime_probe(const PrimeSpot& p, unsigned degree_bound = 2);

/// T = S (x)_R S presented by duplicating S's variables; left/right are the
/// two inclusions S -> T. For r in R, left(apply(r)) == right(apply(r)).
struct TensorSquare {
    FPRing T;
    std::vector<Poly> left_images, right_images; // per S-variable
    Poly left(const Poly& s) const;
    Poly right(const Poly& s) const;
};
TensorSquare tensor_square(const RingMap& phi);

/// Membership of a target element in the image subring, with preimage.
/// Builds the graph-ideal GB once; reusable for many queries.
class SubringTester {
public:
    explicit SubringTester(const RingMap& phi);
    /// Preimage in the source ring when f lies in the image, else nullopt.
    std::optional<Poly> preimage(const Poly& f) const;
    bool contains(const Poly& f) const { return preimage(f).has_value(); }

private:
    const RingMap& phi_;
    CtxPtr comb_;
    GroebnerBasis gb_;
    size_t ntarget_;
};
std::optional<Poly> subring_member(const Poly& f, const RingMap& phi);

/// Kernel of the map source_poly_ctx -> target, X_i -> images[i], as an
/// ideal of the source polynomial ring (graph ideal + elimination).
Ideal kernel_of_map(const CtxPtr& source_ctx, const FPRing& target,
                    const std::vector<Poly>& images);
Ideal kernel_of_map(const RingMap& phi);

/// Presentation of Omega_{S/R} from the map's relative presentation:
/// generators dT_j for target variables that are not themselves images of a
/// source variable; relations are the Jacobian rows of the relative
/// relations. Throws when the presentation is missing but needed.
PresentedModule relative_differentials(const RingMap& phi);

/// Zeroth Fitting ideal: gens x gens minors of the relation matrix; unit
/// ideal for the zero module, zero ideal when there are too few relations.
Ideal fitting_zero(const PresentedModule& M);

/// R_p -> S_p unramified: F0(Omega_{S/R}) not contained in p*S.
bool unramified_at(const RingMap& phi, const PrimeSpot& p);

/// Conductor of R -> S (S spanned over R by module_gens, witness verified):
/// transporter candidates k*mu over monomials mu of R up to degree_bound and
/// integer scalars k <= scalar_bound; `exact` is set when one more degree
/// increment does not grow the ideal.
struct ConductorResult {
    Ideal ideal; // in the source ring's cover
    bool exact = false;
};
ConductorResult conductor(const RingMap& phi, const std::vector<Poly>& module_gens,
                          unsigned degree_bound = 2, unsigned scalar_bound = 8);

/// Verify that module_gens span target over the image of source:
/// 1 in span and v*m_i in span for every target variable v.
bool verify_spanning(const RingMap& phi, const std::vector<Poly>& module_gens);

/// Solve a*b = c in R (unique in a domain); nullopt when unsolvable.
std::optional<Poly> solve_linear(const FPRing& R, const Poly& b, const Poly& c);

} // namespace wn
