#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wn/monomial.hpp"

namespace wn {

/// Ambient context shared by all polynomials of a ring: base ring, ordered
/// variable names, monomial order used for canonical term sorting.
struct PolyContext {
    CoeffRing ring;
    std::vector<std::string> vars;
    MonomialOrder order;

    PolyContext(CoeffRing r, std::vector<std::string> v,
                MonomialOrder o = MonomialOrder::grevlex())
        : ring(std::move(r)), vars(std::move(v)), order(o) {}

    size_t nvars() const { return vars.size(); }
    std::optional<size_t> var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        return std::nullopt;
    }
    bool operator==(const PolyContext& o) const {
        return ring == o.ring && vars == o.vars && order == o.order;
    }
    bool operator!=(const PolyContext& o) const { return !(*this == o); }
    std::string describe() const;
};

using CtxPtr = std::shared_ptr<const PolyContext>;

CtxPtr make_context(CoeffRing ring, std::vector<std::string> vars,
                    MonomialOrder order = MonomialOrder::grevlex());

struct Term {
    Monomial m;
    mpq_class c;
};

/// Sparse multivariate polynomial; terms strictly descending in the ambient
/// order, no zero coefficients, coefficients canonical for the base ring.
class Poly {
public:
    Poly() = default;
    explicit Poly(CtxPtr ctx) : ctx_(std::move(ctx)) {}
    Poly(CtxPtr ctx, std::vector<Term> raw_terms); // normalizes

    static Poly zero(CtxPtr ctx) { return Poly(std::move(ctx)); }
    static Poly constant(CtxPtr ctx, const mpq_class& c);
    static Poly variable(CtxPtr ctx, size_t idx);

    const CtxPtr& ctx() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_.front().m.is_one(); }
    uint64_t degree() const; // 0 for the zero polynomial
    const Term& leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly pow(unsigned n) const;
    Poly scaled(const mpq_class& c) const;
    /// this * (c * m)
    Poly term_mul(const mpq_class& c, const Monomial& m) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Deterministic total order on canonical forms (for sorting bases).
    static int compare(const Poly& a, const Poly& b);

    /// Does any term involve a variable with index < k?
    bool uses_var_prefix(size_t k) const;
    /// Formal partial derivative.
    Poly derivative(size_t var) const;

    std::string str() const;

private:
    CtxPtr ctx_;
    std::vector<Term> terms_;
    void check_ctx(const Poly& o) const;
};

/// Map f into another context: variables are matched by name (every variable
/// occurring in f must exist in dst), coefficients pass through dst's
/// canonicalization. Throws when a coefficient is not representable
/// (e.g. 1/2 into ZZ).
Poly transport(const Poly& f, const CtxPtr& dst);

/// Substitute images[i] for variable i; images live in the target context.
/// Coefficients of f are mapped through the target ring's canonicalization.
Poly substitute(const Poly& f, const std::vector<Poly>& images, const CtxPtr& target);

/// Exact polynomial division q = g / f; throws precondition_failed if f does
/// not divide g exactly.
Poly poly_divexact(const Poly& g, const Poly& f);

} // namespace wn
