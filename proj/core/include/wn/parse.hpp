#pragma once

#include "wn/poly.hpp"

namespace wn {

/// Parse a polynomial expression in the session grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' uint)?
///   atom   := integer | variable | '(' expr ')' | '-' factor
/// '/' requires the divisor to evaluate to a unit constant of the base ring.
/// Round-trip contract: parse(f.str()) == f.
Poly parse_poly(const std::string& text, const CtxPtr& ctx);

/// Parse a base-ring name: ZZ | QQ | GF(p) | ZM(p,k).
CoeffRing parse_coeff_ring(const std::string& text);

/// Parse "ZZ[X,Y]" or "QQ[x,y,z]/(x*y-z^2)"; returns the context and the
/// defining generators (empty when no quotient part).
struct RingSpec {
    CtxPtr ctx;
    std::vector<Poly> defining;
};
RingSpec parse_ring_spec(const std::string& text,
                         MonomialOrder order = MonomialOrder::grevlex());

/// Comma-separated polynomial list.
std::vector<Poly> parse_poly_list(const std::string& text, const CtxPtr& ctx);

} // namespace wn
