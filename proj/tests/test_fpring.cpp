#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wn/fpring.hpp"
#include "wn/parse.hpp"

using namespace wn;

namespace {

FPRing ring(const std::string& spec) {
    RingSpec rs = parse_ring_spec(spec);
    return FPRing(rs.ctx, Ideal(rs.ctx, rs.defining), true);
}

RingMap map_A_to_S() {
    FPRing A = ring("ZZ[X,Y]/(Y^2 - 4*X)");
    FPRing S = ring("ZZ[T]");
    return RingMap(A, S, parse_poly_list("T^2, 2*T", S.ctx()));
}

} // namespace

TEST_CASE("quotient ring equality is normal-form equality") {
    FPRing A = ring("ZZ[X,Y]/(Y^2 - 4*X)");
    CHECK(A.equal(parse_poly("Y^2", A.ctx()), parse_poly("4*X", A.ctx())));
    CHECK_FALSE(A.is_zero(parse_poly("Y", A.ctx())));
    CHECK(A.is_proper());
    FPRing improper = ring("QQ[x]/(x, x - 1)");
    CHECK_FALSE(improper.is_proper());
}

TEST_CASE("ring maps verify well-definedness") {
    FPRing A = ring("ZZ[X,Y]/(Y^2 - 4*X)");
    FPRing S = ring("ZZ[T]");
    CHECK_NOTHROW(RingMap(A, S, parse_poly_list("T^2, 2*T", S.ctx())));
    CHECK_THROWS_AS(RingMap(A, S, parse_poly_list("T, T", S.ctx())),
                    precondition_failed);
    RingMap f = map_A_to_S();
    CHECK(f.apply(parse_poly("X*Y", A.ctx())) == parse_poly("2*T^3", S.ctx()));
}

TEST_CASE("subring membership with preimages") {
    RingMap f = map_A_to_S();
    SubringTester tester(f);
    const auto& S = f.target();
    CHECK_FALSE(tester.contains(parse_poly("T", S.ctx())));
    auto pre = tester.preimage(parse_poly("2*T", S.ctx()));
    REQUIRE(pre.has_value());
    CHECK(f.source().equal(*pre, parse_poly("Y", f.source().ctx())));
    auto pre2 = tester.preimage(parse_poly("T^2", S.ctx()));
    REQUIRE(pre2.has_value());
    CHECK(f.source().equal(*pre2, parse_poly("X", f.source().ctx())));
    // preimages are exact: applying the map recovers the element
    CHECK(f.target().equal(f.apply(*pre), parse_poly("2*T", S.ctx())));
}

TEST_CASE("kernel of a parametrization") {
    FPRing S = ring("ZZ[T]");
    auto ctx = make_context(CoeffRing::ZZ(), {"X", "Y"});
    Ideal ker = kernel_of_map(ctx, S, parse_poly_list("T^2, 2*T", S.ctx()));
    CHECK(ideal_equal(ker, Ideal(ctx, parse_poly_list("Y^2 - 4*X", ctx))));
}

TEST_CASE("tensor square separates the two inclusions") {
    RingMap f = map_A_to_S();
    TensorSquare T = tensor_square(f);
    Poly t = parse_poly("T", f.target().ctx());
    Poly diff = T.left(t) - T.right(t);
    CHECK_FALSE(T.T.is_zero(diff));
    CHECK(radical_member(diff, T.T.defining())); // nilpotent
    // elements of the subring have equal images
    Poly y = f.apply(parse_poly("Y", f.source().ctx()));
    CHECK(T.T.is_zero(T.left(y) - T.right(y)));
}

TEST_CASE("relative differentials and unramifiedness") {
    RingMap f = map_A_to_S();
    f.set_relative_presentation(
        parse_poly_list("T^2 - X, 2*T - Y", f.combined_ctx()));
    PresentedModule M = relative_differentials(f);
    CHECK(M.gens == 1);
    Ideal F0 = fitting_zero(M);
    FPRing A = f.source();
    PrimeSpot ram(A, Ideal(A.ctx(), parse_poly_list("2, Y", A.ctx())));
    PrimeSpot etale(A, Ideal(A.ctx(), parse_poly_list("Y - 2*X", A.ctx())));
    CHECK_FALSE(unramified_at(f, ram));
    CHECK(unramified_at(f, etale));
}

TEST_CASE("module spanning witness") {
    RingMap f = map_A_to_S();
    auto S = f.target();
    CHECK(verify_spanning(f, parse_poly_list("1, T", S.ctx())));
    CHECK_FALSE(verify_spanning(f, parse_poly_list("1", S.ctx())));
}

TEST_CASE("conductor of the quadratic section") {
    RingMap f = map_A_to_S();
    ConductorResult c = conductor(f, parse_poly_list("1, T", f.target().ctx()), 2);
    CHECK(c.exact);
    Ideal expected(f.source().ctx(), parse_poly_list("2, Y", f.source().ctx()));
    Ideal cover = ideal_sum(expected, f.source().defining());
    CHECK(ideal_equal(ideal_sum(c.ideal, f.source().defining()), cover));
}

TEST_CASE("linear solving in a domain") {
    FPRing A = ring("ZZ[X,Y]/(Y^2 - 4*X)");
    auto ctx = A.ctx();
    // Y * Y = 4X has the solution Y for b = Y, c = 4X
    auto a = solve_linear(A, parse_poly("Y", ctx), parse_poly("4*X", ctx));
    REQUIRE(a.has_value());
    CHECK(A.equal(*a * parse_poly("Y", ctx), parse_poly("4*X", ctx)));
    // 2a = Y has no solution: Y/2 is not in A
    CHECK_FALSE(solve_linear(A, Poly::constant(ctx, 2), parse_poly("Y", ctx)).has_value());
}

TEST_CASE("prime spot probes") {
    FPRing A = ring("ZZ[X,Y]/(Y^2 - 4*X)");
    PrimeSpot p(A, Ideal(A.ctx(), parse_poly_list("2, Y", A.ctx())),
                parse_poly("X + 1", A.ctx()));
    CHECK(prime_probe(p));
    CHECK_THROWS_AS(PrimeSpot(A, Ideal(A.ctx(), parse_poly_list("1", A.ctx()))),
                    precondition_failed);
}
