#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wn/pullback.hpp"
#include "wn/parse.hpp"

using namespace wn;

namespace {

PullbackSpec spec_p2() {
    RingSpec rs = parse_ring_spec("ZZ[T]");
    PullbackSpec s;
    s.R = FPRing(rs.ctx, Ideal(rs.ctx, rs.defining), true);
    s.I = Ideal(rs.ctx, parse_poly_list("2", rs.ctx));
    s.B_gens = parse_poly_list("T^2", rs.ctx);
    s.p = 2;
    return s;
}

PullbackSpec spec_p3() {
    RingSpec rs = parse_ring_spec("ZZ[T]");
    PullbackSpec s;
    s.R = FPRing(rs.ctx, Ideal(rs.ctx, rs.defining), true);
    s.I = Ideal(rs.ctx, parse_poly_list("3", rs.ctx));
    s.B_gens = parse_poly_list("T^3", rs.ctx);
    s.p = 3;
    return s;
}

} // namespace

TEST_CASE("generic pure inseparability exponents") {
    GpiResult g2 = gpi_check(spec_p2());
    CHECK(g2.ok);
    REQUIRE(g2.exponent.size() == 1);
    CHECK(g2.exponent[0] == 1); // T^2 lands in B at e = 1

    GpiResult g3 = gpi_check(spec_p3());
    CHECK(g3.ok);
    CHECK(g3.exponent[0] == 1);

    // B = R/I itself: every variable already inside, e = 0
    PullbackSpec triv = spec_p2();
    triv.B_gens = parse_poly_list("T", triv.R.ctx());
    GpiResult g0 = gpi_check(triv);
    CHECK(g0.ok);
    CHECK(g0.exponent[0] == 0);
}

TEST_CASE("reducedness probe") {
    CHECK(reduced_probe(spec_p2()));
    PullbackSpec bad = spec_p2();
    bad.I = Ideal(bad.R.ctx(), parse_poly_list("4", bad.R.ctx()));
    CHECK_FALSE(reduced_probe(bad)); // 2 is nilpotent mod 4
}

TEST_CASE("fiber product reconstructs the quadratic surrogate") {
    auto ctx = spec_p2().R.ctx();
    PullbackResult pb = fiber_product(spec_p2(), parse_poly_list("2*T", ctx));
    REQUIRE(pb.generators.size() == 2);
    CHECK(pb.generators[0] == parse_poly("T^2", ctx));
    CHECK(pb.generators[1] == parse_poly("2*T", ctx));
    // canonical presentation matches Y^2 - 4X under X0 = T^2, X1 = 2T
    auto pctx = pb.Rprime.ctx();
    Ideal expected(pctx, parse_poly_list("X1^2 - 4*X0", pctx));
    CHECK(ideal_equal(pb.Rprime.defining(), expected));
    // every generator image reduces into B mod I (spot check on products)
    FPRing Rbar(ctx, ideal_sum(spec_p2().I, Ideal(ctx, {})));
    for (auto& g : pb.generators)
        CHECK(pb.inclusion.target().nf(g) == g);
}

TEST_CASE("identity pullback has zero kernel") {
    PullbackSpec triv = spec_p2();
    triv.B_gens = parse_poly_list("T", triv.R.ctx());
    PullbackResult pb = fiber_product(triv);
    CHECK(pb.Rprime.defining().gens.empty());
    CHECK(certify_not_wn(pb, 2, 2, 2) == std::nullopt);
}

TEST_CASE("incomplete generator sets are rejected") {
    // forgetting 2T leaves 2T outside ZZ[T^2] although its image is in B
    CHECK_THROWS_AS(fiber_product(spec_p2(), {}), precondition_failed);
}

TEST_CASE("non-weak-normality witness for p = 2 and p = 3") {
    auto ctx2 = spec_p2().R.ctx();
    PullbackResult pb2 = fiber_product(spec_p2(), parse_poly_list("2*T", ctx2));
    auto c2 = certify_not_wn(pb2, 2);
    REQUIRE(c2.has_value());
    CHECK(c2->kind == CertKind::ManaresiWitness);
    CHECK(pb2.inclusion.target().equal(c2->elems.at("s"), parse_poly("T", ctx2)));
    CHECK(verify_certificate(*c2, pb2.inclusion));

    auto ctx3 = spec_p3().R.ctx();
    PullbackResult pb3 = fiber_product(spec_p3(), parse_poly_list("3*T, 3*T^2", ctx3));
    auto c3 = certify_not_wn(pb3, 3);
    REQUIRE(c3.has_value());
    CHECK(c3->kind == CertKind::ManaresiWitness);
    CHECK(verify_certificate(*c3, pb3.inclusion));
    // the p = 3 kernel contains the analogue of Y^2 - 4X on 3T, 3T^2, T^3
    auto pctx = pb3.Rprime.ctx();
    // generators are ordered T^3, 3T, 3T^2
    CHECK(ideal_member(parse_poly("X1*X2 - 9*X0", pctx), pb3.Rprime.defining()));
    CHECK(ideal_member(parse_poly("X1^3 - 27*X0", pctx), pb3.Rprime.defining()));
    CHECK(ideal_member(parse_poly("X2^3 - 27*X0^2", pctx), pb3.Rprime.defining()));
}

TEST_CASE("witness escapes B but its image does not") {
    auto ctx = spec_p2().R.ctx();
    PullbackResult pb = fiber_product(spec_p2(), parse_poly_list("2*T", ctx));
    SubringTester inc(pb.inclusion);
    Poly t = parse_poly("T", ctx);
    CHECK_FALSE(inc.contains(t));
    CHECK(inc.contains(parse_poly("T^2", ctx)));
    CHECK(inc.contains(parse_poly("2*T", ctx)));
    CHECK(inc.contains(parse_poly("2*T^3", ctx)));
}
