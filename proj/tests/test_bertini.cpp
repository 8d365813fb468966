#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "wn/bertini.hpp"
#include "wn/parse.hpp"

using namespace wn;

namespace {

FPRing ring(const std::string& spec) {
    RingSpec rs = parse_ring_spec(spec);
    return FPRing(rs.ctx, Ideal(rs.ctx, rs.defining), true);
}

} // namespace

TEST_CASE("specialization of lifted points") {
    CHECK(specialize({1, 3}, 2).coords == std::vector<mpz_class>{1, 1});
    CHECK(specialize({2, 1}, 2).coords == std::vector<mpz_class>{0, 1});
    // common 2-power is stripped first: (2:6) -> (1:3) -> (1:1)
    CHECK(specialize({2, 6}, 2).coords == std::vector<mpz_class>{1, 1});
    CHECK_THROWS_AS(specialize({0, 0}, 2), precondition_failed);
    // canonical form scales the pivot to 1
    CHECK(specialize({3, 2}, 5).coords == std::vector<mpz_class>{1, 4});
}

TEST_CASE("specialization is lift-independent under unit rescaling") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coord(-50, 50), unit(1, 99);
    mpz_class p = 3;
    int done = 0;
    while (done < 1000) {
        std::vector<mpz_class> v{coord(rng), coord(rng), coord(rng)};
        if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
        long u = unit(rng);
        if (u % 3 == 0) continue; // keep the rescaling a unit at p
        std::vector<mpz_class> w{v[0] * u, v[1] * u, v[2] * u};
        CHECK(specialize(v, p) == specialize(w, p));
        ++done;
    }
}

TEST_CASE("projective point enumeration") {
    CHECK(enumerate_proj(1, 2).size() == 3);
    CHECK(enumerate_proj(2, 2).size() == 7);
    CHECK(enumerate_proj(1, 3).size() == 4);
    CHECK(enumerate_proj(2, 3).size() == 13);
    // canonical reps: pivot 1 with zeros before it
    auto pts = enumerate_proj(1, 2);
    CHECK(pts[0].coords == std::vector<mpz_class>{1, 0});
    CHECK(pts[1].coords == std::vector<mpz_class>{1, 1});
    CHECK(pts[2].coords == std::vector<mpz_class>{0, 1});
}

TEST_CASE("section elements and lift invariance of the generated ideal") {
    SectionContext ctx;
    ctx.R = ring("ZZ[x]");
    ctx.x_list = parse_poly_list("2, x", ctx.R.ctx());
    CHECK(section_element(ctx, {1, 1}) == parse_poly("x + 2", ctx.R.ctx()));
    CHECK(section_element(ctx, {1, 0}) == Poly::constant(ctx.R.ctx(), 2));
    CHECK_THROWS_AS(section_element(ctx, {1}), precondition_failed);
    // lifts differing by a unit generate the same ideal
    Poly a = section_element(ctx, {1, 3});
    Poly b = section_element(ctx, {-1, -3});
    Ideal Ia(ctx.R.ctx(), {a}), Ib(ctx.R.ctx(), {b});
    CHECK(ideal_equal(Ia, Ib));
}

TEST_CASE("symbolic power on the quadric cone exceeds the ordinary power") {
    FPRing W = ring("QQ[x,y,z]/(x*y - z^2)");
    PrimeSpot p(W, Ideal(W.ctx(), parse_poly_list("x, z", W.ctx())),
                parse_poly("y", W.ctx()));
    SymbolicPowerResult sp = symbolic_power(p, 2);
    CHECK(sp.contained);
    Poly x = parse_poly("x", W.ctx());
    CHECK(ideal_member(x, sp.ideal));
    // independent oracle: one explicit quotient witness, x * y = z^2 in p^2
    Ideal p2 = ideal_sum(ideal_power(p.ideal, 2), W.defining());
    CHECK_FALSE(ideal_member(x, p2));
    CHECK(ideal_member(x * parse_poly("y", W.ctx()), p2));
}

TEST_CASE("symbolic power at a regular prime is the ordinary power") {
    FPRing R = ring("ZZ[x]");
    PrimeSpot p(R, Ideal(R.ctx(), parse_poly_list("2, x", R.ctx())),
                parse_poly("x + 1", R.ctx()));
    SymbolicPowerResult sp = symbolic_power(p, 2);
    Ideal p2(R.ctx(), parse_poly_list("4, 2*x, x^2", R.ctx()));
    CHECK(ideal_equal(sp.ideal, p2));

    SymbolicPowerResult sp1 = symbolic_power(p, 1);
    CHECK(ideal_equal(sp1.ideal, p.ideal));
}

TEST_CASE("unsuitable saturation elements are rejected") {
    FPRing R = ring("ZZ[x]");
    // a saturation element inside the spot is rejected at construction
    CHECK_THROWS_AS(PrimeSpot(R, Ideal(R.ctx(), parse_poly_list("2, x", R.ctx())),
                              parse_poly("x", R.ctx())),
                    precondition_failed);
    PrimeSpot none(R, Ideal(R.ctx(), parse_poly_list("2, x", R.ctx())));
    CHECK_THROWS_AS(symbolic_power(none, 2), precondition_failed);
}

TEST_CASE("scan counts over P^1(F_2)") {
    SectionContext ctx;
    ctx.R = ring("ZZ[x]");
    ctx.x_list = parse_poly_list("2, x", ctx.R.ctx());
    PrimeSpot p(ctx.R, Ideal(ctx.R.ctx(), parse_poly_list("2, x", ctx.R.ctx())),
                parse_poly("x + 1", ctx.R.ctx()));
    ctx.wn_spots.push_back(p);
    ScanReport rep = bertini_scan(ctx, 2);
    CHECK(rep.total == 3);
    CHECK(rep.good_count == 3);
    // independent re-check of every good verdict
    SymbolicPowerResult sq = symbolic_power(p, 2);
    for (auto& v : rep.verdicts) {
        Poly x = section_element(ctx, v.lift);
        CHECK(v.good == !ideal_member(x, sq.ideal));
    }

    SectionContext bad = ctx;
    bad.wn_spots.clear();
    bad.bad_primes.push_back(PrimeSpot(
        ctx.R, Ideal(ctx.R.ctx(), parse_poly_list("2, x", ctx.R.ctx()))));
    ScanReport rep2 = bertini_scan(bad, 2);
    CHECK(rep2.good_count == 0);
    for (auto& v : rep2.verdicts) CHECK_FALSE(v.reason.empty());
}

TEST_CASE("larger scan over P^2(F_3) finds a nonempty good locus") {
    SectionContext ctx;
    ctx.R = ring("ZZ[X,Y]/(Y^2 - 4*X)");
    ctx.x_list = parse_poly_list("2, X, Y", ctx.R.ctx());
    ctx.wn_spots.push_back(PrimeSpot(
        ctx.R, Ideal(ctx.R.ctx(), parse_poly_list("2, Y", ctx.R.ctx())),
        parse_poly("X", ctx.R.ctx())));
    ScanReport rep = bertini_scan(ctx, 3);
    CHECK(rep.total == 13);
    CHECK(rep.good_count >= 1);
    CHECK(rep.good_count + (rep.total - rep.good_count) == rep.total);
}
