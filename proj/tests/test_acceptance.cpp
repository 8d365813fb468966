// End-to-end acceptance gate: one line per criterion, nonzero exit when any
// criterion fails. Each check re-derives its expected values independently
// of the code paths under test wherever possible.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "wn/session.hpp"

using namespace wn;

namespace {

int failures = 0;

void report(const char* name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << ": " << name << "\n";
    if (!ok) ++failures;
}

FPRing ring(const std::string& spec) {
    RingSpec rs = parse_ring_spec(spec);
    return FPRing(rs.ctx, Ideal(rs.ctx, rs.defining), true);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 1. the failure certificates of the quadratic surrogate
void crit_failure_certificates() {
    bool ok = true;
    FPRing A = ring("ZZ[X,Y]/(Y^2 - 4*X)");
    auto ctx = A.ctx();
    Certificate v = yanagihara_check(A, 2, parse_poly("X", ctx), parse_poly("Y", ctx),
                                     Poly::constant(ctx, 2), parse_poly("Y", ctx));
    ok = ok && v.kind == CertKind::YanagiharaViolation;
    // independent re-check: Y is not in (2) + defining, so Y/2 cannot exist
    Ideal two(ctx, parse_poly_list("2, Y^2 - 4*X", ctx));
    ok = ok && !ideal_member(parse_poly("Y", ctx), two);
    ok = ok && verify_certificate(v, A);

    FPRing S = ring("ZZ[T]");
    RingMap phi(A, S, parse_poly_list("T^2, 2*T", S.ctx()));
    Certificate w = manaresi_witness(phi, parse_poly("T", S.ctx()));
    ok = ok && w.kind == CertKind::ManaresiWitness;
    // independent radical check in an explicitly constructed tensor square
    auto tctx = make_context(CoeffRing::ZZ(), {"T1", "T2"});
    Ideal tsq(tctx, parse_poly_list("T1^2 - T2^2, 2*T1 - 2*T2", tctx));
    ok = ok && radical_member(parse_poly("T1 - T2", tctx), tsq);
    ok = ok && !ideal_member(parse_poly("T1 - T2", tctx), tsq);
    ok = ok && verify_certificate(w, phi);
    report("failure certificates for the quadratic surrogate", ok);
}

// 2. seminormality evidence: clean surrogate, dirty cusp
void crit_seminormality_search() {
    FPRing A = ring("ZZ[X,Y]/(Y^2 - 4*X)");
    FPRing S = ring("ZZ[T]");
    RingMap phi(A, S, parse_poly_list("T^2, 2*T", S.ctx()));
    bool ok = bounded_violation_search(phi, 3, 3, SearchMode::Swan).empty();

    FPRing C = ring("ZZ[s,c]/(c^2 - s^3)");
    FPRing T = ring("ZZ[t]");
    RingMap cusp(C, T, parse_poly_list("t^2, t^3", T.ctx()));
    auto certs = bounded_violation_search(cusp, 3, 3, SearchMode::Swan);
    ok = ok && !certs.empty();
    for (auto& cert : certs) ok = ok && verify_certificate(cert, cusp);
    report("swan search: surrogate clean, cusp violates", ok);
}

// 3. pullback round-trip and the p = 3 variant
void crit_pullback() {
    bool ok = true;
    RingSpec rs = parse_ring_spec("ZZ[T]");
    PullbackSpec s2;
    s2.R = FPRing(rs.ctx, Ideal(rs.ctx, rs.defining), true);
    s2.I = Ideal(rs.ctx, parse_poly_list("2", rs.ctx));
    s2.B_gens = parse_poly_list("T^2", rs.ctx);
    s2.p = 2;
    PullbackResult pb2 = fiber_product(s2, parse_poly_list("2*T", rs.ctx));
    auto pctx = pb2.Rprime.ctx();
    ok = ok && ideal_equal(pb2.Rprime.defining(),
                           Ideal(pctx, parse_poly_list("X1^2 - 4*X0", pctx)));

    PullbackSpec s3 = s2;
    s3.I = Ideal(rs.ctx, parse_poly_list("3", rs.ctx));
    s3.B_gens = parse_poly_list("T^3", rs.ctx);
    s3.p = 3;
    PullbackResult pb3 = fiber_product(s3, parse_poly_list("3*T, 3*T^2", rs.ctx));
    auto c3 = certify_not_wn(pb3, 3, 3, 3);
    ok = ok && c3.has_value() && c3->kind == CertKind::ManaresiWitness;
    ok = ok && verify_certificate(*c3, pb3.inclusion);
    report("pullback round-trip and p = 3 witness", ok);
}

// 4. unramifiedness and the height-2 conductor
void crit_unramified_conductor() {
    bool ok = true;
    FPRing A = ring("ZZ[X,Y]/(Y^2 - 4*X)");
    FPRing S = ring("ZZ[T]");
    RingMap phi(A, S, parse_poly_list("T^2, 2*T", S.ctx()));
    phi.set_relative_presentation(
        parse_poly_list("T^2 - X, 2*T - Y", phi.combined_ctx()));
    PrimeSpot ram(A, Ideal(A.ctx(), parse_poly_list("2, Y", A.ctx())));
    PrimeSpot etale(A, Ideal(A.ctx(), parse_poly_list("Y - 2*X", A.ctx())));
    ok = ok && !unramified_at(phi, ram);
    ok = ok && unramified_at(phi, etale);

    FPRing A9 =
        ring("ZZ[x,y,u,v,w]/(x*v - y*u, u^2 - x^2*w, v^2 - y^2*w, u*v - x*y*w)");
    FPRing S9 = ring("ZZ[X,Y,Z]");
    RingMap f9(A9, S9, parse_poly_list("X, Y, X*Z, Y*Z, Z^2", S9.ctx()));
    ConductorResult c = conductor(f9, parse_poly_list("1, Z", S9.ctx()), 2);
    GroebnerBasis G = buchberger(ideal_sum(c.ideal, A9.defining()));
    for (const char* g : {"x", "y", "u", "v"})
        ok = ok && ideal_member(parse_poly(g, A9.ctx()), G);
    // fiberwise codimension 2: ambient surrogate has dim 3 fibers, the
    // conductor locus dim 1, over QQ and over F_p for p in {2, 3}
    FiberDims amb = dim_fiberwise(A9.defining(), {2, 3});
    FiberDims con = dim_fiberwise(ideal_sum(c.ideal, A9.defining()), {2, 3});
    ok = ok && amb.generic - con.generic == 2;
    ok = ok && amb.special[2] - con.special[2] == 2;
    ok = ok && amb.special[3] - con.special[3] == 2;
    report("unramified locus and height-2 conductor", ok);
}

// 5. symbolic power oracle
void crit_symbolic_power() {
    bool ok = true;
    FPRing W = ring("QQ[x,y,z]/(x*y - z^2)");
    PrimeSpot p(W, Ideal(W.ctx(), parse_poly_list("x, z", W.ctx())),
                parse_poly("y", W.ctx()));
    SymbolicPowerResult sp = symbolic_power(p, 2);
    Poly x = parse_poly("x", W.ctx());
    Ideal p2 = ideal_sum(ideal_power(p.ideal, 2), W.defining());
    ok = ok && ideal_member(x, sp.ideal) && !ideal_member(x, p2);
    // brute-force oracle: x*y lies in p^2 and y avoids p, so x is in the
    // symbolic square by the quotient definition
    ok = ok && ideal_member(x * parse_poly("y", W.ctx()), p2);
    ok = ok && !ideal_member(parse_poly("y", W.ctx()),
                             ideal_sum(p.ideal, W.defining()));

    FPRing R = ring("ZZ[x]");
    PrimeSpot reg(R, Ideal(R.ctx(), parse_poly_list("2, x", R.ctx())),
                  parse_poly("x + 1", R.ctx()));
    ok = ok && ideal_equal(symbolic_power(reg, 2).ideal,
                           Ideal(R.ctx(), parse_poly_list("4, 2*x, x^2", R.ctx())));
    report("symbolic square: cone exceeds, regular prime agrees", ok);
}

// 6. randomized strong-basis kernel over ZZ with a cross-base oracle
void crit_groebner_kernel() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::mt19937 rng(424242);
    auto ctx = make_context(CoeffRing::ZZ(), {"x", "y", "z"});
    auto qctx = make_context(CoeffRing::QQ(), {"x", "y", "z"});
    auto f5 = make_context(CoeffRing::GF(5), {"x", "y", "z"});
    std::uniform_int_distribution<int> nterms(1, 3), coef(-6, 6), expo(0, 3),
        ngens(1, 3);
    auto rand_poly = [&]() {
        std::vector<Term> ts;
        for (int t = nterms(rng); t-- > 0;) {
            Monomial m(3);
            int budget = 3;
            for (int i = 0; i < 3; ++i) {
                int e = std::min(expo(rng), budget);
                m.e[static_cast<size_t>(i)] = static_cast<uint32_t>(e);
                budget -= e;
            }
            ts.push_back(Term{m, mpq_class(coef(rng))});
        }
        return Poly(ctx, std::move(ts));
    };
    for (int iter = 0; iter < 100 && ok; ++iter) {
        std::vector<Poly> gens;
        for (int i = ngens(rng); i-- > 0;) gens.push_back(rand_poly());
        Ideal I(ctx, gens);
        GroebnerBasis G = buchberger(I);
        ok = ok && certify_basis(G); // every S/G-polynomial reduces to zero
        if (I.gens.empty()) continue;
        Poly member(ctx);
        for (auto& g : I.gens) member = member + g * rand_poly();
        ok = ok && ideal_member(member, G);
        // cross-check the verdict over QQ and modulo 5
        ok = ok && ideal_member(transport(member, qctx), transport_ideal(I, qctx));
        ok = ok && ideal_member(transport(member, f5), transport_ideal(I, f5));
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    ok = ok && secs < 30.0;
    report("randomized strong bases over ZZ (< 30 s)", ok);
}

// 7. scan counts against an independent enumeration
void crit_scan() {
    bool ok = true;
    SectionContext sc;
    sc.R = ring("ZZ[x]");
    sc.x_list = parse_poly_list("2, x", sc.R.ctx());
    PrimeSpot p(sc.R, Ideal(sc.R.ctx(), parse_poly_list("2, x", sc.R.ctx())),
                parse_poly("x + 1", sc.R.ctx()));
    sc.wn_spots.push_back(p);
    ScanReport rep = bertini_scan(sc, 2);
    ok = ok && rep.total == 3 && rep.good_count == 3;
    // independent re-enumeration: sections 2, x, 2 + x against (4, 2x, x^2)
    Ideal sq(sc.R.ctx(), parse_poly_list("4, 2*x, x^2", sc.R.ctx()));
    size_t good = 0;
    for (auto& s : parse_poly_list("2, 2 + x, x", sc.R.ctx()))
        if (!ideal_member(s, sq)) ++good;
    ok = ok && good == rep.good_count;

    SectionContext bad = sc;
    bad.wn_spots.clear();
    bad.bad_primes.push_back(
        PrimeSpot(sc.R, Ideal(sc.R.ctx(), parse_poly_list("2, x", sc.R.ctx()))));
    ok = ok && bertini_scan(bad, 2).good_count == 0;

    // lift independence of the specialization map
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> coord(-40, 40), unit(1, 41);
    int done = 0;
    while (done < 1000 && ok) {
        std::vector<mpz_class> v{coord(rng), coord(rng)};
        if (v[0] == 0 && v[1] == 0) continue;
        long u = unit(rng);
        if (u % 2 == 0) continue;
        ok = ok && specialize(v, 2) == specialize({v[0] * u, v[1] * u}, 2);
        ++done;
    }
    report("scan counts match exhaustive re-enumeration", ok);
}

// 8. byte-identical reports across runs and thread counts
void crit_determinism() {
    bool ok = true;
    const char* names[] = {"example_3_1.wn", "pullback_p2.wn", "pullback_p3.wn",
                           "bertini_p2.wn", "symbolic_power.wn", "example_4_9.wn"};
    for (auto* n : names) {
        std::string src = slurp(std::string(WN_SESSIONS_DIR) + "/" + n);
        ok = ok && !src.empty();
        setenv("WN_THREADS", "1", 1);
        std::string a = run_session(src).report.dump(2);
        std::string b = run_session(src).report.dump(2);
        setenv("WN_THREADS", "8", 1);
        std::string c = run_session(src).report.dump(2);
        unsetenv("WN_THREADS");
        ok = ok && a == b && a == c;
    }
    report("bundled sessions byte-identical across runs and threads", ok);
}

} // namespace

int main() {
    crit_failure_certificates();
    crit_seminormality_search();
    crit_pullback();
    crit_unramified_conductor();
    crit_symbolic_power();
    crit_groebner_kernel();
    crit_scan();
    crit_determinism();
    if (failures) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
