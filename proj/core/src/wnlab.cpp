#include "wn/wnlab.hpp"

#include <cmath>

namespace wn {

Certificate swan_check(const FPRing& R, const Poly& b, const Poly& c) {
    if (!R.equal(b.pow(3), c.pow(2)))
        throw precondition_failed("swan_check requires b^3 = c^2");
    Certificate cert;
    cert.assertions = {"domain"};
    cert.elems["b"] = R.nf(b);
    cert.elems["c"] = R.nf(c);
    if (R.is_zero(b)) {
        if (R.is_zero(c)) {
            cert.kind = CertKind::SwanWitness;
            cert.elems["a"] = Poly::zero(R.ctx());
            return cert;
        }
        cert.kind = CertKind::SwanViolation;
        cert.note = "b = 0 with c nonzero (non-reduced input)";
        return cert;
    }
    auto a = solve_linear(R, b, c); // a*b = c, forced candidate c/b
    if (a && R.equal(a->pow(2), b) && R.equal(a->pow(3), c)) {
        cert.kind = CertKind::SwanWitness;
        cert.elems["a"] = *a;
        return cert;
    }
    cert.kind = CertKind::SwanViolation;
    return cert;
}

Certificate yanagihara_check(const FPRing& R, const mpz_class& p, const Poly& b,
                             const Poly& c, const Poly& d, const Poly& e) {
    if (!is_prime(p)) throw precondition_failed("yanagihara_check: p must be prime");
    unsigned pe = static_cast<unsigned>(p.get_ui());
    if (!R.equal(c.pow(pe), b * d.pow(pe)))
        throw precondition_failed("yanagihara_check requires c^p = b*d^p");
    if (!R.equal(c.scaled(mpq_class(p)), d * e))
        throw precondition_failed("yanagihara_check requires p*c = d*e");
    // non-zerodivisor probe: (defining : d) must not grow the defining ideal
    Ideal q = ideal_quotient(R.defining(), R.nf(d));
    if (!ideal_equal(ideal_sum(q, R.defining()), R.defining()))
        throw precondition_failed("yanagihara_check: d is a zero-divisor");
    Certificate cert;
    cert.assertions = {"domain"};
    cert.prime = p;
    cert.elems["b"] = R.nf(b);
    cert.elems["c"] = R.nf(c);
    cert.elems["d"] = R.nf(d);
    cert.elems["e"] = R.nf(e);
    auto a = solve_linear(R, d, c); // a = c/d in the fraction field
    if (a && R.equal(a->pow(pe), b) && R.equal(a->scaled(mpq_class(p)), e)) {
        cert.kind = CertKind::YanagiharaWitness;
        cert.elems["a"] = *a;
        return cert;
    }
    cert.kind = CertKind::YanagiharaViolation;
    return cert;
}

Certificate manaresi_witness(const RingMap& phi, const Poly& s) {
    TensorSquare T = tensor_square(phi);
    Poly diff = T.left(s) - T.right(s);
    bool nilpotent = radical_member(diff, T.T.defining());
    bool inside = subring_member(phi.target().nf(s), phi).has_value();
    Certificate cert;
    cert.assertions = {"normalization", "extension-injective"};
    cert.elems["s"] = phi.target().nf(s);
    if (nilpotent && !inside) {
        cert.kind = CertKind::ManaresiWitness;
        return cert;
    }
    cert.kind = CertKind::NotAWitness;
    cert.note = !nilpotent ? "difference-not-nilpotent" : "element-in-subring";
    return cert;
}

Certificate equalizer_probe(const RingMap& phi, const std::vector<Poly>& probe_set) {
    TensorSquare T = tensor_square(phi);
    SubringTester tester(phi);
    for (auto& s : probe_set) {
        Poly diff = T.left(s) - T.right(s);
        if (radical_member(diff, T.T.defining()) &&
            !tester.contains(phi.target().nf(s))) {
            Certificate cert;
            cert.kind = CertKind::ManaresiWitness;
            cert.assertions = {"normalization", "extension-injective"};
            cert.elems["s"] = phi.target().nf(s);
            return cert;
        }
    }
    Certificate cert;
    cert.kind = CertKind::EqualizerPass;
    cert.assertions = {"normalization"};
    cert.probe_set = probe_set;
    cert.note = "probe-limited evidence, not a proof of weak normality";
    return cert;
}

std::vector<Poly> default_probe_set(const CtxPtr& ctx, unsigned degree_bound) {
    std::vector<Poly> out;
    std::vector<Monomial> frontier{Monomial(ctx->nvars())};
    for (unsigned d = 0; d <= degree_bound; ++d) {
        std::vector<Monomial> next;
        for (auto& m : frontier) {
            out.push_back(Poly(ctx, {Term{m, mpq_class(1)}}));
            if (d < degree_bound) {
                size_t start = 0;
                for (size_t i = ctx->nvars(); i-- > 0;)
                    if (m.e[i]) {
                        start = i;
                        break;
                    }
                for (size_t v = start; v < ctx->nvars(); ++v) {
                    Monomial mm = m;
                    mm.e[v] += 1;
                    next.push_back(mm);
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

namespace {

// deterministic coefficient sequence -H..H
std::vector<long> coeff_range(unsigned H) {
    std::vector<long> out;
    for (long c = -static_cast<long>(H); c <= static_cast<long>(H); ++c) out.push_back(c);
    return out;
}

} // namespace

std::vector<Certificate> bounded_violation_search(const RingMap& phi, unsigned degree_bound,
                                                  unsigned height_bound, SearchMode mode,
                                                  const mpz_class& p) {
    const FPRing& S = phi.target();
    std::vector<Poly> monos = default_probe_set(S.ctx(), degree_bound);
    const size_t M = monos.size();
    double space = std::pow(2.0 * height_bound + 1.0, static_cast<double>(M));
    if (space > 2e7) throw wn_error("bounded_violation_search: search space too large");
    if (mode != SearchMode::Swan && !is_prime(p))
        throw precondition_failed("yanagihara search requires a prime p");

    SubringTester tester(phi);
    std::vector<Certificate> out;
    std::vector<long> range = coeff_range(height_bound);
    std::vector<size_t> idx(M, 0); // odometer over `range`

    auto candidate = [&]() {
        Poly a = Poly::zero(S.ctx());
        for (size_t i = 0; i < M; ++i) {
            long c = range[idx[i]];
            if (c) a = a + monos[i].scaled(mpq_class(c));
        }
        return S.nf(a);
    };

    unsigned pe = mode == SearchMode::Swan ? 0 : static_cast<unsigned>(p.get_ui());
    for (;;) {
        Poly a = candidate();
        if (!a.is_zero() && !tester.contains(a)) {
            if (mode != SearchMode::Yanagihara) {
                auto pre2 = tester.preimage(S.nf(a * a));
                if (pre2) {
                    auto pre3 = tester.preimage(S.nf(a * a * a));
                    if (pre3) {
                        Certificate cert;
                        cert.kind = CertKind::SwanViolation;
                        cert.assertions = {"normalization"};
                        cert.elems["b"] = *pre2;
                        cert.elems["c"] = *pre3;
                        cert.elems["a_external"] = a;
                        out.push_back(std::move(cert));
                    }
                }
            }
            if (mode != SearchMode::Swan) {
                auto prep = tester.preimage(S.nf(a.pow(pe)));
                if (prep) {
                    auto prepa = tester.preimage(S.nf(a.scaled(mpq_class(p))));
                    if (prepa) {
                        Certificate cert;
                        cert.kind = CertKind::YanagiharaViolation;
                        cert.assertions = {"normalization"};
                        cert.prime = p;
                        cert.elems["b"] = *prep;
                        cert.elems["c"] = *prepa;
                        cert.elems["d"] = Poly::constant(phi.source().ctx(), mpq_class(p));
                        cert.elems["e"] = *prepa;
                        cert.elems["a_external"] = a;
                        out.push_back(std::move(cert));
                    }
                }
            }
        }
        // advance odometer (lexicographic over the monomial list)
        size_t i = 0;
        while (i < M && ++idx[i] == range.size()) {
            idx[i] = 0;
            ++i;
        }
        if (i == M) break;
    }
    return out;
}

bool verify_certificate(const Certificate& cert, const FPRing& R) {
    auto get = [&](const char* k) -> const Poly& {
        auto it = cert.elems.find(k);
        if (it == cert.elems.end()) throw wn_error("certificate missing element");
        return it->second;
    };
    switch (cert.kind) {
    case CertKind::SwanWitness: {
        const Poly &a = get("a"), &b = get("b"), &c = get("c");
        return R.equal(a.pow(2), b) && R.equal(a.pow(3), c);
    }
    case CertKind::SwanViolation: {
        const Poly &b = get("b"), &c = get("c");
        if (!R.equal(b.pow(3), c.pow(2))) return false;
        Certificate re = swan_check(R, b, c);
        return re.kind == CertKind::SwanViolation;
    }
    case CertKind::YanagiharaWitness: {
        const Poly &a = get("a"), &b = get("b"), &e = get("e");
        unsigned pe = static_cast<unsigned>(cert.prime.get_ui());
        return R.equal(a.pow(pe), b) && R.equal(a.scaled(mpq_class(cert.prime)), e);
    }
    case CertKind::YanagiharaViolation: {
        Certificate re =
            yanagihara_check(R, cert.prime, get("b"), get("c"), get("d"), get("e"));
        return re.kind == CertKind::YanagiharaViolation;
    }
    default: throw wn_error("certificate kind needs a ring map to verify");
    }
}

bool verify_certificate(const Certificate& cert, const RingMap& phi) {
    switch (cert.kind) {
    case CertKind::ManaresiWitness: {
        auto it = cert.elems.find("s");
        if (it == cert.elems.end()) throw wn_error("certificate missing element");
        Certificate re = manaresi_witness(phi, it->second);
        return re.kind == CertKind::ManaresiWitness;
    }
    case CertKind::EqualizerPass: {
        Certificate re = equalizer_probe(phi, cert.probe_set);
        return re.kind == CertKind::EqualizerPass;
    }
    case CertKind::SwanViolation:
    case CertKind::YanagiharaViolation: {
        // re-verify via the source ring's primitives
        return verify_certificate(cert, phi.source());
    }
    default: return verify_certificate(cert, phi.source());
    }
}

} // namespace wn
