#include "wn/pullback.hpp"

namespace wn {

namespace {

// R/I together with a membership tester for the subring B inside it.
struct QuotientSide {
    FPRing Rbar;
    FPRing Bsource;
    std::unique_ptr<RingMap> into; // Bsource -> Rbar
    std::unique_ptr<SubringTester> tester;
};

QuotientSide quotient_side(const PullbackSpec& spec) {
    QuotientSide q;
    Ideal cover = ideal_sum(spec.R.defining(), spec.I);
    q.Rbar = FPRing(spec.R.ctx(), cover);
    std::vector<std::string> gnames;
    for (size_t i = 0; i < spec.B_gens.size(); ++i)
        gnames.push_back("g" + std::to_string(i));
    q.Bsource = FPRing::poly_ring(
        make_context(spec.R.ctx()->ring, gnames, spec.R.ctx()->order));
    std::vector<Poly> images;
    for (auto& g : spec.B_gens) images.push_back(q.Rbar.nf(g));
    q.into = std::make_unique<RingMap>(q.Bsource, q.Rbar, images);
    q.tester = std::make_unique<SubringTester>(*q.into);
    return q;
}

} // namespace

bool reduced_probe(const PullbackSpec& spec) {
    Ideal cover = ideal_sum(spec.R.defining(), spec.I);
    GroebnerBasis G = buchberger(cover);
    std::vector<Poly> probes = spec.B_gens;
    for (size_t i = 0; i < spec.R.ctx()->nvars(); ++i)
        probes.push_back(Poly::variable(spec.R.ctx(), i));
    probes.push_back(Poly::constant(spec.R.ctx(), mpq_class(spec.p)));
    for (auto& f : probes)
        if (radical_member(f, cover) && !ideal_member(f, G)) return false;
    return true;
}

GpiResult gpi_check(const PullbackSpec& spec) {
    if (!is_prime(spec.p)) throw precondition_failed("gpi_check: p must be prime");
    QuotientSide q = quotient_side(spec);
    unsigned pe = static_cast<unsigned>(spec.p.get_ui());
    GpiResult res;
    res.ok = true;
    res.var_names = spec.R.ctx()->vars;
    for (size_t i = 0; i < spec.R.ctx()->nvars(); ++i) {
        Poly w = Poly::variable(spec.R.ctx(), i);
        int found = -1;
        for (unsigned e = 0; e <= spec.e_bound; ++e) {
            if (q.tester->contains(q.Rbar.nf(w))) {
                found = static_cast<int>(e);
                break;
            }
            w = w.pow(pe);
        }
        if (found < 0) res.ok = false;
        res.exponent.push_back(found);
    }
    return res;
}

PullbackResult fiber_product(const PullbackSpec& spec, const std::vector<Poly>& extra_gens,
                             unsigned probe_degree) {
    if (!is_prime(spec.p)) throw precondition_failed("fiber_product: p must be prime");
    if (!reduced_probe(spec))
        throw precondition_failed("fiber_product: R/I failed the reducedness probe");
    QuotientSide q = quotient_side(spec);

    // generator set: lifts of B generators, non-constant generators of I,
    // caller-supplied extras; constants are absorbed by the base ring
    std::vector<Poly> gens;
    auto push = [&](const Poly& g) {
        Poly n = spec.R.nf(g);
        if (n.is_constant()) return;
        for (auto& have : gens)
            if (have == n) return;
        gens.push_back(n);
    };
    for (auto& g : spec.B_gens) push(g);
    for (auto& g : spec.I.gens) push(g);
    for (auto& g : extra_gens) push(g);
    if (gens.empty()) throw precondition_failed("fiber_product: no ring generators");

    for (auto& g : gens)
        if (!q.tester->contains(q.Rbar.nf(g)))
            throw precondition_failed("fiber_product: generator escapes B: " + g.str());

    std::vector<std::string> names;
    for (size_t i = 0; i < gens.size(); ++i) names.push_back("X" + std::to_string(i));
    CtxPtr pctx = make_context(spec.R.ctx()->ring, names, spec.R.ctx()->order);
    Ideal ker = kernel_of_map(pctx, spec.R, gens);
    PullbackResult res{FPRing(pctx, ker, spec.R.asserted_domain()),
                       RingMap(FPRing(pctx, ker, spec.R.asserted_domain()), spec.R, gens),
                       gens, probe_degree};

    // surjectivity probe: every scaled monomial of R whose image lands in B
    // must already lie in the generated subring
    SubringTester inc(res.inclusion);
    unsigned pe = static_cast<unsigned>(spec.p.get_ui());
    for (auto& mu : default_probe_set(spec.R.ctx(), probe_degree)) {
        for (unsigned k = 1; k <= pe; ++k) {
            Poly cand = spec.R.nf(mu.scaled(mpq_class(k)));
            if (cand.is_constant()) continue;
            if (q.tester->contains(q.Rbar.nf(cand)) && !inc.contains(cand))
                throw precondition_failed("fiber_product: generator set incomplete at " +
                                          cand.str());
        }
    }
    return res;
}

std::optional<Certificate> certify_not_wn(const PullbackResult& pb, const mpz_class& p,
                                          unsigned degree_bound, unsigned e_bound) {
    if (!is_prime(p)) throw precondition_failed("certify_not_wn: p must be prime");
    const FPRing& R = pb.inclusion.target();
    SubringTester inc(pb.inclusion);
    unsigned pe = static_cast<unsigned>(p.get_ui());
    for (auto& mu : default_probe_set(R.ctx(), degree_bound)) {
        for (unsigned k = 1; k < pe; ++k) {
            Poly s = R.nf(mu.scaled(mpq_class(k)));
            if (s.is_zero() || inc.contains(s)) continue;
            if (!inc.contains(R.nf(s.scaled(mpq_class(p))))) continue;
            int e_found = -1;
            Poly w = s;
            for (unsigned e = 1; e <= e_bound; ++e) {
                w = w.pow(pe);
                if (inc.contains(R.nf(w))) {
                    e_found = static_cast<int>(e);
                    break;
                }
            }
            if (e_found < 0) continue;
            Certificate cert = manaresi_witness(pb.inclusion, s);
            if (cert.kind != CertKind::ManaresiWitness) continue;
            cert.prime = p;
            cert.note = "s^(p^" + std::to_string(e_found) + ") and p*s lie in the subring";
            return cert;
        }
    }
    return std::nullopt;
}

} // namespace wn
