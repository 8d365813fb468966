#include "wn/bertini.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace wn {

std::string ProjPoint::str() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ":";
        s += coords[i].get_str();
    }
    s += ")";
    return s;
}

ProjPoint specialize(const std::vector<mpz_class>& lift, const mpz_class& p) {
    if (!is_prime(p)) throw precondition_failed("specialize: p must be prime");
    std::vector<mpz_class> v = lift;
    bool all_zero = true;
    for (auto& c : v)
        if (c != 0) all_zero = false;
    if (all_zero) throw precondition_failed("specialize: zero vector");
    // strip the common p-power so some coordinate becomes a unit
    for (;;) {
        bool all_div = true;
        for (auto& c : v)
            if (c != 0 && c % p != 0) all_div = false;
        if (!all_div) break;
        for (auto& c : v)
            c /= p;
    }
    ProjPoint out;
    out.modulus = p;
    out.coords.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        mpz_class r = v[i] % p;
        if (r < 0) r += p;
        out.coords[i] = r;
    }
    // scale the first nonzero coordinate to 1
    size_t piv = 0;
    while (out.coords[piv] == 0) ++piv;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), out.coords[piv].get_mpz_t(), p.get_mpz_t());
    for (auto& c : out.coords) c = (c * inv) % p;
    return out;
}

std::vector<ProjPoint> enumerate_proj(unsigned d, const mpz_class& p) {
    if (!is_prime(p)) throw precondition_failed("enumerate_proj: p must be prime");
    std::vector<ProjPoint> out;
    for (unsigned piv = 0; piv <= d; ++piv) {
        unsigned tail = d - piv;
        std::vector<mpz_class> t(tail, 0);
        for (;;) {
            ProjPoint pt;
            pt.modulus = p;
            pt.coords.assign(piv, 0);
            pt.coords.push_back(1);
            for (auto& c : t) pt.coords.push_back(c);
            out.push_back(std::move(pt));
            size_t i = tail;
            while (i > 0 && ++t[i - 1] == p) t[--i] = 0;
            if (i == 0 && (tail == 0 || t[tail - 1] == 0)) break;
        }
    }
    return out;
}

Poly section_element(const SectionContext& ctx, const std::vector<mpz_class>& lift) {
    if (lift.size() != ctx.x_list.size())
        throw precondition_failed("section_element: coordinate count mismatch");
    Poly s = Poly::zero(ctx.R.ctx());
    for (size_t i = 0; i < lift.size(); ++i)
        s = s + ctx.x_list[i].scaled(mpq_class(lift[i]));
    return ctx.R.nf(s);
}

SymbolicPowerResult symbolic_power(const PrimeSpot& p, unsigned n) {
    if (n == 0) throw precondition_failed("symbolic_power: n must be positive");
    if (!p.saturation_element)
        throw precondition_failed("symbolic_power: spot has no saturation element");
    Ideal cover = p.cover();
    GroebnerBasis Gp = buchberger(cover);
    if (ideal_member(*p.saturation_element, Gp))
        throw precondition_failed("symbolic_power: saturation element lies in the spot");
    Ideal pn = ideal_sum(ideal_power(p.ideal, n), p.ring.defining());
    SaturationResult sat = ideal_saturate(pn, *p.saturation_element);
    SymbolicPowerResult res;
    res.ideal = sat.ideal;
    res.steps = sat.steps;
    res.contained = true;
    for (auto& g : res.ideal.gens)
        if (!ideal_member(g, Gp)) res.contained = false;
    if (!res.contained)
        throw precondition_failed("symbolic_power: saturation escapes the spot, "
                                  "unsuitable saturation element");
    return res;
}

ScanReport bertini_scan(const SectionContext& ctx, const mpz_class& q) {
    if (!is_prime(q)) throw precondition_failed("bertini_scan: q must be prime in v1");
    if (ctx.x_list.empty()) throw precondition_failed("bertini_scan: empty x_list");
    unsigned d = static_cast<unsigned>(ctx.x_list.size() - 1);

    std::vector<GroebnerBasis> bad_gb;
    for (auto& b : ctx.bad_primes) bad_gb.push_back(buchberger(b.cover()));
    std::vector<GroebnerBasis> sq_gb;
    for (auto& w : ctx.wn_spots) sq_gb.push_back(buchberger(symbolic_power(w, 2).ideal));

    std::vector<ProjPoint> points = enumerate_proj(d, q);
    ScanReport rep;
    rep.q = q;
    rep.total = points.size();
    rep.verdicts.resize(points.size());

    auto judge = [&](size_t i) {
        ScanVerdict v;
        v.alpha = points[i];
        v.lift = points[i].coords; // canonical representatives in {0..q-1}
        Poly x = section_element(ctx, v.lift);
        v.good = true;
        for (size_t b = 0; b < bad_gb.size(); ++b)
            if (v.good && ideal_member(x, bad_gb[b])) {
                v.good = false;
                v.reason = "section lies in bad prime " + std::to_string(b);
            }
        for (size_t w = 0; w < sq_gb.size(); ++w)
            if (v.good && ideal_member(x, sq_gb[w])) {
                v.good = false;
                v.reason = "section lies in symbolic square of spot " + std::to_string(w);
            }
        rep.verdicts[i] = std::move(v);
    };

    unsigned nthreads = 1;
    if (const char* env = std::getenv("WN_THREADS")) {
        long n = std::atol(env);
        if (n > 1) nthreads = static_cast<unsigned>(std::min(n, 64L));
    }
    if (nthreads <= 1 || points.size() < 2) {
        for (size_t i = 0; i < points.size(); ++i) judge(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t]() {
                for (size_t i = t; i < points.size(); i += nthreads) judge(i);
            });
        for (auto& th : pool) th.join();
    }
    for (auto& v : rep.verdicts)
        if (v.good) ++rep.good_count;
    return rep;
}

} // namespace wn
