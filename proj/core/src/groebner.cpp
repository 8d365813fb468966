#include "wn/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wn {

namespace {

std::string fresh_var(const std::vector<std::string>& vars, const std::string& stem) {
    std::string name = stem;
    int n = 0;
    auto taken = [&](const std::string& s) {
        return std::find(vars.begin(), vars.end(), s) != vars.end();
    };
    while (taken(name)) name = stem + std::to_string(n++);
    return name;
}

void check_supported_base(const CoeffRing& r) {
    if (r.is_field() || r.is_euclidean_nonfield()) return;
    throw unsupported_base("unsupported base ring " + r.describe());
}

// Buchberger engine; optionally tracks representations of basis elements in
// the input generators.
struct Engine {
    CtxPtr ctx;
    const CoeffRing& R;
    bool track;
    std::vector<Poly> B;
    std::vector<std::vector<Poly>> rep; // per basis element, per input gen
    size_t ngens = 0;

    // task: S/G-pair (i,j) or annihilator multiple (i, npos)
    static constexpr size_t npos = static_cast<size_t>(-1);
    struct Task {
        Monomial lcm;
        size_t i, j;
    };
    std::vector<Task> tasks;

    Engine(const CtxPtr& c, bool tr) : ctx(c), R(c->ring), track(tr) {
        check_supported_base(R);
    }

    struct Red {
        Poly r;
        std::map<size_t, Poly> cof; // basis index -> cofactor
    };

    Red reduce_full(Poly h) const {
        Red out;
        out.r = Poly(ctx);
        std::vector<Term> kept;
        while (!h.is_zero()) {
            Term t = h.leading();
            bool progressed = false;
            for (size_t gi = 0; gi < B.size(); ++gi) {
                const Poly& g = B[gi];
                if (g.is_zero()) continue;
                const Term& lg = g.leading();
                if (!lg.m.divides(t.m)) continue;
                auto [q, r] = R.euclid(t.c, lg.c);
                (void)r;
                if (q == 0) continue;
                Monomial shift = lg.m.quotient_into(t.m);
                h = h - g.term_mul(q, shift);
                if (track) {
                    Poly qp(ctx, {Term{shift, q}});
                    auto it = out.cof.find(gi);
                    if (it == out.cof.end())
                        out.cof.emplace(gi, qp);
                    else
                        it->second = it->second + qp;
                }
                progressed = true;
                break;
            }
            if (!progressed) {
                kept.push_back(t);
                h = h - Poly(ctx, {t});
            }
        }
        out.r = Poly(ctx, std::move(kept));
        return out;
    }

    std::vector<Poly> combine_rep(const std::map<size_t, Poly>& cof) const {
        std::vector<Poly> acc(ngens, Poly(ctx));
        for (auto& [gi, q] : cof)
            for (size_t j = 0; j < ngens; ++j) acc[j] = acc[j] + q * rep[gi][j];
        return acc;
    }

    void push_pairs(size_t n) {
        const Poly& g = B[n];
        for (size_t i = 0; i < n; ++i) {
            if (B[i].is_zero()) continue;
            Monomial l = Monomial::lcm(B[i].leading().m, g.leading().m);
            // Buchberger's first criterion, fields only: over a Euclidean
            // non-field coefficient divisibility defeats the product test.
            if (R.is_field() && B[i].leading().m.coprime(g.leading().m)) continue;
            tasks.push_back({l, i, n});
        }
        if (R.kind() == CoeffKind::IntegerModPrimePower && !R.is_unit(g.leading().c))
            tasks.push_back({g.leading().m, n, npos});
    }

    void add_element(Poly f, std::vector<Poly> frep) {
        Red red = reduce_full(std::move(f));
        if (red.r.is_zero()) return;
        std::vector<Poly> r2;
        if (track) {
            std::vector<Poly> sub = combine_rep(red.cof);
            r2.resize(ngens, Poly(ctx));
            for (size_t j = 0; j < ngens; ++j) r2[j] = frep[j] - sub[j];
        }
        mpq_class u = R.assoc_unit(red.r.leading().c);
        Poly g = red.r.scaled(u);
        if (track)
            for (auto& p : r2) p = p.scaled(u);
        B.push_back(std::move(g));
        rep.push_back(std::move(r2));
        push_pairs(B.size() - 1);
    }

    // normal selection: minimal lcm in the ambient order
    Task pop_task() {
        size_t best = 0;
        for (size_t i = 1; i < tasks.size(); ++i) {
            int c = ctx->order.compare(tasks[i].lcm, tasks[best].lcm);
            if (c < 0 || (c == 0 && (tasks[i].i < tasks[best].i ||
                                     (tasks[i].i == tasks[best].i && tasks[i].j < tasks[best].j))))
                best = i;
        }
        Task t = tasks[best];
        tasks.erase(tasks.begin() + static_cast<long>(best));
        return t;
    }

    void process(const Task& t) {
        if (t.j == npos) {
            // annihilator multiple over ZZ/p^k
            const Poly& g = B[t.i];
            if (g.is_zero()) return;
            // leading coefficient is associate-normalized to p^v; the
            // annihilator multiple kills it: p^(k-v) * p^v = p^k = 0
            mpz_class a = R.modulus() / g.leading().c.get_num();
            Poly ap = g.scaled(mpq_class(a));
            std::vector<Poly> arep;
            if (track) {
                arep.resize(ngens, Poly(ctx));
                for (size_t j = 0; j < ngens; ++j) arep[j] = rep[t.i][j].scaled(mpq_class(a));
            }
            add_element(std::move(ap), std::move(arep));
            return;
        }
        // copies: add_element below may reallocate B
        Poly f = B[t.i];
        Poly g = B[t.j];
        if (f.is_zero() || g.is_zero()) return;
        Term lf = f.leading();
        Term lg = g.leading();
        Monomial l = Monomial::lcm(lf.m, lg.m);
        Monomial mf = lf.m.quotient_into(l);
        Monomial mg = lg.m.quotient_into(l);
        auto bez = R.gcdext(lf.c, lg.c);
        // S-polynomial: cancel leading terms
        mpq_class cf = R.div_exact(lg.c, bez.g);
        mpq_class cg = R.div_exact(lf.c, bez.g);
        Poly sp = f.term_mul(cf, mf) - g.term_mul(cg, mg);
        std::vector<Poly> srep;
        if (track) {
            srep.resize(ngens, Poly(ctx));
            for (size_t j = 0; j < ngens; ++j)
                srep[j] = rep[t.i][j].term_mul(cf, mf) - rep[t.j][j].term_mul(cg, mg);
        }
        add_element(std::move(sp), std::move(srep));
        if (R.is_euclidean_nonfield()) {
            // G-polynomial: realize gcd of the leading coefficients
            Poly gp = f.term_mul(bez.x, mf) + g.term_mul(bez.y, mg);
            std::vector<Poly> grep;
            if (track) {
                grep.resize(ngens, Poly(ctx));
                for (size_t j = 0; j < ngens; ++j)
                    grep[j] = rep[t.i][j].term_mul(bez.x, mf) + rep[t.j][j].term_mul(bez.y, mg);
            }
            add_element(std::move(gp), std::move(grep));
        }
    }

    void run(const std::vector<Poly>& gens) {
        ngens = gens.size();
        for (size_t i = 0; i < gens.size(); ++i) {
            std::vector<Poly> r;
            if (track) {
                r.resize(ngens, Poly(ctx));
                r[i] = Poly::constant(ctx, 1);
            }
            add_element(gens[i], std::move(r));
        }
        while (!tasks.empty()) process(pop_task());
        interreduce();
        sort_basis();
    }

    void interreduce() {
        bool stable = false;
        while (!stable) {
            stable = true;
            for (size_t i = 0; i < B.size(); ++i) {
                if (B[i].is_zero()) continue;
                Poly saved = B[i];
                std::vector<Poly> savedRep;
                if (track) savedRep = rep[i];
                B[i] = Poly(ctx); // hide from its own reduction
                Red red = reduce_full(saved);
                if (red.r.is_zero()) {
                    // redundant element
                    if (!(saved.is_zero())) stable = false;
                    continue; // stays zero
                }
                std::vector<Poly> nrep;
                if (track) {
                    std::vector<Poly> sub = combine_rep(red.cof);
                    nrep.resize(ngens, Poly(ctx));
                    for (size_t j = 0; j < ngens; ++j) nrep[j] = savedRep[j] - sub[j];
                }
                mpq_class u = R.assoc_unit(red.r.leading().c);
                Poly g = red.r.scaled(u);
                if (track)
                    for (auto& p : nrep) p = p.scaled(u);
                if (g != saved) stable = false;
                B[i] = std::move(g);
                if (track) rep[i] = std::move(nrep);
            }
        }
    }

    void sort_basis() {
        std::vector<size_t> idx;
        for (size_t i = 0; i < B.size(); ++i)
            if (!B[i].is_zero()) idx.push_back(i);
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            int c = ctx->order.compare(B[a].leading().m, B[b].leading().m);
            if (c) return c < 0;
            return Poly::compare(B[a], B[b]) < 0;
        });
        std::vector<Poly> nb;
        std::vector<std::vector<Poly>> nr;
        for (size_t i : idx) {
            if (!nb.empty() && nb.back() == B[i]) continue; // dedupe
            nb.push_back(B[i]);
            if (track) nr.push_back(rep[i]);
        }
        B = std::move(nb);
        rep = std::move(nr);
    }
};

} // namespace

Ideal::Ideal(CtxPtr c, std::vector<Poly> g) : ctx(std::move(c)) {
    for (auto& p : g) {
        if (p.ctx() && *p.ctx() != *ctx)
            throw incompatible_context("ideal generator from a different ambient ring");
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
}

std::string Ideal::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ", ";
        os << gens[i].str();
    }
    os << ")";
    return os.str();
}

GroebnerBasis buchberger(const Ideal& I) {
    Engine e(I.ctx, false);
    e.run(I.gens);
    GroebnerBasis G;
    G.ctx = I.ctx;
    G.basis = std::move(e.B);
    G.strong_flag = I.ctx->ring.is_euclidean_nonfield();
    return G;
}

TrackedBasis buchberger_tracked(const Ideal& I) {
    Engine e(I.ctx, true);
    e.run(I.gens);
    TrackedBasis G;
    G.ctx = I.ctx;
    G.gens = I.gens;
    G.basis = std::move(e.B);
    G.rep = std::move(e.rep);
    return G;
}

Poly normal_form(const Poly& f, const GroebnerBasis& G) {
    if (f.ctx() && *f.ctx() != *G.ctx)
        throw incompatible_context("normal_form: context mismatch");
    Engine e(G.ctx, false);
    e.B = G.basis;
    return e.reduce_full(f).r;
}

TrackedNF normal_form_tracked(const Poly& f, const TrackedBasis& G) {
    Engine e(G.ctx, true);
    e.ngens = G.gens.size();
    e.B = G.basis;
    e.rep = G.rep;
    auto red = e.reduce_full(f);
    TrackedNF out;
    out.remainder = red.r;
    out.cofactors = e.combine_rep(red.cof);
    return out;
}

bool ideal_member(const Poly& f, const GroebnerBasis& G) { return normal_form(f, G).is_zero(); }

bool ideal_member(const Poly& f, const Ideal& I) { return ideal_member(f, buchberger(I)); }

bool radical_member(const Poly& f, const Ideal& I) {
    const CoeffRing& R = I.ctx->ring;
    if (!(R.kind() == CoeffKind::IntegerRing || R.is_field()))
        throw unsupported_base("radical_member over " + R.describe());
    std::vector<std::string> vars = I.ctx->vars;
    vars.push_back(fresh_var(vars, "_t"));
    CtxPtr ext = make_context(R, vars, MonomialOrder::grevlex());
    std::vector<Poly> gens;
    for (auto& g : I.gens) gens.push_back(transport(g, ext));
    Poly t = Poly::variable(ext, ext->nvars() - 1);
    gens.push_back(Poly::constant(ext, 1) - t * transport(f, ext));
    GroebnerBasis G = buchberger(Ideal(ext, std::move(gens)));
    return ideal_member(Poly::constant(ext, 1), G);
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    if (*I.ctx != *J.ctx) throw incompatible_context("ideal_sum: context mismatch");
    std::vector<Poly> g = I.gens;
    g.insert(g.end(), J.gens.begin(), J.gens.end());
    return Ideal(I.ctx, std::move(g));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    if (*I.ctx != *J.ctx) throw incompatible_context("ideal_product: context mismatch");
    std::vector<Poly> g;
    for (auto& a : I.gens)
        for (auto& b : J.gens) g.push_back(a * b);
    return Ideal(I.ctx, std::move(g));
}

Ideal ideal_power(const Ideal& I, unsigned n) {
    if (n == 0) return Ideal(I.ctx, {Poly::constant(I.ctx, 1)});
    Ideal r = I;
    for (unsigned i = 1; i < n; ++i) r = ideal_product(r, I);
    return r;
}

Ideal transport_ideal(const Ideal& I, const CtxPtr& dst) {
    std::vector<Poly> g;
    for (auto& p : I.gens) g.push_back(transport(p, dst));
    return Ideal(dst, std::move(g));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    if (*I.ctx != *J.ctx) throw incompatible_context("ideal_intersect: context mismatch");
    std::vector<std::string> vars;
    std::string aux = fresh_var(I.ctx->vars, "_s");
    vars.push_back(aux);
    vars.insert(vars.end(), I.ctx->vars.begin(), I.ctx->vars.end());
    CtxPtr ext = make_context(I.ctx->ring, vars, MonomialOrder::elim(1));
    Poly t = Poly::variable(ext, 0);
    Poly one = Poly::constant(ext, 1);
    std::vector<Poly> gens;
    for (auto& f : I.gens) gens.push_back(t * transport(f, ext));
    for (auto& g : J.gens) gens.push_back((one - t) * transport(g, ext));
    Ideal E = eliminate_prefix(Ideal(ext, std::move(gens)), 1);
    return transport_ideal(E, I.ctx);
}

Ideal ideal_quotient(const Ideal& I, const Poly& f) {
    const CoeffRing& R = I.ctx->ring;
    if (!(R.kind() == CoeffKind::IntegerRing || R.is_field()))
        throw unsupported_base("ideal_quotient over " + R.describe());
    if (f.is_zero()) {
        // (I : 0) = (1)
        return Ideal(I.ctx, {Poly::constant(I.ctx, 1)});
    }
    Ideal fin(I.ctx, {f});
    Ideal cap = ideal_intersect(I, fin);
    std::vector<Poly> gens;
    for (auto& g : cap.gens) gens.push_back(poly_divexact(g, f));
    return Ideal(I.ctx, std::move(gens));
}

SaturationResult ideal_saturate(const Ideal& I, const Poly& f) {
    SaturationResult out;
    Ideal cur = I;
    for (;;) {
        Ideal nxt = ideal_quotient(cur, f);
        ++out.steps;
        if (ideal_equal(nxt, cur)) {
            out.ideal = std::move(cur);
            return out;
        }
        cur = std::move(nxt);
        if (out.steps > 256) throw wn_error("saturation failed to stabilize");
    }
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    if (*I.ctx != *J.ctx) throw incompatible_context("ideal_equal: context mismatch");
    GroebnerBasis A = buchberger(I), B = buchberger(J);
    if (A.basis.size() != B.basis.size()) return false;
    for (size_t i = 0; i < A.basis.size(); ++i)
        if (A.basis[i] != B.basis[i]) return false;
    return true;
}

Ideal eliminate_prefix(const Ideal& I, size_t k) {
    if (k > I.ctx->nvars()) throw precondition_failed("eliminate: prefix too long");
    MonomialOrder bo = MonomialOrder::elim(k);
    CtxPtr bctx = make_context(I.ctx->ring, I.ctx->vars, bo);
    GroebnerBasis G = buchberger(transport_ideal(I, bctx));
    std::vector<std::string> keep(I.ctx->vars.begin() + static_cast<long>(k),
                                  I.ctx->vars.end());
    CtxPtr rctx = make_context(I.ctx->ring, keep, MonomialOrder::grevlex());
    std::vector<Poly> gens;
    for (auto& g : G.basis)
        if (!g.uses_var_prefix(k)) gens.push_back(transport(g, rctx));
    return Ideal(rctx, std::move(gens));
}

namespace {

// Krull dimension of a monomial ideal over a field: size of the largest set
// of variables not meeting the support of any leading monomial.
int monomial_ideal_dim(const std::vector<Monomial>& lts, size_t nvars) {
    for (auto& m : lts)
        if (m.is_one()) return -1; // unit ideal
    if (nvars > 24) throw wn_error("dimension: too many variables");
    std::vector<uint32_t> masks;
    for (auto& m : lts) {
        uint32_t msk = 0;
        for (size_t i = 0; i < nvars; ++i)
            if (m.e[i]) msk |= (1u << i);
        masks.push_back(msk);
    }
    int best = 0;
    for (uint32_t S = 0; S < (1u << nvars); ++S) {
        bool ok = true;
        for (uint32_t msk : masks) {
            if ((msk & ~S) == 0) { // support contained in S
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(S));
    }
    return best;
}

int fiber_dim(const Ideal& I, const CoeffRing& field) {
    CtxPtr fctx = make_context(field, I.ctx->vars, MonomialOrder::grevlex());
    std::vector<Poly> gens;
    for (auto& g : I.gens) gens.push_back(transport(g, fctx));
    GroebnerBasis G = buchberger(Ideal(fctx, std::move(gens)));
    std::vector<Monomial> lts;
    for (auto& g : G.basis) lts.push_back(g.leading().m);
    return monomial_ideal_dim(lts, fctx->nvars());
}

} // namespace

FiberDims dim_fiberwise(const Ideal& I, const std::vector<mpz_class>& primes) {
    if (I.ctx->ring.kind() != CoeffKind::IntegerRing)
        throw unsupported_base("dim_fiberwise requires base ZZ");
    FiberDims out;
    out.generic = fiber_dim(I, CoeffRing::QQ());
    for (auto& p : primes) out.special[p] = fiber_dim(I, CoeffRing::GF(p));
    return out;
}

bool certify_basis(const GroebnerBasis& G) {
    const CoeffRing& R = G.ctx->ring;
    Engine e(G.ctx, false);
    e.B = G.basis;
    for (size_t i = 0; i < G.basis.size(); ++i) {
        for (size_t j = i + 1; j < G.basis.size(); ++j) {
            const Term& lf = G.basis[i].leading();
            const Term& lg = G.basis[j].leading();
            Monomial l = Monomial::lcm(lf.m, lg.m);
            Monomial mf = lf.m.quotient_into(l);
            Monomial mg = lg.m.quotient_into(l);
            auto bez = R.gcdext(lf.c, lg.c);
            Poly sp = G.basis[i].term_mul(R.div_exact(lg.c, bez.g), mf) -
                      G.basis[j].term_mul(R.div_exact(lf.c, bez.g), mg);
            if (!e.reduce_full(sp).r.is_zero()) return false;
            if (R.is_euclidean_nonfield()) {
                Poly gp = G.basis[i].term_mul(bez.x, mf) + G.basis[j].term_mul(bez.y, mg);
                if (!e.reduce_full(gp).r.is_zero()) return false;
            }
        }
        if (R.kind() == CoeffKind::IntegerModPrimePower &&
            !R.is_unit(G.basis[i].leading().c)) {
            mpz_class a = R.modulus() / G.basis[i].leading().c.get_num();
            if (!e.reduce_full(G.basis[i].scaled(mpq_class(a))).r.is_zero()) return false;
        }
    }
    return true;
}

} // namespace wn
