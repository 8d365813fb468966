#include "wn/fpring.hpp"

#include <algorithm>

namespace wn {

namespace {

std::string freshen(const std::string& stem, const std::vector<std::string>& taken) {
    std::string name = stem;
    int n = 0;
    while (std::find(taken.begin(), taken.end(), name) != taken.end())
        name = stem + "_" + std::to_string(n++);
    return name;
}

/// Rebuild f in dst, sending variable i to dst variable var_map[i].
Poly remap(const Poly& f, const CtxPtr& dst, const std::vector<size_t>& var_map) {
    std::vector<Term> out;
    for (auto& t : f.terms()) {
        Monomial m(dst->nvars());
        for (size_t i = 0; i < t.m.e.size(); ++i)
            if (t.m.e[i]) m.e[var_map[i]] += t.m.e[i];
        out.push_back({m, t.c});
    }
    return Poly(dst, std::move(out));
}

} // namespace

FPRing::FPRing(CtxPtr ctx, Ideal defining, bool asserted_domain)
    : ctx_(std::move(ctx)), asserted_domain_(asserted_domain) {
    if (defining.ctx)
        defining_ = transport_ideal(defining, ctx_);
    else
        defining_ = Ideal(ctx_, {});
    gb_ = std::make_shared<const GroebnerBasis>(buchberger(defining_));
}

bool FPRing::is_proper() const { return !is_zero(Poly::constant(ctx_, 1)); }

std::string FPRing::describe() const {
    std::string s = ctx_->describe();
    if (!defining_.gens.empty()) s += " / " + defining_.str();
    return s;
}

RingMap::RingMap(FPRing source, FPRing target, std::vector<Poly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.ctx()->nvars())
        throw incompatible_context("ring map needs one image per source variable");
    for (auto& f : images_)
        if (f.ctx() && *f.ctx() != *target_.ctx())
            throw incompatible_context("ring map image from a different ring");
    // well-definedness: defining relations of the source map to zero
    for (auto& g : source_.defining().gens)
        if (!target_.is_zero(substitute(g, images_, target_.ctx())))
            throw precondition_failed("ill-defined map: relation " + g.str() +
                                      " does not map to zero");
    std::vector<std::string> vars = target_.ctx()->vars;
    for (auto& v : source_.ctx()->vars) {
        std::string a = freshen(v, vars);
        src_alias_.push_back(a);
        vars.push_back(a);
    }
    combined_ = make_context(target_.ctx()->ring, vars,
                             MonomialOrder::elim(target_.ctx()->nvars()));
}

Poly RingMap::apply(const Poly& f) const {
    return target_.nf(substitute(f, images_, target_.ctx()));
}

void RingMap::set_relative_presentation(std::vector<Poly> rels) {
    for (auto& r : rels)
        if (r.ctx() && *r.ctx() != *combined_)
            throw incompatible_context("relative presentation must live in the combined context");
    rels_ = std::move(rels);
}

RingMap RingMap::identity(const FPRing& R) {
    std::vector<Poly> images;
    for (size_t i = 0; i < R.ctx()->nvars(); ++i)
        images.push_back(Poly::variable(R.ctx(), i));
    return RingMap(R, R, std::move(images));
}

PrimeSpot::PrimeSpot(FPRing R, Ideal I, std::optional<Poly> sat)
    : ring(std::move(R)), ideal(std::move(I)), saturation_element(std::move(sat)) {
    if (*ideal.ctx != *ring.ctx())
        throw incompatible_context("prime spot ideal from a different ring");
    GroebnerBasis G = buchberger(cover());
    if (ideal_member(Poly::constant(ring.ctx(), 1), G))
        throw precondition_failed("prime spot is not a proper ideal");
    if (saturation_element && ideal_member(*saturation_element, G))
        throw precondition_failed("saturation element lies in the prime");
}

bool prime_probe(const PrimeSpot& p, unsigned degree_bound) {
    GroebnerBasis G = buchberger(p.cover());
    const CtxPtr& ctx = p.ring.ctx();
    // low-degree monomials outside p
    std::vector<Poly> outside;
    std::vector<Monomial> frontier{Monomial(ctx->nvars())};
    for (unsigned d = 0; d <= degree_bound; ++d) {
        std::vector<Monomial> next;
        for (auto& m : frontier) {
            Poly f(ctx, {Term{m, mpq_class(1)}});
            if (!ideal_member(f, G)) outside.push_back(f);
            if (d < degree_bound)
                for (size_t v = 0; v < ctx->nvars(); ++v) {
                    Monomial mm = m;
                    mm.e[v] += 1;
                    next.push_back(mm);
                }
        }
        frontier = std::move(next);
    }
    for (auto& f : outside)
        for (auto& g : outside)
            if (ideal_member(f * g, G)) return false;
    return true;
}

TensorSquare tensor_square(const RingMap& phi) {
    const FPRing& S = phi.target();
    size_t n = S.ctx()->nvars();
    std::vector<std::string> vars;
    std::vector<size_t> lmap(n), rmap(n);
    for (size_t i = 0; i < n; ++i) {
        std::string l = freshen(S.ctx()->vars[i] + "_1", vars);
        lmap[i] = vars.size();
        vars.push_back(l);
    }
    for (size_t i = 0; i < n; ++i) {
        std::string r = freshen(S.ctx()->vars[i] + "_2", vars);
        rmap[i] = vars.size();
        vars.push_back(r);
    }
    CtxPtr tctx = make_context(S.ctx()->ring, vars, MonomialOrder::grevlex());
    std::vector<Poly> gens;
    for (auto& g : S.defining().gens) {
        gens.push_back(remap(g, tctx, lmap));
        gens.push_back(remap(g, tctx, rmap));
    }
    for (auto& img : phi.images())
        gens.push_back(remap(img, tctx, lmap) - remap(img, tctx, rmap));
    TensorSquare T;
    T.T = FPRing(tctx, Ideal(tctx, std::move(gens)));
    for (size_t i = 0; i < n; ++i) {
        T.left_images.push_back(Poly::variable(tctx, lmap[i]));
        T.right_images.push_back(Poly::variable(tctx, rmap[i]));
    }
    return T;
}

Poly TensorSquare::left(const Poly& s) const {
    return T.nf(substitute(s, left_images, T.ctx()));
}
Poly TensorSquare::right(const Poly& s) const {
    return T.nf(substitute(s, right_images, T.ctx()));
}

SubringTester::SubringTester(const RingMap& phi)
    : phi_(phi), comb_(phi.combined_ctx()), ntarget_(phi.target().ctx()->nvars()) {
    std::vector<Poly> gens;
    std::vector<size_t> tmap(ntarget_);
    for (size_t i = 0; i < ntarget_; ++i) tmap[i] = i;
    for (auto& g : phi.target().defining().gens) gens.push_back(remap(g, comb_, tmap));
    for (size_t j = 0; j < phi.source().ctx()->nvars(); ++j) {
        Poly xj = Poly::variable(comb_, ntarget_ + j);
        gens.push_back(xj - remap(phi.images()[j], comb_, tmap));
    }
    gb_ = buchberger(Ideal(comb_, std::move(gens)));
}

std::optional<Poly> SubringTester::preimage(const Poly& f) const {
    std::vector<size_t> tmap(ntarget_);
    for (size_t i = 0; i < ntarget_; ++i) tmap[i] = i;
    Poly nf = normal_form(remap(f, comb_, tmap), gb_);
    if (nf.uses_var_prefix(ntarget_)) return std::nullopt;
    // rewrite in source variables
    std::vector<size_t> smap(comb_->nvars(), 0);
    for (size_t j = 0; j < phi_.source().ctx()->nvars(); ++j) smap[ntarget_ + j] = j;
    return phi_.source().nf(remap(nf, phi_.source().ctx(), smap));
}

std::optional<Poly> subring_member(const Poly& f, const RingMap& phi) {
    return SubringTester(phi).preimage(f);
}

Ideal kernel_of_map(const CtxPtr& source_ctx, const FPRing& target,
                    const std::vector<Poly>& images) {
    if (images.size() != source_ctx->nvars())
        throw incompatible_context("kernel_of_map: image count mismatch");
    if (source_ctx->ring != target.ctx()->ring)
        throw incompatible_context("kernel_of_map: base ring mismatch");
    size_t nt = target.ctx()->nvars();
    std::vector<std::string> vars = target.ctx()->vars;
    std::vector<std::string> alias;
    for (auto& v : source_ctx->vars) {
        std::string a = freshen(v, vars);
        alias.push_back(a);
        vars.push_back(a);
    }
    CtxPtr comb = make_context(source_ctx->ring, vars, MonomialOrder::elim(nt));
    std::vector<size_t> tmap(nt);
    for (size_t i = 0; i < nt; ++i) tmap[i] = i;
    std::vector<Poly> gens;
    for (auto& g : target.defining().gens) gens.push_back(remap(g, comb, tmap));
    for (size_t j = 0; j < images.size(); ++j)
        gens.push_back(Poly::variable(comb, nt + j) - remap(images[j], comb, tmap));
    Ideal E = eliminate_prefix(Ideal(comb, std::move(gens)), nt);
    // E lives on the alias names; rebuild on the source context positionally
    std::vector<size_t> smap(source_ctx->nvars());
    for (size_t j = 0; j < smap.size(); ++j) smap[j] = j;
    std::vector<Poly> out;
    for (auto& g : E.gens) out.push_back(remap(g, source_ctx, smap));
    return Ideal(source_ctx, std::move(out));
}

Ideal kernel_of_map(const RingMap& phi) {
    return kernel_of_map(phi.source().ctx(), phi.target(), phi.images());
}

PresentedModule relative_differentials(const RingMap& phi) {
    const FPRing& S = phi.target();
    size_t nt = S.ctx()->nvars();
    // relative variables: target variables that are not literal images
    std::vector<size_t> rel_vars;
    for (size_t j = 0; j < nt; ++j) {
        Poly vj = Poly::variable(S.ctx(), j);
        bool pulled = false;
        for (auto& img : phi.images())
            if (img == vj) {
                pulled = true;
                break;
            }
        if (!pulled) rel_vars.push_back(j);
    }
    PresentedModule M;
    M.ring = S;
    M.gens = rel_vars.size();
    if (rel_vars.empty()) return M;
    if (phi.relative_presentation().empty())
        throw precondition_failed("relative presentation required for differentials");
    // images taking the combined context into S: target vars to themselves,
    // source aliases to the map's images
    std::vector<Poly> into_S;
    for (size_t i = 0; i < nt; ++i) into_S.push_back(Poly::variable(S.ctx(), i));
    for (auto& img : phi.images()) into_S.push_back(img);
    for (auto& r : phi.relative_presentation()) {
        std::vector<Poly> row;
        for (size_t j : rel_vars)
            row.push_back(S.nf(substitute(r.derivative(j), into_S, S.ctx())));
        M.relations.push_back(std::move(row));
    }
    return M;
}

namespace {

Poly det_rec(const std::vector<std::vector<Poly>>& m, std::vector<size_t> rows,
             std::vector<size_t> cols, const CtxPtr& ctx) {
    if (rows.empty()) return Poly::constant(ctx, 1);
    Poly acc(ctx);
    size_t r0 = rows.front();
    std::vector<size_t> rrest(rows.begin() + 1, rows.end());
    for (size_t k = 0; k < cols.size(); ++k) {
        std::vector<size_t> crest;
        for (size_t i = 0; i < cols.size(); ++i)
            if (i != k) crest.push_back(cols[i]);
        Poly minor = det_rec(m, rrest, crest, ctx);
        Poly term = m[r0][cols[k]] * minor;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

void combinations(size_t n, size_t k, size_t start, std::vector<size_t>& cur,
                  const std::function<void(const std::vector<size_t>&)>& fn) {
    if (cur.size() == k) {
        fn(cur);
        return;
    }
    for (size_t i = start; i < n; ++i) {
        cur.push_back(i);
        combinations(n, k, i + 1, cur, fn);
        cur.pop_back();
    }
}

} // namespace

Ideal fitting_zero(const PresentedModule& M) {
    const CtxPtr& ctx = M.ring.ctx();
    if (M.gens == 0) return Ideal(ctx, {Poly::constant(ctx, 1)});
    if (M.relations.size() < M.gens) return Ideal(ctx, {});
    std::vector<size_t> cols(M.gens);
    for (size_t i = 0; i < M.gens; ++i) cols[i] = i;
    std::vector<Poly> gens;
    std::vector<size_t> cur;
    combinations(M.relations.size(), M.gens, 0, cur, [&](const std::vector<size_t>& rows) {
        Poly d = M.ring.nf(det_rec(M.relations, rows, cols, ctx));
        if (!d.is_zero()) gens.push_back(d);
    });
    return Ideal(ctx, std::move(gens));
}

bool unramified_at(const RingMap& phi, const PrimeSpot& p) {
    if (*p.ring.ctx() != *phi.source().ctx())
        throw incompatible_context("prime spot must live in the map's source");
    Ideal F0 = fitting_zero(relative_differentials(phi));
    // test ideal p*S in the target's cover
    std::vector<Poly> gens = phi.target().defining().gens;
    for (auto& g : p.ideal.gens) gens.push_back(phi.apply(g));
    GroebnerBasis G = buchberger(Ideal(phi.target().ctx(), std::move(gens)));
    if (F0.gens.empty()) return false; // zero Fitting ideal: ramified everywhere
    for (auto& f : F0.gens)
        if (!ideal_member(f, G)) return true;
    return false;
}

bool verify_spanning(const RingMap& phi, const std::vector<Poly>& module_gens) {
    const FPRing& S = phi.target();
    size_t nt = S.ctx()->nvars();
    // T = S[eps]/(eps^2); the image of psi is phi(R) + eps * span(module_gens)
    std::vector<std::string> vars = S.ctx()->vars;
    std::string eps_name = freshen("eps", vars);
    vars.push_back(eps_name);
    CtxPtr tctx = make_context(S.ctx()->ring, vars, MonomialOrder::grevlex());
    std::vector<size_t> tmap(nt);
    for (size_t i = 0; i < nt; ++i) tmap[i] = i;
    Poly eps = Poly::variable(tctx, nt);
    std::vector<Poly> tdef;
    for (auto& g : S.defining().gens) tdef.push_back(remap(g, tctx, tmap));
    tdef.push_back(eps * eps);
    FPRing Teps(tctx, Ideal(tctx, std::move(tdef)));

    std::vector<std::string> svars = phi.source().ctx()->vars;
    std::vector<Poly> images;
    for (auto& img : phi.images()) images.push_back(remap(img, tctx, tmap));
    for (size_t i = 0; i < module_gens.size(); ++i) {
        std::string mv = freshen("M" + std::to_string(i), svars);
        svars.push_back(mv);
        images.push_back(Teps.nf(eps * remap(module_gens[i], tctx, tmap)));
    }
    CtxPtr sctx = make_context(phi.source().ctx()->ring, svars, MonomialOrder::grevlex());
    RingMap psi(FPRing::poly_ring(sctx), Teps, images);
    SubringTester tester(psi);
    if (!tester.contains(Teps.nf(eps))) return false;
    for (size_t v = 0; v < nt; ++v)
        for (auto& m : module_gens) {
            Poly probe = Teps.nf(eps * Poly::variable(tctx, v) * remap(m, tctx, tmap));
            if (!tester.contains(probe)) return false;
        }
    return true;
}

namespace {

std::vector<Monomial> monomials_up_to(size_t nvars, unsigned degree) {
    std::vector<Monomial> out{Monomial(nvars)};
    std::vector<Monomial> frontier = out;
    for (unsigned d = 1; d <= degree; ++d) {
        std::vector<Monomial> next;
        for (auto& m : frontier) {
            // extend only at or after the last touched variable to avoid dupes
            size_t start = 0;
            for (size_t i = nvars; i-- > 0;)
                if (m.e[i]) {
                    start = i;
                    break;
                }
            for (size_t v = start; v < nvars; ++v) {
                Monomial mm = m;
                mm.e[v] += 1;
                next.push_back(mm);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

Ideal conductor_pass(const RingMap& phi, const SubringTester& tester,
                     const std::vector<Poly>& module_gens, unsigned degree_bound,
                     unsigned scalar_bound) {
    const CtxPtr& sctx = phi.source().ctx();
    std::vector<Poly> found;
    for (auto& mu : monomials_up_to(sctx->nvars(), degree_bound)) {
        Poly base(sctx, {Term{mu, mpq_class(1)}});
        Poly img = phi.apply(base);
        for (unsigned k = 1; k <= scalar_bound; ++k) {
            Poly cand_img = img.scaled(mpq_class(k));
            bool ok = true;
            for (auto& m : module_gens)
                if (!tester.contains(phi.target().nf(cand_img * m))) {
                    ok = false;
                    break;
                }
            if (ok) {
                found.push_back(base.scaled(mpq_class(k)));
                break;
            }
        }
    }
    return Ideal(sctx, std::move(found));
}

} // namespace

ConductorResult conductor(const RingMap& phi, const std::vector<Poly>& module_gens,
                          unsigned degree_bound, unsigned scalar_bound) {
    if (!verify_spanning(phi, module_gens))
        throw precondition_failed("module generators fail the spanning check");
    SubringTester tester(phi);
    ConductorResult out;
    Ideal I = conductor_pass(phi, tester, module_gens, degree_bound, scalar_bound);
    Ideal I2 = conductor_pass(phi, tester, module_gens, degree_bound + 1, scalar_bound);
    out.ideal = I;
    out.exact = ideal_equal(ideal_sum(I, phi.source().defining()),
                            ideal_sum(I2, phi.source().defining()));
    return out;
}

std::optional<Poly> solve_linear(const FPRing& R, const Poly& b, const Poly& c) {
    if (R.is_zero(b)) {
        if (R.is_zero(c)) return Poly::zero(R.ctx());
        return std::nullopt;
    }
    std::vector<Poly> gens = R.defining().gens;
    gens.push_back(R.nf(b));
    TrackedBasis T = buchberger_tracked(Ideal(R.ctx(), std::move(gens)));
    TrackedNF nf = normal_form_tracked(R.nf(c), T);
    if (!nf.remainder.is_zero()) return std::nullopt;
    Poly a = R.nf(nf.cofactors.back());
    if (!R.equal(a * b, c)) throw wn_error("solve_linear: cofactor verification failed");
    return a;
}

} // namespace wn
