#include "wn/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace wn {

std::string PolyContext::describe() const {
    std::string s = ring.describe() + "[";
    for (size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ",";
        s += vars[i];
    }
    return s + "]";
}

CtxPtr make_context(CoeffRing ring, std::vector<std::string> vars, MonomialOrder order) {
    return std::make_shared<const PolyContext>(std::move(ring), std::move(vars), order);
}

Poly::Poly(CtxPtr ctx, std::vector<Term> raw) : ctx_(std::move(ctx)) {
    // canonicalize: reduce coefficients, merge equal monomials, drop zeros,
    // sort strictly descending.
    std::sort(raw.begin(), raw.end(), [&](const Term& a, const Term& b) {
        return ctx_->order.compare(a.m, b.m) > 0;
    });
    for (auto& t : raw) {
        mpq_class c = ctx_->ring.canon(t.c);
        if (!terms_.empty() && terms_.back().m == t.m) {
            terms_.back().c = ctx_->ring.canon(terms_.back().c + c);
            if (terms_.back().c == 0) terms_.pop_back();
        } else if (c != 0) {
            terms_.push_back({t.m, c});
        }
    }
}

Poly Poly::constant(CtxPtr ctx, const mpq_class& c) {
    Poly r(ctx);
    mpq_class cc = ctx->ring.canon(c);
    if (cc != 0) r.terms_.push_back({Monomial(ctx->nvars()), cc});
    return r;
}

Poly Poly::variable(CtxPtr ctx, size_t idx) {
    Poly r(ctx);
    Monomial m(ctx->nvars());
    m.e[idx] = 1;
    r.terms_.push_back({m, mpq_class(1)});
    return r;
}

uint64_t Poly::degree() const {
    uint64_t d = 0;
    for (auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

const Term& Poly::leading() const {
    if (terms_.empty()) throw precondition_failed("leading term of zero polynomial");
    return terms_.front();
}

void Poly::check_ctx(const Poly& o) const {
    if (!ctx_ || !o.ctx_ || (ctx_ != o.ctx_ && *ctx_ != *o.ctx_))
        throw incompatible_context("polynomials from different ambient rings");
}

Poly Poly::operator+(const Poly& o) const {
    check_ctx(o);
    Poly r(ctx_);
    const auto& A = terms_;
    const auto& B = o.terms_;
    size_t i = 0, j = 0;
    while (i < A.size() || j < B.size()) {
        if (j == B.size() || (i < A.size() && ctx_->order.compare(A[i].m, B[j].m) > 0)) {
            r.terms_.push_back(A[i++]);
        } else if (i == A.size() || ctx_->order.compare(A[i].m, B[j].m) < 0) {
            r.terms_.push_back(B[j++]);
        } else {
            mpq_class c = ctx_->ring.canon(A[i].c + B[j].c);
            if (c != 0) r.terms_.push_back({A[i].m, c});
            ++i;
            ++j;
        }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r(ctx_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = ctx_->ring.canon(-t.c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_ctx(o);
    // accumulate via map keyed by monomial under the ambient order
    auto cmp = [&](const Monomial& a, const Monomial& b) {
        return ctx_->order.compare(a, b) > 0;
    };
    std::map<Monomial, mpq_class, decltype(cmp)> acc(cmp);
    for (auto& a : terms_)
        for (auto& b : o.terms_) acc[a.m * b.m] += a.c * b.c;
    Poly r(ctx_);
    for (auto& [m, c] : acc) {
        mpq_class cc = ctx_->ring.canon(c);
        if (cc != 0) r.terms_.push_back({m, cc});
    }
    return r;
}

Poly Poly::pow(unsigned n) const {
    Poly r = Poly::constant(ctx_, 1);
    Poly b = *this;
    while (n) {
        if (n & 1) r = r * b;
        b = n > 1 ? b * b : b;
        n >>= 1;
    }
    return r;
}

Poly Poly::scaled(const mpq_class& c) const {
    Poly r(ctx_);
    mpq_class cc = ctx_->ring.canon(c);
    if (cc == 0) return r;
    for (auto& t : terms_) {
        mpq_class x = ctx_->ring.canon(t.c * cc);
        if (x != 0) r.terms_.push_back({t.m, x});
    }
    return r;
}

Poly Poly::term_mul(const mpq_class& c, const Monomial& m) const {
    Poly r(ctx_);
    mpq_class cc = ctx_->ring.canon(c);
    if (cc == 0) return r;
    for (auto& t : terms_) {
        mpq_class x = ctx_->ring.canon(t.c * cc);
        if (x != 0) r.terms_.push_back({t.m * m, x});
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    check_ctx(o);
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

int Poly::compare(const Poly& a, const Poly& b) {
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = a.ctx_->order.compare(a.terms_[i].m, b.terms_[i].m);
        if (c) return c;
        if (a.terms_[i].c != b.terms_[i].c) return a.terms_[i].c < b.terms_[i].c ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

bool Poly::uses_var_prefix(size_t k) const {
    for (auto& t : terms_)
        for (size_t i = 0; i < k && i < t.m.e.size(); ++i)
            if (t.m.e[i]) return true;
    return false;
}

Poly Poly::derivative(size_t var) const {
    Poly r(ctx_);
    std::vector<Term> out;
    for (auto& t : terms_) {
        if (t.m.e[var] == 0) continue;
        Term nt = t;
        nt.c = t.c * t.m.e[var];
        nt.m.e[var] -= 1;
        out.push_back(std::move(nt));
    }
    return Poly(ctx_, std::move(out));
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        mpq_class c = t.c;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        mpq_class a = neg ? mpq_class(-c) : c;
        std::string mono;
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (!t.m.e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_->vars[i];
            if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
        }
        if (mono.empty()) {
            os << a.get_str();
        } else if (a == 1) {
            os << mono;
        } else {
            os << a.get_str() << "*" << mono;
        }
    }
    return os.str();
}

Poly transport(const Poly& f, const CtxPtr& dst) {
    if (!f.ctx()) return Poly(dst);
    std::vector<Term> out;
    for (auto& t : f.terms()) {
        Monomial m(dst->nvars());
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (!t.m.e[i]) continue;
            auto idx = dst->var_index(f.ctx()->vars[i]);
            if (!idx)
                throw incompatible_context("variable " + f.ctx()->vars[i] +
                                           " missing in target context");
            m.e[*idx] = t.m.e[i];
        }
        out.push_back({m, t.c});
    }
    return Poly(dst, std::move(out));
}

Poly substitute(const Poly& f, const std::vector<Poly>& images, const CtxPtr& target) {
    if (f.ctx() && images.size() != f.ctx()->nvars())
        throw incompatible_context("substitute: image count mismatch");
    Poly acc = Poly::zero(target);
    for (auto& t : f.terms()) {
        Poly p = Poly::constant(target, t.c);
        for (size_t i = 0; i < t.m.e.size(); ++i)
            if (t.m.e[i]) p = p * images[i].pow(t.m.e[i]);
        acc = acc + p;
    }
    return acc;
}

Poly poly_divexact(const Poly& g, const Poly& f) {
    if (f.is_zero()) throw precondition_failed("poly_divexact: division by zero");
    const auto& ctx = g.ctx();
    Poly rem = g;
    Poly q(ctx);
    std::vector<Term> qterms;
    const Term& lf = f.leading();
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        if (!lf.m.divides(lr.m) || !ctx->ring.divides(lf.c, lr.c))
            throw precondition_failed("poly_divexact: inexact division");
        mpq_class qc = ctx->ring.div_exact(lr.c, lf.c);
        Monomial qm = lf.m.quotient_into(lr.m);
        qterms.push_back({qm, qc});
        rem = rem - f.term_mul(qc, qm);
    }
    return Poly(ctx, std::move(qterms));
}

} // namespace wn
