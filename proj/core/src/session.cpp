#include "wn/session.hpp"

#include <chrono>
#include <sstream>

namespace wn {

std::string tool_version() { return "wn 1.0.0"; }

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(const std::string& bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string strip_comments(const std::string& src) {
    std::string out;
    bool in_comment = false;
    for (char c : src) {
        if (c == '#') in_comment = true;
        if (c == '\n') in_comment = false;
        if (!in_comment) out += c;
    }
    return out;
}

// split on `sep` at bracket depth 0
std::vector<std::string> split_depth0(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    out.push_back(cur);
    return out;
}

std::string first_word(const std::string& s, std::string& rest) {
    size_t i = 0;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    rest = trim(s.substr(i));
    return s.substr(0, i);
}

std::string strip_parens(const std::string& s) {
    std::string t = trim(s);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')')
        return t.substr(1, t.size() - 2);
    throw parse_error("expected a parenthesized list, got: " + s);
}

std::string strip_brackets(const std::string& s) {
    std::string t = trim(s);
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']')
        return t.substr(1, t.size() - 2);
    throw parse_error("expected a bracketed list, got: " + s);
}

long parse_long(const std::string& s) {
    std::string t = trim(s);
    size_t pos = 0;
    long v = std::stol(t, &pos);
    if (pos != t.size()) throw parse_error("expected an integer, got: " + s);
    return v;
}

struct PullbackDecl {
    PullbackSpec spec;
    std::vector<Poly> extra_gens;
    std::optional<PullbackResult> built;
};

struct ScanDecl {
    SectionContext ctx;
    mpz_class q = 2;
};

struct Env {
    std::map<std::string, FPRing> rings;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, RingMap> maps;
    std::map<std::string, PrimeSpot> spots;
    std::map<std::string, PullbackDecl> pullbacks;
    std::map<std::string, ScanDecl> scans;
    std::vector<std::string> names; // uniqueness across kinds

    void claim(const std::string& n) {
        for (auto& have : names)
            if (have == n) throw parse_error("duplicate name: " + n);
        names.push_back(n);
    }
    template <class M>
    typename M::mapped_type& get(M& m, const std::string& n, const char* kind) {
        auto it = m.find(n);
        if (it == m.end())
            throw parse_error(std::string("unknown ") + kind + ": " + n);
        return it->second;
    }
    FPRing& ring(const std::string& n) { return get(rings, n, "ring"); }
    Ideal& ideal(const std::string& n) { return get(ideals, n, "ideal"); }
    RingMap& map(const std::string& n) { return get(maps, n, "map"); }
    PrimeSpot& spot(const std::string& n) { return get(spots, n, "primespot"); }
    PullbackDecl& pullback(const std::string& n) { return get(pullbacks, n, "pullback"); }
    ScanDecl& scan(const std::string& n) { return get(scans, n, "scan"); }
};

bool is_decl_keyword(const std::string& w) {
    return w == "ring" || w == "ideal" || w == "map" || w == "primespot" ||
           w == "pullback" || w == "scan" || w == "relpres";
}

void declare_ring(Env& env, const std::string& body) {
    std::string rest;
    std::string name = first_word(body, rest);
    env.claim(name);
    if (rest.empty() || rest[0] != '=') throw parse_error("ring: expected '='");
    std::string spec = trim(rest.substr(1));
    MonomialOrder order = MonomialOrder::grevlex();
    size_t opos = spec.rfind(" order ");
    if (opos != std::string::npos) {
        std::string oname = trim(spec.substr(opos + 7));
        spec = trim(spec.substr(0, opos));
        if (oname == "lex")
            order = MonomialOrder::lex();
        else if (oname == "grevlex")
            order = MonomialOrder::grevlex();
        else
            throw parse_error("unknown order: " + oname);
    }
    RingSpec rs = parse_ring_spec(spec, order);
    env.rings.emplace(name, FPRing(rs.ctx, Ideal(rs.ctx, rs.defining)));
}

void declare_ideal(Env& env, const std::string& body) {
    std::string rest;
    std::string name = first_word(body, rest);
    env.claim(name);
    std::string kw;
    std::string tail = rest;
    kw = first_word(tail, rest);
    if (kw != "in") throw parse_error("ideal: expected 'in RING'");
    std::string rname = first_word(rest, tail);
    if (tail.empty() || tail[0] != '=') throw parse_error("ideal: expected '='");
    FPRing& R = env.ring(rname);
    auto gens = parse_poly_list(strip_parens(tail.substr(1)), R.ctx());
    env.ideals.emplace(name, Ideal(R.ctx(), gens));
}

void declare_map(Env& env, const std::string& body) {
    std::string rest;
    std::string name = first_word(body, rest);
    env.claim(name);
    if (rest.empty() || rest[0] != ':') throw parse_error("map: expected ':'");
    std::string sig = trim(rest.substr(1));
    size_t brace = sig.find('{');
    if (brace == std::string::npos || sig.back() != '}')
        throw parse_error("map: expected '{ var -> image, ... }'");
    std::string arrow_part = trim(sig.substr(0, brace));
    size_t arrow = arrow_part.find("->");
    if (arrow == std::string::npos) throw parse_error("map: expected 'A -> B'");
    FPRing& src = env.ring(trim(arrow_part.substr(0, arrow)));
    FPRing& dst = env.ring(trim(arrow_part.substr(arrow + 2)));
    std::string inner = sig.substr(brace + 1, sig.size() - brace - 2);
    std::map<std::string, Poly> assign;
    for (auto& piece : split_depth0(inner, ',')) {
        std::string p = trim(piece);
        if (p.empty()) continue;
        size_t a = p.find("->");
        if (a == std::string::npos) throw parse_error("map: expected 'var -> image'");
        assign[trim(p.substr(0, a))] = parse_poly(trim(p.substr(a + 2)), dst.ctx());
    }
    std::vector<Poly> images;
    for (auto& v : src.ctx()->vars) {
        auto it = assign.find(v);
        if (it == assign.end()) throw parse_error("map: no image for variable " + v);
        images.push_back(it->second);
    }
    env.maps.emplace(name, RingMap(src, dst, images));
}

void declare_primespot(Env& env, const std::string& body) {
    std::string rest;
    std::string name = first_word(body, rest);
    env.claim(name);
    std::string tail;
    if (first_word(rest, tail) != "in") throw parse_error("primespot: expected 'in RING'");
    std::string rname = first_word(tail, rest);
    if (rest.empty() || rest[0] != '=') throw parse_error("primespot: expected '='");
    std::string def = trim(rest.substr(1));
    std::optional<Poly> sat;
    FPRing& R = env.ring(rname);
    size_t spos = def.rfind(" sat ");
    if (spos != std::string::npos) {
        sat = parse_poly(strip_parens(def.substr(spos + 5)), R.ctx());
        def = trim(def.substr(0, spos));
    }
    auto gens = parse_poly_list(strip_parens(def), R.ctx());
    env.spots.emplace(name, PrimeSpot(R, Ideal(R.ctx(), gens), sat));
}

void declare_pullback(Env& env, const std::string& body) {
    std::string rest;
    std::string name = first_word(body, rest);
    env.claim(name);
    if (rest.empty() || rest[0] != '=') throw parse_error("pullback: expected '='");
    std::string block = trim(rest.substr(1));
    if (block.size() < 2 || block.front() != '{' || block.back() != '}')
        throw parse_error("pullback: expected '{ ... }'");
    PullbackDecl decl;
    bool have_ring = false;
    std::string igens, bgens, extra;
    for (auto& piece : split_depth0(block.substr(1, block.size() - 2), ';')) {
        std::string p = trim(piece);
        if (p.empty()) continue;
        size_t eq = p.find('=');
        if (eq == std::string::npos) throw parse_error("pullback: expected 'key = value'");
        std::string key = trim(p.substr(0, eq));
        std::string val = trim(p.substr(eq + 1));
        if (key == "R") {
            decl.spec.R = env.ring(val);
            have_ring = true;
        } else if (key == "I")
            igens = val;
        else if (key == "B")
            bgens = val;
        else if (key == "gens")
            extra = val;
        else if (key == "p")
            decl.spec.p = parse_long(val);
        else if (key == "e")
            decl.spec.e_bound = static_cast<unsigned>(parse_long(val));
        else
            throw parse_error("pullback: unknown key " + key);
    }
    if (!have_ring || igens.empty() || bgens.empty())
        throw parse_error("pullback: R, I and B are required");
    auto& ctx = decl.spec.R.ctx();
    decl.spec.I = Ideal(ctx, parse_poly_list(strip_parens(igens), ctx));
    decl.spec.B_gens = parse_poly_list(strip_parens(bgens), ctx);
    if (!extra.empty()) decl.extra_gens = parse_poly_list(strip_parens(extra), ctx);
    env.pullbacks.emplace(name, std::move(decl));
}

void declare_scan(Env& env, const std::string& body) {
    std::string rest;
    std::string name = first_word(body, rest);
    env.claim(name);
    std::string tail;
    if (first_word(rest, tail) != "in") throw parse_error("scan: expected 'in RING'");
    std::string rname = first_word(tail, rest);
    ScanDecl decl;
    decl.ctx.R = env.ring(rname);
    std::string block = trim(rest);
    if (block.size() < 2 || block.front() != '{' || block.back() != '}')
        throw parse_error("scan: expected '{ ... }'");
    for (auto& piece : split_depth0(block.substr(1, block.size() - 2), ';')) {
        std::string p = trim(piece);
        if (p.empty()) continue;
        size_t eq = p.find('=');
        if (eq == std::string::npos) throw parse_error("scan: expected 'key = value'");
        std::string key = trim(p.substr(0, eq));
        std::string val = trim(p.substr(eq + 1));
        if (key == "xs")
            decl.ctx.x_list = parse_poly_list(strip_brackets(val), decl.ctx.R.ctx());
        else if (key == "q")
            decl.q = parse_long(val);
        else if (key == "wn" || key == "bad") {
            auto& dst = key == "wn" ? decl.ctx.wn_spots : decl.ctx.bad_primes;
            for (auto& ref : split_depth0(strip_brackets(val), ',')) {
                std::string r = trim(ref);
                if (!r.empty()) dst.push_back(env.spot(r));
            }
        } else
            throw parse_error("scan: unknown key " + key);
    }
    if (decl.ctx.x_list.empty()) throw parse_error("scan: xs is required");
    env.scans.emplace(name, std::move(decl));
}

void declare_relpres(Env& env, const std::string& body) {
    std::string rest;
    std::string name = first_word(body, rest);
    if (rest.empty() || rest[0] != '=') throw parse_error("relpres: expected '='");
    RingMap& phi = env.map(name);
    auto rels = parse_poly_list(strip_parens(trim(rest.substr(1))), phi.combined_ctx());
    phi.set_relative_presentation(rels);
}

nlohmann::json basis_json(const GroebnerBasis& G) {
    nlohmann::json a = nlohmann::json::array();
    for (auto& g : G.basis) a.push_back(g.str());
    return a;
}

struct CommandOutcome {
    std::string verdict;
    nlohmann::json data = nlohmann::json::object();
    bool failed = false; // exit-code-1 level failure
};

CommandOutcome run_command(Env& env, const std::string& word, const std::string& rest) {
    CommandOutcome out;
    std::vector<std::string> args;
    for (auto& a : split_depth0(rest, ',')) args.push_back(trim(a));
    if (!args.empty() && args.back().empty()) args.pop_back();
    auto need = [&](size_t lo, size_t hi) {
        if (args.size() < lo || args.size() > hi)
            throw parse_error(word + ": wrong number of arguments");
    };

    if (word == "gb") {
        need(1, 1);
        GroebnerBasis G = buchberger(env.ideal(args[0]));
        out.verdict = "ok";
        out.data["basis"] = basis_json(G);
        out.data["strong"] = G.strong_flag;
    } else if (word == "member" || word == "radmember") {
        need(2, 2);
        Ideal& I = env.ideal(args[0]);
        Poly f = parse_poly(args[1], I.ctx);
        bool in = word == "member" ? ideal_member(f, I) : radical_member(f, I);
        out.verdict = in ? "true" : "false";
    } else if (word == "satpow") {
        need(3, 3);
        PrimeSpot& P = env.spot(args[0]);
        unsigned n = static_cast<unsigned>(parse_long(args[1]));
        Poly f = parse_poly(args[2], P.ring.ctx());
        SymbolicPowerResult sp = symbolic_power(P, n);
        bool in = ideal_member(f, sp.ideal);
        out.verdict = in ? "true" : "false";
        out.data["symbolic_power"] = basis_json(buchberger(sp.ideal));
    } else if (word == "swan") {
        need(3, 3);
        FPRing& R = env.ring(args[0]);
        Certificate c = swan_check(R, parse_poly(args[1], R.ctx()),
                                   parse_poly(args[2], R.ctx()));
        if (!verify_certificate(c, R)) throw wn_error("certificate failed re-verification");
        out.verdict = cert_kind_name(c.kind);
        out.data["certificate"] = c.to_json();
    } else if (word == "yanagihara") {
        need(6, 6);
        FPRing& R = env.ring(args[0]);
        Certificate c = yanagihara_check(
            R, parse_long(args[1]), parse_poly(args[2], R.ctx()),
            parse_poly(args[3], R.ctx()), parse_poly(args[4], R.ctx()),
            parse_poly(args[5], R.ctx()));
        if (!verify_certificate(c, R)) throw wn_error("certificate failed re-verification");
        out.verdict = cert_kind_name(c.kind);
        out.data["certificate"] = c.to_json();
    } else if (word == "manaresi") {
        need(2, 2);
        RingMap& phi = env.map(args[0]);
        Certificate c = manaresi_witness(phi, parse_poly(args[1], phi.target().ctx()));
        out.verdict = cert_kind_name(c.kind);
        out.data["certificate"] = c.to_json();
    } else if (word == "equalizer") {
        need(2, 2);
        RingMap& phi = env.map(args[0]);
        unsigned D = static_cast<unsigned>(parse_long(args[1]));
        Certificate c = equalizer_probe(phi, default_probe_set(phi.target().ctx(), D));
        out.verdict = cert_kind_name(c.kind);
        out.data["certificate"] = c.to_json();
    } else if (word == "search") {
        need(4, 5);
        RingMap& phi = env.map(args[0]);
        SearchMode mode;
        if (args[1] == "swan")
            mode = SearchMode::Swan;
        else if (args[1] == "yanagihara")
            mode = SearchMode::Yanagihara;
        else if (args[1] == "both")
            mode = SearchMode::Both;
        else
            throw parse_error("search: mode must be swan|yanagihara|both");
        unsigned D = static_cast<unsigned>(parse_long(args[2]));
        unsigned H = static_cast<unsigned>(parse_long(args[3]));
        mpz_class p = args.size() > 4 ? mpz_class(parse_long(args[4])) : mpz_class(2);
        auto certs = bounded_violation_search(phi, D, H, mode, p);
        out.verdict = certs.empty() ? "empty" : std::to_string(certs.size()) + " violations";
        nlohmann::json a = nlohmann::json::array();
        for (auto& c : certs) a.push_back(c.to_json());
        out.data["certificates"] = a;
    } else if (word == "build") {
        need(1, 2);
        PullbackDecl& d = env.pullback(args[0]);
        unsigned probe = args.size() > 1 ? static_cast<unsigned>(parse_long(args[1])) : 3;
        d.built = fiber_product(d.spec, d.extra_gens, probe);
        out.verdict = "ok";
        nlohmann::json gens = nlohmann::json::array();
        for (auto& g : d.built->generators) gens.push_back(g.str());
        out.data["generators"] = gens;
        out.data["presentation"] = basis_json(d.built->Rprime.gb());
        out.data["asserted"] = {"local", "mixed-characteristic"};
    } else if (word == "gpi") {
        need(1, 1);
        GpiResult g = gpi_check(env.pullback(args[0]).spec);
        out.verdict = g.ok ? "true" : "indeterminate";
        nlohmann::json tab = nlohmann::json::object();
        for (size_t i = 0; i < g.var_names.size(); ++i)
            tab[g.var_names[i]] = g.exponent[i];
        out.data["exponents"] = tab;
    } else if (word == "certify") {
        need(1, 3);
        PullbackDecl& d = env.pullback(args[0]);
        if (!d.built) throw precondition_failed("certify: run 'build' first");
        unsigned D = args.size() > 1 ? static_cast<unsigned>(parse_long(args[1])) : 3;
        unsigned e = args.size() > 2 ? static_cast<unsigned>(parse_long(args[2])) : 3;
        auto c = certify_not_wn(*d.built, d.spec.p, D, e);
        if (c) {
            out.verdict = cert_kind_name(c->kind);
            out.data["certificate"] = c->to_json();
        } else
            out.verdict = "indeterminate";
    } else if (word == "conductor") {
        need(2, 3);
        RingMap& phi = env.map(args[0]);
        auto mgens = parse_poly_list(strip_parens(args[1]), phi.target().ctx());
        unsigned D = args.size() > 2 ? static_cast<unsigned>(parse_long(args[2])) : 2;
        ConductorResult c = conductor(phi, mgens, D);
        out.verdict = c.exact ? "exact" : "within-bounds";
        out.data["conductor"] = basis_json(buchberger(c.ideal));
    } else if (word == "unramified") {
        need(2, 2);
        bool u = unramified_at(env.map(args[0]), env.spot(args[1]));
        out.verdict = u ? "true" : "false";
    } else if (word == "run") {
        need(1, 1);
        ScanDecl& s = env.scan(args[0]);
        ScanReport rep = bertini_scan(s.ctx, s.q);
        out.verdict = std::to_string(rep.good_count) + "/" + std::to_string(rep.total) +
                      " good";
        out.data["q"] = rep.q.get_str();
        out.data["total"] = rep.total;
        out.data["good_count"] = rep.good_count;
        nlohmann::json vs = nlohmann::json::array();
        for (auto& v : rep.verdicts) {
            nlohmann::json jv;
            jv["point"] = v.alpha.str();
            jv["good"] = v.good;
            if (!v.reason.empty()) jv["reason"] = v.reason;
            vs.push_back(jv);
        }
        out.data["verdicts"] = vs;
    } else
        throw parse_error("unknown command: " + word);
    return out;
}

} // namespace

SessionResult run_session(const std::string& source, bool verbose) {
    SessionResult res;
    res.report["schema"] = 1;
    res.report["tool"] = tool_version();
    res.report["input_digest"] = digest_hex(source);
    nlohmann::json entries = nlohmann::json::array();
    std::ostringstream text;
    Env env;
    bool any_failed = false;

    std::string cleaned = strip_comments(source);
    try {
        for (auto& stmt_raw : split_depth0(cleaned, ';')) {
            std::string stmt = trim(stmt_raw);
            if (stmt.empty()) continue;
            std::string rest;
            std::string word = first_word(stmt, rest);
            if (is_decl_keyword(word)) {
                if (word == "ring")
                    declare_ring(env, rest);
                else if (word == "ideal")
                    declare_ideal(env, rest);
                else if (word == "map")
                    declare_map(env, rest);
                else if (word == "primespot")
                    declare_primespot(env, rest);
                else if (word == "pullback")
                    declare_pullback(env, rest);
                else if (word == "scan")
                    declare_scan(env, rest);
                else
                    declare_relpres(env, rest);
                if (verbose) text << "declared: " << stmt << "\n";
                continue;
            }
            auto t0 = std::chrono::steady_clock::now();
            CommandOutcome out = run_command(env, word, rest);
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            nlohmann::json e;
            e["command"] = stmt;
            e["verdict"] = out.verdict;
            if (!out.data.empty()) e["data"] = out.data;
            entries.push_back(e);
            text << stmt << "\n  verdict: " << out.verdict << "  (" << ms << " ms)\n";
            if (verbose && !out.data.empty()) text << "  " << out.data.dump() << "\n";
            if (out.failed) any_failed = true;
        }
    } catch (const parse_error& err) {
        res.exit_code = 2;
        text << "parse error: " << err.what() << "\n";
        res.report["error"] = err.what();
        res.report["entries"] = entries;
        res.text = text.str();
        return res;
    } catch (const wn_error& err) {
        res.exit_code = 1;
        text << "error: " << err.what() << "\n";
        res.report["error"] = err.what();
        res.report["entries"] = entries;
        res.text = text.str();
        return res;
    } catch (const std::exception& err) {
        res.exit_code = 3;
        text << "internal error: " << err.what() << "\n";
        res.report["error"] = err.what();
        res.report["entries"] = entries;
        res.text = text.str();
        return res;
    }
    res.report["entries"] = entries;
    res.exit_code = any_failed ? 1 : 0;
    res.text = text.str();
    return res;
}

} // namespace wn
