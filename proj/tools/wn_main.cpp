// wn: batch front-end for the seminormality / weak-normality toolkit.
// `wn run session.wn` executes a session file; the subcommands are one-shot
// bindings that synthesize a tiny session from flags and run it.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wn/session.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw wn::parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int execute(const std::string& source, const std::string& json_path, bool verbose) {
    wn::SessionResult res = wn::run_session(source, verbose);
    std::cout << res.text;
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        out << res.report.dump(2) << "\n";
    }
    return res.exit_code;
}

// quote-free flag plumbing: every subcommand assembles a session and runs it
struct OneShot {
    std::string json_path;
    bool verbose = false;

    void add_common(CLI::App* app) {
        app->add_option("--json", json_path, "write the JSON report here");
        app->add_flag("--verbose", verbose, "echo declarations and data");
    }
    int run(const std::string& session) {
        if (verbose) std::cout << "session:\n" << session << "\n";
        return execute(session, json_path, verbose);
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"seminormality and weak-normality toolkit"};
    app.require_subcommand(1);

    std::string path;
    OneShot run_flags;
    auto* cmd_run = app.add_subcommand("run", "execute a session file");
    cmd_run->add_option("file", path, "session file")->required();
    run_flags.add_common(cmd_run);

    std::string ring, ideal, elem, prime, sat, b, c, d, e, source, target, images,
        relpres, I, B, gens, session_path;
    long n = 2, p = 2;
    unsigned degree = 3;

    OneShot gb_flags;
    auto* cmd_gb = app.add_subcommand("gb", "Groebner basis of an ideal");
    cmd_gb->add_option("--ring", ring)->required();
    cmd_gb->add_option("--ideal", ideal)->required();
    gb_flags.add_common(cmd_gb);

    OneShot mem_flags;
    auto* cmd_member = app.add_subcommand("member", "ideal membership");
    cmd_member->add_option("--ring", ring)->required();
    cmd_member->add_option("--ideal", ideal)->required();
    cmd_member->add_option("--elem", elem)->required();
    mem_flags.add_common(cmd_member);

    OneShot rad_flags;
    auto* cmd_rad = app.add_subcommand("radmember", "radical membership");
    cmd_rad->add_option("--ring", ring)->required();
    cmd_rad->add_option("--ideal", ideal)->required();
    cmd_rad->add_option("--elem", elem)->required();
    rad_flags.add_common(cmd_rad);

    OneShot sat_flags;
    auto* cmd_sat = app.add_subcommand("satpow", "symbolic power membership");
    cmd_sat->add_option("--ring", ring)->required();
    cmd_sat->add_option("--prime", prime)->required();
    cmd_sat->add_option("--sat", sat)->required();
    cmd_sat->add_option("--n", n);
    cmd_sat->add_option("--elem", elem)->required();
    sat_flags.add_common(cmd_sat);

    OneShot swan_flags;
    auto* cmd_swan = app.add_subcommand("swan", "Swan pair check b^3 = c^2");
    cmd_swan->add_option("--ring", ring)->required();
    cmd_swan->add_option("--b", b)->required();
    cmd_swan->add_option("--c", c)->required();
    swan_flags.add_common(cmd_swan);

    OneShot yan_flags;
    auto* cmd_yan = app.add_subcommand("yanagihara", "p-power condition check");
    cmd_yan->add_option("--ring", ring)->required();
    cmd_yan->add_option("--p", p);
    cmd_yan->add_option("--b", b)->required();
    cmd_yan->add_option("--c", c)->required();
    cmd_yan->add_option("--d", d)->required();
    cmd_yan->add_option("--e", e)->required();
    yan_flags.add_common(cmd_yan);

    OneShot man_flags;
    auto* cmd_man = app.add_subcommand("manaresi", "tensor-square witness check");
    cmd_man->add_option("--source", source)->required();
    cmd_man->add_option("--target", target)->required();
    cmd_man->add_option("--images", images, "var -> image, ...")->required();
    cmd_man->add_option("--elem", elem)->required();
    man_flags.add_common(cmd_man);

    OneShot pb_flags;
    auto* cmd_pb = app.add_subcommand("pullback", "fiber product construction");
    cmd_pb->add_option("--ring", ring)->required();
    cmd_pb->add_option("--I", I)->required();
    cmd_pb->add_option("--B", B)->required();
    cmd_pb->add_option("--p", p);
    cmd_pb->add_option("--gens", gens, "extra generators");
    cmd_pb->add_option("--degree", degree, "certify search bound");
    pb_flags.add_common(cmd_pb);

    OneShot cond_flags;
    auto* cmd_cond = app.add_subcommand("conductor", "conductor of a module-finite map");
    cmd_cond->add_option("--source", source)->required();
    cmd_cond->add_option("--target", target)->required();
    cmd_cond->add_option("--images", images)->required();
    cmd_cond->add_option("--gens", gens, "module generators over the image")->required();
    cmd_cond->add_option("--degree", degree);
    cond_flags.add_common(cmd_cond);

    OneShot unram_flags;
    auto* cmd_unram = app.add_subcommand("unramified", "unramifiedness at a prime");
    cmd_unram->add_option("--source", source)->required();
    cmd_unram->add_option("--target", target)->required();
    cmd_unram->add_option("--images", images)->required();
    cmd_unram->add_option("--relpres", relpres, "relative presentation")->required();
    cmd_unram->add_option("--prime", prime)->required();
    unram_flags.add_common(cmd_unram);

    OneShot scan_flags;
    auto* cmd_scan = app.add_subcommand("scan", "projective avoidance scan");
    cmd_scan->add_option("--session", session_path, "session file with a scan block")
        ->required();
    scan_flags.add_common(cmd_scan);

    CLI11_PARSE(app, argc, argv);

    try {
        std::ostringstream s;
        if (cmd_run->parsed()) return execute(read_file(path), run_flags.json_path,
                                              run_flags.verbose);
        if (cmd_gb->parsed()) {
            s << "ring R = " << ring << ";\nideal J in R = (" << ideal << ");\ngb J;\n";
            return gb_flags.run(s.str());
        }
        if (cmd_member->parsed() || cmd_rad->parsed()) {
            bool radical = cmd_rad->parsed();
            s << "ring R = " << ring << ";\nideal J in R = (" << ideal << ");\n"
              << (radical ? "radmember" : "member") << " J, " << elem << ";\n";
            return (radical ? rad_flags : mem_flags).run(s.str());
        }
        if (cmd_sat->parsed()) {
            s << "ring R = " << ring << ";\nprimespot P in R = (" << prime << ") sat ("
              << sat << ");\nsatpow P, " << n << ", " << elem << ";\n";
            return sat_flags.run(s.str());
        }
        if (cmd_swan->parsed()) {
            s << "ring R = " << ring << ";\nswan R, " << b << ", " << c << ";\n";
            return swan_flags.run(s.str());
        }
        if (cmd_yan->parsed()) {
            s << "ring R = " << ring << ";\nyanagihara R, " << p << ", " << b << ", "
              << c << ", " << d << ", " << e << ";\n";
            return yan_flags.run(s.str());
        }
        if (cmd_man->parsed()) {
            s << "ring A = " << source << ";\nring S = " << target << ";\n"
              << "map f : A -> S { " << images << " };\nmanaresi f, " << elem << ";\n";
            return man_flags.run(s.str());
        }
        if (cmd_pb->parsed()) {
            s << "ring R = " << ring << ";\npullback PB = { R = R; I = (" << I
              << "); B = (" << B << "); p = " << p;
            if (!gens.empty()) s << "; gens = (" << gens << ")";
            s << "; };\nbuild PB;\ngpi PB;\ncertify PB, " << degree << ";\n";
            return pb_flags.run(s.str());
        }
        if (cmd_cond->parsed()) {
            s << "ring A = " << source << ";\nring S = " << target << ";\n"
              << "map f : A -> S { " << images << " };\nconductor f, (" << gens << "), "
              << degree << ";\n";
            return cond_flags.run(s.str());
        }
        if (cmd_unram->parsed()) {
            s << "ring A = " << source << ";\nring S = " << target << ";\n"
              << "map f : A -> S { " << images << " };\nrelpres f = (" << relpres
              << ");\nprimespot P in A = (" << prime << ");\nunramified f, P;\n";
            return unram_flags.run(s.str());
        }
        if (cmd_scan->parsed())
            return scan_flags.run(read_file(session_path));
    } catch (const wn::parse_error& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
