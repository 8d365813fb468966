#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "wn/session.hpp"

using namespace wn;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace

TEST_CASE("empty session succeeds with an empty report") {
    SessionResult r = run_session("");
    CHECK(r.exit_code == 0);
    CHECK(r.report["entries"].empty());
    CHECK(r.report["schema"] == 1);
}

TEST_CASE("membership one-liner") {
    SessionResult r = run_session(
        "ring R = ZZ[X,Y];\nideal J in R = (2, Y^2 - 4*X);\nmember J, Y;\n");
    CHECK(r.exit_code == 0);
    REQUIRE(r.report["entries"].size() == 1);
    CHECK(r.report["entries"][0]["verdict"] == "false");
}

TEST_CASE("parse errors exit with code 2") {
    CHECK(run_session("ring R = ZZ[X,;\n").exit_code == 2);
    CHECK(run_session("frobnicate X;\n").exit_code == 2);
    CHECK(run_session("ring R = ZZ[x];\nring R = ZZ[y];\n").exit_code == 2);
    CHECK(run_session("member J, x;\n").exit_code == 2);
}

TEST_CASE("precondition failures exit with code 1") {
    // swan requires b^3 = c^2
    SessionResult r =
        run_session("ring R = ZZ[t];\nswan R, t, t;\n");
    CHECK(r.exit_code == 1);
    CHECK(r.report.contains("error"));
}

TEST_CASE("comments and whitespace are ignored") {
    SessionResult r = run_session("# a comment\n  ring R = ZZ[x] ;\n\n# done\n");
    CHECK(r.exit_code == 0);
}

TEST_CASE("satpow command matches the library result") {
    SessionResult r = run_session(
        "ring W = QQ[x,y,z] / (x*y - z^2);\n"
        "primespot P in W = (x, z) sat (y);\n"
        "satpow P, 2, x;\n");
    CHECK(r.exit_code == 0);
    CHECK(r.report["entries"][0]["verdict"] == "true");
}

TEST_CASE("reports carry the input digest and omit timing") {
    std::string src = "ring R = ZZ[x];\nideal J in R = (x);\ngb J;\n";
    SessionResult r = run_session(src);
    CHECK(r.report["input_digest"] == digest_hex(src));
    CHECK(r.report.dump().find("ms") == std::string::npos);
    CHECK(r.text.find("ms") != std::string::npos);
}

TEST_CASE("bundled sessions are deterministic across runs and thread counts") {
    const char* names[] = {"example_3_1.wn", "pullback_p2.wn", "pullback_p3.wn",
                           "bertini_p2.wn", "symbolic_power.wn", "example_4_9.wn"};
    for (auto* n : names) {
        std::string src = slurp(std::string(WN_SESSIONS_DIR) + "/" + n);
        setenv("WN_THREADS", "1", 1);
        SessionResult a = run_session(src);
        SessionResult b = run_session(src);
        setenv("WN_THREADS", "8", 1);
        SessionResult c = run_session(src);
        unsetenv("WN_THREADS");
        CHECK(a.exit_code == 0);
        CHECK(a.report.dump(2) == b.report.dump(2));
        CHECK(a.report.dump(2) == c.report.dump(2));
    }
}

TEST_CASE("bundled pullback session reconstructs the quadratic presentation") {
    std::string src = slurp(std::string(WN_SESSIONS_DIR) + "/pullback_p2.wn");
    SessionResult r = run_session(src);
    REQUIRE(r.exit_code == 0);
    auto pres = r.report["entries"][0]["data"]["presentation"];
    REQUIRE(pres.size() == 1);
    CHECK(pres[0] == "X1^2 - 4*X0");
}

TEST_CASE("bundled example session reports the two certificates") {
    std::string src = slurp(std::string(WN_SESSIONS_DIR) + "/example_3_1.wn");
    SessionResult r = run_session(src);
    REQUIRE(r.exit_code == 0);
    CHECK(r.report["entries"][0]["verdict"] == "YanagiharaViolation");
    CHECK(r.report["entries"][1]["verdict"] == "ManaresiWitness");
    CHECK(r.report["entries"][2]["verdict"] == "empty");
}

TEST_CASE("fnv1a64 reference values") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(fnv1a64("a") == 12638187200555641996ULL);
    CHECK(digest_hex("").size() == 16);
}
