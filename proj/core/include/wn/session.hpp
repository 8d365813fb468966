#pragma once

#include "wn/bertini.hpp"
#include "wn/parse.hpp"
#include "wn/pullback.hpp"

namespace wn {

std::string tool_version();

/// FNV-1a 64-bit digest of raw bytes, hex-encoded.
uint64_t fnv1a64(const std::string& bytes);
std::string digest_hex(const std::string& bytes);

/// Outcome of a batch session: a human transcript (includes timing), a
/// deterministic JSON report (schema 1, no timing) and the process exit
/// code: 0 ok, 1 verification/precondition failure, 2 parse error,
/// 3 internal invariant breach.
struct SessionResult {
    int exit_code = 0;
    std::string text;
    nlohmann::json report;
};

/// Execute the line-oriented session grammar:
///   ring A = ZZ[X,Y] / (Y^2 - 4*X) order grevlex;
///   ideal J in A = (2, Y);
///   map f : A -> S { X -> T^2, Y -> 2*T };
///   primespot P in A = (2, Y) sat (X + 1);
///   pullback PB = { R = S; I = (2); B = (T^2); p = 2; gens = (2*T); };
///   scan SC in R { xs = [2, x]; q = 2; wn = [P]; bad = []; };
/// followed by commands:
///   gb J;  member J, Y;  radmember J, Y;  satpow P, 2, X;
///   swan A, b, c;  yanagihara A, p, b, c, d, e;  manaresi f, s;
///   equalizer f, D;  search f, swan|yanagihara|both, D, H [, p];
///   build PB [, probe_degree];  gpi PB;  certify PB [, D [, e]];
///   conductor f, (m1, ...) [, D];  unramified f, P;  run SC;
/// '#' starts a comment; statements end with ';'.
SessionResult run_session(const std::string& source, bool verbose = false);

} // namespace wn
