#pragma once

#include "json.hpp"
#include "wn/fpring.hpp"

namespace wn {

enum class CertKind {
    SwanWitness,        // a with a^2 = b, a^3 = c
    SwanViolation,      // pair (b,c), b^3 = c^2, no witness
    YanagiharaWitness,  // a with a^p = b, p*a = e
    YanagiharaViolation,// (p, b, c, d, e) with no witness
    ManaresiWitness,    // s with f(s)-g(s) nilpotent and s outside the subring
    NotAWitness,        // manaresi probe negative
    EqualizerPass       // probe set exhausted with no violation
};

const char* cert_kind_name(CertKind k);

/// Machine-checkable evidence; payload entries are ring elements keyed by
/// role name ("a", "b", "c", "d", "e", "s"). Certificates record which
/// user assertions (domain, normalization, ...) they depend on.
struct Certificate {
    CertKind kind;
    std::map<std::string, Poly> elems;
    mpz_class prime = 0;            // Yanagihara / search certificates
    std::vector<Poly> probe_set;    // EqualizerPass
    std::vector<std::string> assertions;
    std::string note;               // e.g. NotAWitness reason

    nlohmann::json to_json() const;
};

} // namespace wn
