#include "wn/certificates.hpp"

namespace wn {

const char* cert_kind_name(CertKind k) {
    switch (k) {
    case CertKind::SwanWitness: return "SwanWitness";
    case CertKind::SwanViolation: return "SwanViolation";
    case CertKind::YanagiharaWitness: return "YanagiharaWitness";
    case CertKind::YanagiharaViolation: return "YanagiharaViolation";
    case CertKind::ManaresiWitness: return "ManaresiWitness";
    case CertKind::NotAWitness: return "NotAWitness";
    case CertKind::EqualizerPass: return "EqualizerPass";
    }
    return "?";
}

nlohmann::json Certificate::to_json() const {
    nlohmann::json j;
    j["kind"] = cert_kind_name(kind);
    nlohmann::json e = nlohmann::json::object();
    for (auto& [name, p] : elems) e[name] = p.str();
    j["elements"] = e;
    if (prime != 0) j["prime"] = prime.get_str();
    if (!probe_set.empty()) {
        nlohmann::json ps = nlohmann::json::array();
        for (auto& p : probe_set) ps.push_back(p.str());
        j["probe_set"] = ps;
    }
    if (!assertions.empty()) j["assertions"] = assertions;
    if (!note.empty()) j["note"] = note;
    return j;
}

} // namespace wn
