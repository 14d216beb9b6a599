// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON forms used by the command-line tool:
//   TrigPolynomial      {"a0": ..., "a": [...], "b": [...]}
//   multiplier file     {"lambda": [...], "mu": [...]}
//   ErrorResult         {"value": v, "truncation_bound": b, "terms_used": t, "params": {...}}
//   VerificationReport  {"theoretical": ..., "achieved": ..., "mc_max": ..., "delta": ..., "pass": bool}

#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "trigerr/error.hpp"
#include "trigerr/exact_errors.hpp"
#include "trigerr/linear_methods.hpp"
#include "trigerr/oracle.hpp"
#include "trigerr/trig_polynomial.hpp"

namespace trigerr {

inline void to_json(nlohmann::json& j, const TrigPolynomial& p) {
    j = nlohmann::json{{"a0", p.a0()},
                       {"a", std::vector<double>(p.cos_coeffs().begin(), p.cos_coeffs().end())},
                       {"b", std::vector<double>(p.sin_coeffs().begin(), p.sin_coeffs().end())}};
}

inline void from_json(const nlohmann::json& j, TrigPolynomial& p) {
    p = TrigPolynomial(j.at("a0").get<double>(), j.at("a").get<std::vector<double>>(),
                       j.at("b").get<std::vector<double>>());
}

inline void to_json(nlohmann::json& j, const ErrorResult& r) {
    j = nlohmann::json{
        {"value", r.value}, {"truncation_bound", r.truncation_bound}, {"terms_used", r.terms_used}};
}

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
    j = nlohmann::json{{"theoretical", r.theoretical},
                       {"achieved", r.achieved},
                       {"mc_max", r.mc_max ? nlohmann::json(*r.mc_max) : nlohmann::json(nullptr)},
                       {"delta", r.delta},
                       {"pass", r.pass}};
}

inline void to_json(nlohmann::json& j, const AlphaSequenceReport& r) {
    j = nlohmann::json{{"checked_up_to", r.checked_up_to},
                       {"is_convex_on_prefix", r.is_convex_on_prefix},
                       {"first_violation", r.first_violation ? nlohmann::json(*r.first_violation)
                                                             : nlohmann::json(nullptr)},
                       {"nonincreasing_at_end", r.nonincreasing_at_end}};
}

/// Reads {"lambda": [...], "mu": [...]} and validates it as a row of order n.
inline MultiplierSet multipliers_from_json(const nlohmann::json& j, int n) {
    if (!j.is_object() || !j.contains("lambda") || !j.contains("mu")) {
        throw ValidationError("multiplier JSON needs \"lambda\" and \"mu\" arrays");
    }
    try {
        return validate_multipliers(j.at("lambda").get<std::vector<double>>(),
                                    j.at("mu").get<std::vector<double>>(), n);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed multiplier JSON: ") + e.what());
    }
}

inline MultiplierSet multipliers_from_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open multiplier file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("cannot parse multiplier file '" + path + "': " + e.what());
    }
    return multipliers_from_json(j, n);
}

}  // namespace trigerr
