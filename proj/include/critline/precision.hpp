#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "critline/errors.hpp"

namespace critline {

// Controls the Euler-Maclaurin zeta evaluation. The Dirichlet truncation N is
// chosen per point as max(euler_maclaurin_terms, ceil(n_factor*|Im s|)),
// capped at 1e5 terms.
struct PrecisionConfig {
    int euler_maclaurin_terms = 10;   // floor for N
    int bernoulli_order = 10;         // correction pairs, 1..15
    double target_rel_tol = 1e-10;
    double n_factor = 1.3;

    void validate() const {
        if (euler_maclaurin_terms < 2)
            throw DomainError("euler_maclaurin_terms must be >= 2");
        if (bernoulli_order < 1 || bernoulli_order > 15)
            throw DomainError("bernoulli_order must be in [1, 15]");
        if (!(target_rel_tol > 0.0) || target_rel_tol > 1e-6)
            throw DomainError("target_rel_tol must be in (0, 1e-6]");
    }

    int truncation(double abs_t) const {
        double n = std::ceil(n_factor * abs_t);
        n = std::max(n, static_cast<double>(euler_maclaurin_terms));
        return static_cast<int>(std::min(n, 1e5));
    }

    static PrecisionConfig fast() { return {10, 6, 1e-8, 1.0}; }
    static PrecisionConfig defaults() { return {}; }
    static PrecisionConfig strict() { return {10, 14, 1e-11, 2.0}; }

    static PrecisionConfig profile(const std::string& name) {
        if (name == "fast") return fast();
        if (name == "default" || name.empty()) return defaults();
        if (name == "strict") return strict();
        throw DomainError("unknown precision profile: " + name);
    }

    // Reads CRITLINE_PRECISION_PROFILE; empty or unset means default.
    static PrecisionConfig from_env() {
        const char* p = std::getenv("CRITLINE_PRECISION_PROFILE");
        return profile(p ? std::string(p) : std::string());
    }
};

inline const PrecisionConfig& default_precision() {
    static const PrecisionConfig cfg = PrecisionConfig::from_env();
    return cfg;
}

}
