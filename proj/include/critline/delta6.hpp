#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "critline/special.hpp"

namespace critline {

struct EvaluationResult {
    cplx value;
    double modulus;
    double phase;       // principal, (-pi, pi]
    int quadrant;       // Re>=0,Im>=0 -> 1, then counterclockwise
    bool near_singularity;
};

inline int quadrant_of(cplx v) {
    if (v.real() >= 0.0) return v.imag() >= 0.0 ? 1 : 4;
    return v.imag() >= 0.0 ? 2 : 3;
}

inline EvaluationResult make_evaluation_result(cplx value, bool near) {
    double ph = std::arg(value);
    if (ph == -kPi) ph = kPi;
    return {value, std::abs(value), ph, quadrant_of(value), near};
}

// distance between angles a and b modulo pi
inline double mod_pi_distance(double a, double b) {
    double m = std::fmod(a - b + kPi / 2.0, kPi);
    if (m < 0.0) m += kPi;
    return std::abs(m - kPi / 2.0);
}

namespace detail {

inline cplx log1p_c(cplx w) {
    if (std::abs(w) < 1e-4)
        return w * (1.0 - w * (0.5 - w * (1.0 / 3.0 - w * 0.25)));
    return std::log(1.0 + w);
}

// log(e^{w1} + e^{w2}) without overflow/underflow
inline cplx logsumexp(cplx w1, cplx w2) {
    if (w2.real() > w1.real()) std::swap(w1, w2);
    return w1 + log1p_c(std::exp(w2 - w1));
}

}  // namespace detail

// log of sqrt(pi) Gamma(s-1/2) / Gamma(s)
inline cplx a_exponent(cplx s) {
    return 0.5 * kLnPi + log_gamma(s - 0.5) - log_gamma(s);
}

// A(s) = 1 / (1 + sqrt(pi) Gamma(s-1/2)/Gamma(s))
inline cplx a_func(cplx s) {
    cplx L = a_exponent(s);
    if (L.real() > 700.0) return 0.0;
    if (L.real() < -700.0) return 1.0;
    cplx q = std::exp(L);
    cplx den = 1.0 + q;
    if (std::abs(den) < 1e-13 * (1.0 + std::abs(q)))
        throw DivisionError("a_func: denominator 1 + sqrt(pi)Gamma(s-1/2)/Gamma(s) vanishes");
    return 1.0 / den;
}

// T_D(s) = sqrt(pi/(s-1/2)) (1 + x/8 + x^2/128 - 5x^3/1024), x = 1/(s-1/2)
inline cplx t_d(cplx s) {
    cplx x = 1.0 / (s - 0.5);
    if (std::abs(s - 0.5) < 2.0)
        throw DomainError("t_d: requires |s - 1/2| >= 2");
    return std::sqrt(kPi * x) * (1.0 + x / 8.0 + x * x / 128.0 - 5.0 * x * x * x / 1024.0);
}

inline cplx a_asymptotic(cplx s) {
    return 1.0 / (1.0 + t_d(s));
}

// xi1(s) = Gamma(s/2) zeta(s) / pi^{s/2}
inline cplx xi1(cplx s, const PrecisionConfig& cfg = default_precision()) {
    if (std::abs(s) < 1e-12 || std::abs(s - 1.0) < 1e-12)
        throw PoleError("xi1: pole at s in {0, 1}");
    return std::exp(log_gamma(s / 2.0) - (s / 2.0) * kLnPi) * zeta(s, cfg);
}

// T_plus(s) = xi1(2s) + xi1(2s-1); underflows to 0 for t beyond ~450
inline cplx t_plus(cplx s, const PrecisionConfig& cfg = default_precision()) {
    double d = std::min({std::abs(s), std::abs(s - 0.5), std::abs(s - 1.0)});
    if (d <= 1e-6)
        throw NearPoleError("t_plus: within exclusion radius of {0, 1/2, 1}");
    return xi1(2.0 * s, cfg) + xi1(2.0 * s - 1.0, cfg);
}

// log D(s); D(s) = [pi^{-1/4} Gamma(s) + pi^{1/4} Gamma(s-1/2)] / Gamma(s-1/4)
inline cplx log_d(cplx s) {
    return -0.25 * kLnPi + log_gamma(s) - log_gamma(s - 0.25) +
           detail::log1p_c(std::exp(a_exponent(s)));
}

inline cplx d_func(cplx s) {
    return std::exp(log_d(s));
}

// F6(s) = D(s)/D(1-s)
inline cplx f6(cplx s) {
    return std::exp(log_d(s) - log_d(1.0 - s));
}

// Gamma-ratio rewrite of F6, kept as a switchable cross-check; unsuitable at
// large |t| where the individual Gamma ratios drift apart in scale.
inline cplx f6_gamma_ratio_check(cplx s) {
    cplx lg = log_gamma(s) + log_gamma(0.75 - s) - log_gamma(1.0 - s) -
              log_gamma(s - 0.25);
    return std::exp(lg) * a_func(1.0 - s) / a_func(s);
}

namespace detail {

struct Delta6Pieces {
    cplx a;      // A(s)
    cplx z2s;    // zeta(2s)
    cplx z2sm1;  // zeta(2s-1)
    cplx zden;   // zeta(2s-1/2)
    cplx num;    // A zeta(2s) + (1-A) zeta(2s-1)
    cplx value;
};

inline Delta6Pieces delta6_pieces(cplx s, const PrecisionConfig& cfg) {
    Delta6Pieces p;
    p.a = a_func(s);
    p.z2s = zeta(2.0 * s, cfg);
    p.z2sm1 = zeta(2.0 * s - 1.0, cfg);
    p.zden = zeta(2.0 * s - 0.5, cfg);
    p.num = p.a * p.z2s + (1.0 - p.a) * p.z2sm1;
    p.value = p.num / p.zden;
    return p;
}

}  // namespace detail

// Plain Delta6 value via the zeta form; no exclusion-disk policy applied.
inline cplx delta6_value(cplx s, const PrecisionConfig& cfg = default_precision()) {
    return detail::delta6_pieces(s, cfg).value;
}

struct LocalExpansion {
    cplx center;
    int order;
    std::vector<cplx> coefficients;

    cplx eval(cplx s) const {
        cplx ds = s - center, out = 0.0, p = 1.0;
        for (const cplx& c : coefficients) {
            out += c * p;
            p *= ds;
        }
        return out;
    }
};

// First-order expansions at the two on-axis zeros; radius of validity 0.05.
inline LocalExpansion local_expansion(cplx center) {
    if (std::abs(center - cplx(0.5, 0.0)) < 1e-12) {
        cplx slope = (3.0 * kEulerGamma + digamma(cplx(0.5, 0.0)) -
                      2.0 * std::log(2.0 * kPi)) /
                     (2.0 * zeta(cplx(0.5, 0.0)));
        return {cplx(0.5, 0.0), 1, {0.0, slope}};
    }
    if (std::abs(center - cplx(0.75, 0.0)) < 1e-12) {
        cplx g14 = std::exp(log_gamma(cplx(0.25, 0.0)));
        cplx g34 = std::exp(log_gamma(cplx(0.75, 0.0)));
        cplx slope = 2.0 * (kSqrtPi * g14 * zeta(cplx(0.5, 0.0)) +
                            g34 * zeta(cplx(1.5, 0.0))) /
                     (kSqrtPi * g14 + g34);
        return {cplx(0.75, 0.0), 1, {0.0, slope}};
    }
    throw DomainError("local_expansion: supported centers are 1/2 and 3/4");
}

// Full evaluation with the singularity policy: hard exclusion disks of radius
// 1e-6 at {0, 1/4, 1} and at denominator zeros, local expansions inside the
// disks at {1/2, 3/4}, heuristic near_singularity flag within ~1e-3 of any
// zero or pole of numerator or denominator.
inline EvaluationResult delta6(cplx s, const PrecisionConfig& cfg = default_precision()) {
    if (!is_finite(s)) throw DomainError("delta6: non-finite argument");
    if (std::abs(s - cplx(1.0, 0.0)) <= 1e-6) throw NearPoleError("delta6: pole at s=1");
    if (std::abs(s) <= 1e-6)
        throw NearPoleError("delta6: unresolvable Gamma/zeta structure at s=0");
    if (std::abs(s - cplx(0.25, 0.0)) <= 1e-6)
        throw NearPoleError("delta6: unresolvable Gamma structure at s=1/4");
    for (double c : {0.5, 0.75}) {
        if (std::abs(s - cplx(c, 0.0)) <= 1e-6)
            return make_evaluation_result(local_expansion(cplx(c, 0.0)).eval(s), true);
    }
    detail::Delta6Pieces p = detail::delta6_pieces(s, cfg);
    if (std::abs(p.zden) < 1e-6)
        throw NearPoleError("delta6: on a zero of the denominator zeta(2s-1/2)");
    double num_scale = std::abs(p.a * p.z2s) + std::abs((1.0 - p.a) * p.z2sm1) + 1e-300;
    double m = std::abs(p.value);
    bool near = std::abs(p.num) / num_scale < 5e-3 || std::abs(p.zden) < 5e-3 ||
                !is_finite(p.value) || m > 1e3 || m < 1e-3;
    return make_evaluation_result(p.value, near);
}

// Max relative disagreement of the xi1-based forms against the zeta form,
// assembled in log space so it stays finite at any t.
inline double delta6_forms_residual(cplx s, const PrecisionConfig& cfg = default_precision()) {
    auto log_xi1 = [&](cplx z) {
        return log_gamma(z / 2.0) - (z / 2.0) * kLnPi + std::log(zeta(z, cfg));
    };
    cplx log_num = detail::logsumexp(log_xi1(2.0 * s), log_xi1(2.0 * s - 1.0));
    cplx log_den22 = std::log(zeta(2.0 * s - 0.5, cfg)) + log_gamma(s) - s * kLnPi +
                     detail::log1p_c(std::exp(a_exponent(s)));
    cplx log_den23 = log_xi1(2.0 * s - 0.5) + log_d(s);
    cplx log_zform = std::log(delta6_value(s, cfg));
    double r22 = std::abs(std::exp(log_num - log_den22 - log_zform) - 1.0);
    double r23 = std::abs(std::exp(log_num - log_den23 - log_zform) - 1.0);
    return std::max(r22, r23);
}

// Eq-2.20-style asymptotic form of F6, regularized through w = e^{2 pi i s}.
inline cplx f6_asymptotic(cplx s) {
    if (std::abs(s) < 4.0 || std::abs(s.imag()) < 1.0)
        throw DomainError("f6_asymptotic: requires |s| >= 4 and |Im s| >= 1");
    if (s.imag() < 0.0) return std::conj(f6_asymptotic(std::conj(s)));
    cplx w = std::exp(cplx(0.0, 2.0 * kPi) * s);
    cplx tanpis = cplx(0.0, -1.0) * (w - 1.0) / (w + 1.0);
    cplx cotpis = cplx(0.0, 1.0) * (w + 1.0) / (w - 1.0);
    cplx x = 1.0 / s;
    cplx poly = 1.0 - x / 16.0 - 15.0 * x * x / 512.0 - 75.0 * x * x * x / 8192.0;
    return std::sqrt(2.0) / (1.0 + cotpis) * poly * (1.0 + t_d(s)) /
           (1.0 + tanpis * t_d(s + 0.5));
}

// Critical-line phase approximation -pi/8 + r/(1+r), r = sqrt(pi/(2t)), mod pi.
inline double critical_phase_approx(double t) {
    if (t < 10.0) throw DomainError("critical_phase_approx: requires t >= 10");
    double r = std::sqrt(kPi / (2.0 * t));
    return -kPi / 8.0 + r / (1.0 + r);
}

// Truncated Dirichlet-type expansion of Delta6 for sigma >= 2, up to 3 terms.
inline cplx delta6_leading(cplx s, int terms) {
    if (s.real() < 2.0) throw DomainError("delta6_leading: requires sigma >= 2");
    if (terms < 0 || terms > 3) throw DomainError("delta6_leading: terms must be 0..3");
    cplx out = 1.0;
    if (terms == 0) return out;
    cplx r = std::sqrt(kPi / (s - 0.5));
    if (terms >= 1) out += std::exp(-2.0 * s * kLn2) * (1.0 - std::sqrt(2.0) + r);
    if (terms >= 2) out += std::exp(-2.0 * s * std::log(3.0)) * (1.0 - std::sqrt(3.0) + 2.0 * r);
    if (terms >= 3) out += std::exp(-2.0 * s * kLn4) * (-1.0 + 3.0 * r);
    return out;
}

}
