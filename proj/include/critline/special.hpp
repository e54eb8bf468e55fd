#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "critline/errors.hpp"
#include "critline/precision.hpp"

namespace critline {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLnPi = 1.14472988584940017414;
inline constexpr double kLn2 = 0.693147180559945309417;
inline constexpr double kSqrtPi = 1.77245385090551602730;
inline constexpr double kLn4 = 1.38629436111989061883;
inline constexpr double kEulerGamma = 0.577215664901532860607;

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

namespace detail {

// B_{2j}/(2j)! for j = 1..16; the 16th backs the tail estimate at order 15.
inline constexpr double kB2jOverFact[16] = {
    8.33333333333333287074e-02,
    -1.38888888888888894189e-03,
    3.30687830687830710131e-05,
    -8.26719576719576754153e-07,
    2.08767569878681001866e-08,
    -5.28419013868749322002e-10,
    1.33825365306846788611e-11,
    -3.38968029632258271696e-13,
    8.58606205627784516939e-15,
    -2.17486869855806192266e-16,
    5.50900282836022953019e-18,
    -1.39544646858125223056e-19,
    3.53470703962946728227e-21,
    -8.95351742703754627753e-23,
    2.26795245233768292988e-24,
    -5.74479066887220246190e-26,
};

// B_{2n}/(2n) for n = 1..12 (digamma Stirling tail).
inline constexpr double kB2nOver2n[12] = {
    8.33333333333333287074e-02,
    -8.33333333333333321769e-03,
    3.96825396825396803369e-03,
    -4.16666666666666660884e-03,
    7.57575757575757596785e-03,
    -2.10927960927960941873e-02,
    8.33333333333333287074e-02,
    -4.43259803921568606988e-01,
    3.05395433027011975469e+00,
    -2.64562121212121219571e+01,
    2.81460144927536248360e+02,
    -3.60751054639804624458e+03,
};

inline bool nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 &&
           z.real() == std::floor(z.real());
}

// Lanczos g = 4.7421875, valid for Re(z) >= 0.5.
inline cplx log_gamma_lanczos(cplx z) {
    static constexpr double kCof[14] = {
        57.1562356658629235, -59.5979603554754912, 14.1360979747417471,
        -0.491913816097620199, 0.339946499848118887e-4,
        0.465236289270485756e-4, -0.983744753048795646e-4,
        0.158088703224912494e-3, -0.210264441724104883e-3,
        0.217439618115212643e-3, -0.164318106536763890e-3,
        0.844182239838527433e-4, -0.261908384015814087e-4,
        0.368991826595316234e-5};
    cplx tmp = z + 5.2421875;
    tmp = (z + 0.5) * std::log(tmp) - tmp;
    cplx ser = 0.999999999999997092;
    for (int j = 0; j < 14; ++j) ser += kCof[j] / (z + static_cast<double>(j + 1));
    return tmp + std::log(2.5066282746310005 * ser / z);
}

// log(k) for k = 1..n, cached.
inline const std::vector<double>& log_table(int n) {
    thread_local std::vector<double> tab;
    if (static_cast<int>(tab.size()) < n) {
        size_t old = tab.size();
        tab.resize(n);
        for (size_t k = old; k < tab.size(); ++k)
            tab[k] = std::log(static_cast<double>(k + 1));
    }
    return tab;
}

}  // namespace detail

// Principal-branch log Gamma. Lanczos for Re(z) >= 0.5, upward recurrence
// log Gamma(z) = log Gamma(z+n) - sum log(z+k) otherwise.
inline cplx log_gamma(cplx z) {
    if (!is_finite(z)) throw DomainError("log_gamma: non-finite argument");
    if (detail::nonpositive_integer(z))
        throw PoleError("log_gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return detail::log_gamma_lanczos(z);
    int n = static_cast<int>(std::ceil(0.5 - z.real()));
    cplx corr = 0.0;
    for (int k = 0; k < n; ++k) corr += std::log(z + static_cast<double>(k));
    return detail::log_gamma_lanczos(z + static_cast<double>(n)) - corr;
}

// psi(z) via recurrence into Re >= 0.5, |z| >= 15, then Stirling.
inline cplx digamma(cplx z) {
    if (!is_finite(z)) throw DomainError("digamma: non-finite argument");
    if (detail::nonpositive_integer(z))
        throw PoleError("digamma: pole at non-positive integer");
    cplx acc = 0.0;
    while (z.real() < 0.5 || std::abs(z) < 15.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    cplx inv = 1.0 / z, inv2 = inv * inv;
    cplx out = std::log(z) - 0.5 * inv;
    cplx p = inv2;
    for (int n = 0; n < 12; ++n) {
        out -= detail::kB2nOver2n[n] * p;
        p *= inv2;
    }
    return out + acc;
}

namespace detail {

// Euler-Maclaurin continuation, reliable for Re(s) >= -3.5.
inline cplx em_zeta_direct(cplx s, const PrecisionConfig& cfg) {
    int N = cfg.truncation(std::abs(s.imag()));
    const std::vector<double>& lk = log_table(N);
    double sigma = s.real(), t = s.imag();
    cplx out = 1.0;
    for (int k = 2; k < N; ++k) {
        double l = lk[k - 1];
        out += std::polar(std::exp(-sigma * l), -t * l);
    }
    double lnN = lk[N - 1];
    cplx Nms = std::polar(std::exp(-sigma * lnN), -t * lnN);
    out += 0.5 * Nms + Nms * static_cast<double>(N) / (s - 1.0);
    cplx A = s * std::polar(std::exp(-(sigma + 1.0) * lnN), -t * lnN);
    double N2 = static_cast<double>(N) * N;
    int M = cfg.bernoulli_order;
    for (int j = 1; j <= M; ++j) {
        out += kB2jOverFact[j - 1] * A;
        A *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j)) / N2;
    }
    // First omitted pair bounds the tail; scale floor 1e-2 keeps refinement
    // near zeta zeros from tripping on relative smallness of the value.
    double tail = std::abs(kB2jOverFact[M]) * std::abs(A);
    if (tail > cfg.target_rel_tol * std::max(std::abs(out), 1e-2))
        throw AccuracyError("zeta: Bernoulli tail estimate exceeds tolerance; raise euler_maclaurin_terms");
    return out;
}

// log(sin z) stable for Im z >= 0.
inline cplx logsin(cplx z) {
    if (z.imag() > 1.0)
        return cplx(0.0, -1.0) * z + cplx(0.0, kPi / 2) - kLn2 +
               std::log(1.0 - std::exp(cplx(0.0, 2.0) * z));
    return std::log(std::sin(z));
}

}  // namespace detail

// zeta(s) by Euler-Maclaurin; functional-equation reflection for Re(s) < -3.5,
// conjugation for Im(s) < 0.
inline cplx zeta(cplx s, const PrecisionConfig& cfg = default_precision()) {
    if (!is_finite(s)) throw DomainError("zeta: non-finite argument");
    if (s == cplx(1.0, 0.0)) throw PoleError("zeta: pole at s=1");
    if (s.imag() < 0.0) return std::conj(zeta(std::conj(s), cfg));
    if (s.real() >= -3.5) return detail::em_zeta_direct(s, cfg);
    cplx logchi = s * kLn2 + (s - 1.0) * kLnPi + detail::logsin(kPi * s / 2.0) +
                  log_gamma(1.0 - s);
    return std::exp(logchi) * detail::em_zeta_direct(1.0 - s, cfg);
}

// Riemann-Siegel theta from log_gamma.
inline double theta_rs(double u) {
    return log_gamma(cplx(0.25, 0.5 * u)).imag() - 0.5 * u * kLnPi;
}

// Z(u) = e^{i theta(u)} zeta(1/2+iu); real up to roundoff, residue asserted.
inline double hardy_Z(double u, const PrecisionConfig& cfg = default_precision()) {
    if (!(u > 0.0)) throw DomainError("hardy_Z: requires u > 0");
    cplx v = std::polar(1.0, theta_rs(u)) * zeta(cplx(0.5, u), cfg);
    if (std::abs(v.imag()) > 1e-8 * std::max(1.0, std::abs(v)))
        throw AccuracyError("hardy_Z: imaginary residue above 1e-8");
    return v.real();
}

}
