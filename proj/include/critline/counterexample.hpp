#pragma once

#include <cmath>
#include <complex>

#include "critline/delta6.hpp"

namespace critline {

enum class ModificationMode { DenominatorOnly, Both };

// quartic modification of delta6: four injected denominator roots placed
// symmetrically off the critical line, optionally compensated by four
// injected numerator roots on it
struct ModificationParams {
    cplx s0;  // off-axis root; orbit closed under s -> 1-s and conjugation
    cplx s1;  // on-axis numerator roots
    cplx s2;
    double delta_sigma0() const { return s0.real() - 0.5; }
    double t0() const { return s0.imag(); }
    double t1() const { return s1.imag(); }
    double t2() const { return s2.imag(); }
};

inline ModificationParams make_modification(cplx s0, cplx s1, cplx s2) {
    if (s1.real() != 0.5 || s2.real() != 0.5)
        throw DomainError("make_modification: s1 and s2 must lie on the critical line");
    if (s0.real() == 0.5)
        throw DomainError("make_modification: s0 must lie off the critical line");
    return {s0, s1, s2};
}

// (s-s0)(s-(1-s0))(s-conj s0)(s-(1-conj s0)); real coefficients, invariant
// under s -> 1-s
inline cplx d6_factor(cplx s, const ModificationParams& p) {
    cplx c = std::conj(p.s0);
    return (s - p.s0) * (s - (1.0 - p.s0)) * (s - c) * (s - (1.0 - c));
}

// monic quartic (s-s1)(s-s2)(s-conj s1)(s-conj s2); with on-axis roots the
// conjugate of each root is its reflection through s -> 1-s
inline cplx n6_factor(cplx s, const ModificationParams& p) {
    return (s - p.s1) * (s - p.s2) * (s - std::conj(p.s1)) * (s - std::conj(p.s2));
}

inline EvaluationResult modified_delta6(cplx s, const ModificationParams& p,
                                        ModificationMode mode,
                                        const PrecisionConfig& cfg = default_precision()) {
    const cplx c0 = std::conj(p.s0);
    const cplx droots[4] = {p.s0, 1.0 - p.s0, c0, 1.0 - c0};
    for (const cplx& r : droots)
        if (std::abs(s - r) < 1e-6)
            throw NearPoleError("modified_delta6: inside exclusion disk of injected root");
    if (mode == ModificationMode::Both) {
        const cplx nroots[4] = {p.s1, p.s2, std::conj(p.s1), std::conj(p.s2)};
        for (const cplx& r : nroots)
            if (std::abs(s - r) < 1e-6)
                throw NearPoleError("modified_delta6: inside exclusion disk of injected root");
    }
    EvaluationResult base = delta6(s, cfg);
    cplx v = base.value / d6_factor(s, p);
    if (mode == ModificationMode::Both) v *= n6_factor(s, p);
    return make_evaluation_result(v, base.near_singularity);
}

namespace detail {

// double-double compensated arithmetic; enough precision to survive the
// near-total cancellation of the two quartics at |s| up to 1e5
struct DD {
    double hi, lo;
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    return two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

inline DD dd_sub(DD a, DD b) { return dd_add(a, dd_neg(b)); }

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    return two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

// both quartics at real s as conjugate-paired real quadratics in u = s - 1/2:
//   n6 = (u^2 + t1^2)(u^2 + t2^2)
//   d6 = (u^2 - 2 ds0 u + ds0^2 + t0^2)(u^2 + 2 ds0 u + ds0^2 + t0^2)
struct QuarticPair {
    DD n, d;
};

inline QuarticPair quartics_on_axis(double s, const ModificationParams& p) {
    double ds0 = p.delta_sigma0(), t0 = p.t0(), t1 = p.t1(), t2 = p.t2();
    double u = s - 0.5;
    DD v = two_prod(u, u);
    DD n = dd_mul(dd_add(v, two_prod(t1, t1)), dd_add(v, two_prod(t2, t2)));
    DD base = dd_add(v, dd_add(two_prod(ds0, ds0), two_prod(t0, t0)));
    DD cross = two_prod(2.0 * ds0, u);
    DD d = dd_mul(dd_sub(base, cross), dd_add(base, cross));
    return {n, d};
}

inline double ratio_minus_one(double s, const ModificationParams& p) {
    QuarticPair q = quartics_on_axis(s, p);
    return dd_sub(q.n, q.d).hi / q.d.hi;
}

}  // namespace detail

struct RatioExpansion {
    double c2, c4;          // fitted: n6/d6 - 1 = (c2 v + c4)/d6, v = (s-1/2)^2
    double c2_theory;       // 2 ds0^2 + t1^2 + t2^2 - 2 t0^2
    double c4_theory;       // (4 ds0^2 + (t1-t2)^2)(4 ds0^2 + (t1+t2)^2)/4
    double residual;        // relative misfit at the middle abscissa
};

inline double c4_theory_of(const ModificationParams& p) {
    double ds0 = p.delta_sigma0(), dm = p.t1() - p.t2(), dp = p.t1() + p.t2();
    return (4.0 * ds0 * ds0 + dm * dm) * (4.0 * ds0 * ds0 + dp * dp) / 4.0;
}

inline double c2_theory_of(const ModificationParams& p) {
    double ds0 = p.delta_sigma0(), t0 = p.t0(), t1 = p.t1(), t2 = p.t2();
    return 2.0 * ds0 * ds0 + t1 * t1 + t2 * t2 - 2.0 * t0 * t0;
}

// fit c2, c4 from n6/d6 - 1 sampled at s = 1e3, 1e4, 1e5 on the real axis;
// the two extreme abscissas determine the line, the middle one checks it
inline RatioExpansion ratio_expansion_check(const ModificationParams& p) {
    const double sv[3] = {1e3, 1e4, 1e5};
    double v[3], y[3];
    for (int i = 0; i < 3; ++i) {
        double u = sv[i] - 0.5;
        v[i] = u * u;
        detail::QuarticPair q = detail::quartics_on_axis(sv[i], p);
        y[i] = detail::dd_sub(q.n, q.d).hi;
    }
    double c2 = (y[2] - y[0]) / (v[2] - v[0]);
    double c4 = y[0] - c2 * v[0];
    double residual = std::abs(y[1] - (c2 * v[1] + c4)) / std::max(std::abs(y[1]), 1e-9);
    if (residual > 1e-6)
        throw FitError("ratio_expansion_check: linear solve residual above 1e-6 relative");
    return {c2, c4, c2_theory_of(p), c4_theory_of(p), residual};
}

// t0 that zeroes the 1/s^2 coefficient, exposing the 1/s^4 obstruction
inline ModificationParams nulled_params(const ModificationParams& p) {
    double ds0 = p.delta_sigma0(), t1 = p.t1(), t2 = p.t2();
    double t0 = std::sqrt(ds0 * ds0 + (t1 * t1 + t2 * t2) / 2.0);
    return {cplx{p.s0.real(), t0}, p.s1, p.s2};
}

// smallest sigma after which |modified - plain| exceeds |plain - 1| on the
// real axis for good: the algebraic tail of the quartic ratio overtakes the
// exponential approach of delta6 to 1
inline double incompatibility_crossover(const ModificationParams& p,
                                        const PrecisionConfig& cfg = default_precision()) {
    auto gap = [&](double sigma) {
        cplx base = delta6_value(sigma, cfg);
        double dev = std::abs(base) * std::abs(detail::ratio_minus_one(sigma, p));
        return dev - std::abs(base - 1.0);
    };
    double lo = 2.0, hi = 0.0;
    double prev = gap(lo);
    for (double s = 2.5; s <= 60.0; s += 0.5) {
        double cur = gap(s);
        if (prev < 0.0 && cur > 0.0) hi = s;
        prev = cur;
    }
    if (hi == 0.0) {
        if (prev > 0.0 && gap(2.0) > 0.0) return 2.0;
        throw DomainError("incompatibility_crossover: no sign change in [2, 60]");
    }
    lo = hi - 0.5;
    for (int i = 0; i < 60; ++i) {
        double mid = 0.5 * (lo + hi);
        (gap(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace critline
