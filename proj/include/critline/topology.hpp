#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "critline/delta6.hpp"
#include "critline/errors.hpp"

namespace critline {

enum class SeedKind { PhaseZero, AmplitudeUnity };
enum class Termination { ReachedCriticalLine, LeftDomain, StepLimit, SingularityContact };

inline const char* to_string(SeedKind k) {
    return k == SeedKind::PhaseZero ? "PhaseZero" : "AmplitudeUnity";
}

inline const char* to_string(Termination t) {
    switch (t) {
        case Termination::ReachedCriticalLine: return "ReachedCriticalLine";
        case Termination::LeftDomain: return "LeftDomain";
        case Termination::StepLimit: return "StepLimit";
        default: return "SingularityContact";
    }
}

struct LineSeed {
    int index = 0;
    cplx start{0.0, 0.0};
    SeedKind kind = SeedKind::PhaseZero;
    double predicted_t = 0.0;
};

struct TracedLine {
    SeedKind kind = SeedKind::PhaseZero;
    double level = 0.0;
    std::vector<cplx> points;
    Termination termination = Termination::StepLimit;
    bool reached = false;
    double intersection_t = 0.0;
    bool matched = false;
    double matched_event_t = 0.0;
    char matched_event_kind = '?';
    int anomalies = 0;
};

inline double predicted_phase_t(int n) {
    double t0 = n * kPi / kLn4;
    double beta = std::sqrt(kPi / (2.0 * t0));
    return t0 + std::atan2(beta, std::sqrt(2.0) - 1.0 - beta) / kLn4;
}

inline double predicted_amplitude_t(int n) { return (n + 0.5) * kPi / kLn4; }

namespace detail {

// bisection refinement of a seed ordinate along the vertical segment around tp
inline double bisect_seed(double sigma, double tp, bool phase_kind,
                          const PrecisionConfig& cfg) {
    auto g = [&](double t) {
        cplx v = delta6_value({sigma, t}, cfg);
        return phase_kind ? std::arg(v) : std::log(std::abs(v));
    };
    for (double w : {0.9, 0.45, 0.225}) {
        double a = tp - w, b = tp + w;
        double ga = g(a), gb = g(b);
        if (!std::isfinite(ga) || !std::isfinite(gb) || ga * gb >= 0.0) continue;
        for (int i = 0; i < 60; ++i) {
            double m = 0.5 * (a + b);
            double gm = g(m);
            if (gm == 0.0) return m;
            if (ga * gm < 0.0) { b = m; } else { a = m; ga = gm; }
        }
        return 0.5 * (a + b);
    }
    throw SeedError("seed refinement found no sign change near t=" + std::to_string(tp));
}

}  // namespace detail

inline LineSeed seed_phase_zero(int n, double sigma_start,
                                const PrecisionConfig& cfg = default_precision()) {
    if (n < 1) throw DomainError("seed_phase_zero: n must be >= 1");
    if (sigma_start < 4.0) throw DomainError("seed_phase_zero: sigma_start must be >= 4");
    double tp = predicted_phase_t(n);
    double t = detail::bisect_seed(sigma_start, tp, true, cfg);
    return {n, {sigma_start, t}, SeedKind::PhaseZero, tp};
}

inline LineSeed seed_amplitude_unity(int n, double sigma_start,
                                     const PrecisionConfig& cfg = default_precision()) {
    if (n < 1) throw DomainError("seed_amplitude_unity: n must be >= 1");
    if (sigma_start < 4.0) throw DomainError("seed_amplitude_unity: sigma_start must be >= 4");
    double tp = predicted_amplitude_t(n);
    double t = detail::bisect_seed(sigma_start, tp, false, cfg);
    return {n, {sigma_start, t}, SeedKind::AmplitudeUnity, tp};
}

namespace detail {

struct Probe {
    cplx f{0.0, 0.0};
    cplx lp{0.0, 0.0};
    bool ok = false;
};

inline Probe probe_delta6(cplx sc, const PrecisionConfig& cfg) {
    constexpr double h = 1e-5;
    Probe p;
    try {
        p.f = delta6_value(sc, cfg);
        cplx fp = delta6_value(sc + h, cfg);
        cplx fm = delta6_value(sc - h, cfg);
        if (!is_finite(p.f) || !is_finite(fp) || !is_finite(fm)) return p;
        double m = std::abs(p.f);
        if (m < 1e-8 || m > 1e8 || fm == cplx{0.0, 0.0}) return p;
        p.lp = std::log(fp / fm) / (2.0 * h);
        if (!is_finite(p.lp) || p.lp == cplx{0.0, 0.0}) return p;
        p.ok = true;
    } catch (const Error&) {
        p.ok = false;
    }
    return p;
}

}  // namespace detail

// predictor-corrector marching along a level set of arg delta6 or log|delta6|
inline TracedLine trace(const LineSeed& seed, double sigma_stop, int max_steps = 100000,
                        const PrecisionConfig& cfg = default_precision()) {
    if (sigma_stop < 0.5 || sigma_stop >= seed.start.real())
        throw DomainError("trace: sigma_stop must lie in [0.5, start.re)");
    constexpr double kMinStep = 1e-4;
    constexpr double kMaxStep = 0.25;
    constexpr double kTol = 1e-8;

    TracedLine line;
    line.kind = seed.kind;
    line.level = 0.0;
    line.points.push_back(seed.start);

    detail::Probe at = detail::probe_delta6(seed.start, cfg);
    if (!at.ok) {
        line.termination = Termination::SingularityContact;
        return line;
    }
    bool phase_kind = seed.kind == SeedKind::PhaseZero;
    cplx s = seed.start;
    cplx fs = at.f;
    double phi = std::arg(fs);
    cplx d_prev{-1.0, 0.0};
    double step = 0.01;
    int clean = 0;

    for (int it = 0; it < max_steps; ++it) {
        cplx grad = std::conj(at.lp) / std::abs(at.lp);
        cplx d = phase_kind ? grad : cplx{0.0, 1.0} * grad;
        if ((d * std::conj(d_prev)).real() < 0.0) d = -d;
        cplx predicted = s + step * d;
        cplx sc = predicted;

        detail::Probe pr;
        bool converged = false;
        for (int k = 0; k < 8; ++k) {
            pr = detail::probe_delta6(sc, cfg);
            if (!pr.ok) break;
            double resid = phase_kind
                               ? phi + std::arg(pr.f / fs) - line.level
                               : std::log(std::abs(pr.f)) - line.level;
            if (std::abs(resid) <= kTol) {
                converged = true;
                break;
            }
            cplx delta = phase_kind
                             ? resid * cplx{0.0, 1.0} * std::conj(pr.lp) / std::norm(pr.lp)
                             : resid * std::conj(pr.lp) / std::norm(pr.lp);
            if (std::abs(delta) > 0.5 * step) break;
            if (std::abs(sc - delta - predicted) > step) break;
            sc -= delta;
        }

        double dist = converged ? std::abs(sc - s) : 0.0;
        bool accepted = converged && dist >= kMinStep && dist <= std::min(2.0 * step, kMaxStep);
        if (accepted) {
            if (sc.real() >= s.real() && s.real() > 0.6) ++line.anomalies;
            if (phase_kind) phi += std::arg(pr.f / fs);
            line.points.push_back(sc);
            s = sc;
            fs = pr.f;
            at = pr;
            d_prev = d;
            if (s.real() <= sigma_stop + 1e-3) {
                size_t m = line.points.size();
                cplx p1 = line.points[m - 2], p2 = line.points[m - 1];
                line.intersection_t =
                    p2.imag() + (p2.imag() - p1.imag()) * (sigma_stop - p2.real()) /
                                    (p2.real() - p1.real());
                line.reached = true;
                line.termination = Termination::ReachedCriticalLine;
                return line;
            }
            if (s.real() > seed.start.real() + 0.5) {
                line.termination = Termination::LeftDomain;
                return line;
            }
            if (++clean >= 5) {
                step = std::min(step * 2.0, kMaxStep);
                clean = 0;
            }
        } else {
            clean = 0;
            if (step > kMinStep * 1.0000001) {
                step = std::max(step * 0.5, kMinStep);
            } else {
                detail::Probe ahead = detail::probe_delta6(s + kMinStep * d, cfg);
                double m = ahead.ok ? std::abs(ahead.f) : 0.0;
                line.termination = (!ahead.ok || m < 1e-6 || m > 1e6)
                                       ? Termination::SingularityContact
                                       : Termination::LeftDomain;
                return line;
            }
        }
    }
    line.termination = Termination::StepLimit;
    return line;
}

struct Rectangle {
    double sigma_lo = 0.0, sigma_hi = 0.0;
    double t_lo = 0.0, t_hi = 0.0;
};

struct FieldSample {
    double sigma = 0.0, t = 0.0;
    double re = 0.0, im = 0.0, modulus = 0.0, phase = 0.0;
    int quadrant = 0;
    std::string flag = "ok";
};

inline std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) throw DomainError("linspace: need at least one point");
    std::vector<double> out(static_cast<size_t>(n));
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return out;
}

// row-major over t (outer) then sigma (inner); per-sample failures are flagged, never fatal
inline std::vector<FieldSample> export_field_grid(
    const Rectangle& region, int n_sigma, int n_t,
    const std::function<EvaluationResult(cplx)>& eval) {
    if (region.sigma_hi < region.sigma_lo || region.t_hi < region.t_lo)
        throw DomainError("export_field_grid: malformed region");
    std::vector<double> sig = linspace(region.sigma_lo, region.sigma_hi, n_sigma);
    std::vector<double> ts = linspace(region.t_lo, region.t_hi, n_t);
    std::vector<FieldSample> out;
    out.reserve(sig.size() * ts.size());
    for (double t : ts) {
        for (double sg : sig) {
            FieldSample fs;
            fs.sigma = sg;
            fs.t = t;
            try {
                EvaluationResult r = eval({sg, t});
                fs.re = r.value.real();
                fs.im = r.value.imag();
                fs.modulus = r.modulus;
                fs.phase = r.phase;
                fs.quadrant = r.quadrant;
                fs.flag = r.near_singularity ? "near_singularity" : "ok";
            } catch (const NearPoleError&) {
                fs.re = fs.im = fs.modulus = fs.phase = std::nan("");
                fs.flag = "near_pole";
            } catch (const PoleError&) {
                fs.re = fs.im = fs.modulus = fs.phase = std::nan("");
                fs.flag = "pole";
            } catch (const AccuracyError&) {
                fs.re = fs.im = fs.modulus = fs.phase = std::nan("");
                fs.flag = "accuracy";
            } catch (const Error&) {
                fs.re = fs.im = fs.modulus = fs.phase = std::nan("");
                fs.flag = "domain";
            }
            out.push_back(std::move(fs));
        }
    }
    return out;
}

inline std::vector<FieldSample> export_field_grid(const Rectangle& region, int n_sigma,
                                                  int n_t,
                                                  const PrecisionConfig& cfg = default_precision()) {
    return export_field_grid(region, n_sigma, n_t,
                             [&cfg](cplx s) { return delta6(s, cfg); });
}

}  // namespace critline
