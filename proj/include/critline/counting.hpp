#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "critline/delta6.hpp"
#include "critline/errors.hpp"
#include "critline/topology.hpp"

namespace critline {

enum class EventKind { Zero, Pole };
enum class EventSource { NumeratorTPlus, DenominatorZeta };

inline const char* to_string(EventKind k) { return k == EventKind::Zero ? "Zero" : "Pole"; }

inline const char* to_string(EventSource s) {
    return s == EventSource::NumeratorTPlus ? "NumeratorT+" : "DenominatorZeta";
}

struct CriticalLineEvent {
    double t = 0.0;
    EventKind kind = EventKind::Zero;
    int multiplicity = 1;
    EventSource source = EventSource::NumeratorTPlus;
    double refinement_residual = 0.0;
};

struct CountingReport {
    double t_lower = 0.0, t_upper = 0.0;
    int zero_sum = 0, pole_sum = 0;
    int winding = 0;
    bool balanced = false;
};

// sign proxy for T+(1/2+it) = 2 Re xi1(1+2it); the raw sum underflows past
// t ~ 450 while the cosine of the accumulated argument keeps its sign
inline double t_plus_detector(double t, const PrecisionConfig& cfg = default_precision()) {
    cplx z{0.5, t};
    cplx zv = zeta({1.0, 2.0 * t}, cfg);
    double im = (log_gamma(z) - z * kLnPi).imag() + std::arg(zv);
    return std::cos(im);
}

inline double zeta_pole_detector(double t, const PrecisionConfig& cfg = default_precision()) {
    return hardy_Z(2.0 * t, cfg);
}

namespace detail {

inline double winding_segment(const std::function<cplx(cplx)>& fn, cplx p, cplx fp, cplx q,
                              cplx fq, int depth) {
    double d = std::arg(fq / fp);
    if (std::abs(d) < kPi / 2.0) return d;
    if (depth >= 40)
        throw SamplingError("argument_winding: phase increment bound unachievable");
    cplx m = 0.5 * (p + q);
    cplx fm = fn(m);
    if (!is_finite(fm) || fm == cplx{0.0, 0.0})
        throw SamplingError("argument_winding: contour touches a singularity");
    return winding_segment(fn, p, fp, m, fm, depth + 1) +
           winding_segment(fn, m, fm, q, fq, depth + 1);
}

}  // namespace detail

inline int argument_winding(const std::vector<cplx>& contour,
                            const std::function<cplx(cplx)>& fn) {
    if (contour.size() < 3) throw DomainError("argument_winding: need a closed polyline");
    std::vector<cplx> vals(contour.size());
    for (size_t i = 0; i < contour.size(); ++i) {
        vals[i] = fn(contour[i]);
        if (!is_finite(vals[i]) || vals[i] == cplx{0.0, 0.0})
            throw SamplingError("argument_winding: contour touches a singularity");
    }
    double total = 0.0;
    for (size_t i = 0; i < contour.size(); ++i) {
        size_t j = (i + 1) % contour.size();
        if (contour[i] == contour[j]) continue;
        total += detail::winding_segment(fn, contour[i], vals[i], contour[j], vals[j], 0);
    }
    double w = total / (2.0 * kPi);
    double r = std::abs(w - std::round(w));
    if (r > 1e-3) throw SamplingError("argument_winding: non-integer winding residual");
    return static_cast<int>(std::lround(w));
}

inline int argument_winding(const std::vector<cplx>& contour,
                            const PrecisionConfig& cfg = default_precision()) {
    return argument_winding(contour, [&cfg](cplx s) { return delta6_value(s, cfg); });
}

inline std::vector<cplx> rectangle_contour(const Rectangle& r, double step) {
    if (r.sigma_hi <= r.sigma_lo || r.t_hi <= r.t_lo || step <= 0.0)
        throw DomainError("rectangle_contour: malformed rectangle");
    std::vector<cplx> out;
    auto edge = [&](cplx a, cplx b) {
        int n = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / step)));
        for (int i = 0; i < n; ++i)
            out.push_back(a + (b - a) * (static_cast<double>(i) / n));
    };
    cplx c1{r.sigma_lo, r.t_lo}, c2{r.sigma_hi, r.t_lo}, c3{r.sigma_hi, r.t_hi},
        c4{r.sigma_lo, r.t_hi};
    edge(c1, c2);
    edge(c2, c3);
    edge(c3, c4);
    edge(c4, c1);
    return out;
}

inline std::vector<cplx> circle_contour(cplx center, double radius, int n = 128) {
    if (radius <= 0.0 || n < 8) throw DomainError("circle_contour: malformed circle");
    std::vector<cplx> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double a = 2.0 * kPi * i / n;
        out.push_back(center + radius * cplx{std::cos(a), std::sin(a)});
    }
    return out;
}

namespace detail {

inline std::vector<CriticalLineEvent> scan_events(
    const std::function<double(double)>& detector, double t_lo, double t_hi, double step,
    EventKind kind, EventSource source, const PrecisionConfig& cfg) {
    std::vector<CriticalLineEvent> out;
    if (t_hi <= t_lo) return out;
    auto refine = [&](double a, double b, double fa) {
        for (int i = 0; i < 60 && b - a > 1e-12; ++i) {
            double m = 0.5 * (a + b);
            double fm = detector(m);
            if (fm == 0.0) return m;
            if (fa * fm < 0.0) {
                b = m;
            } else {
                a = m;
                fa = fm;
            }
        }
        return 0.5 * (a + b);
    };
    auto push = [&](double t, int mult) {
        if (out.empty() || t - out.back().t > 1e-4)
            out.push_back({t, kind, mult, source, std::abs(detector(t))});
    };
    long n = static_cast<long>(std::ceil((t_hi - t_lo) / step));
    double prev_t = t_lo;
    double prev = detector(prev_t);
    double prev2 = prev;
    for (long k = 1; k <= n; ++k) {
        double cur_t = std::min(t_lo + static_cast<double>(k) * step, t_hi);
        double cur = detector(cur_t);
        if (prev * cur < 0.0) {
            push(refine(prev_t, cur_t, prev), 1);
        } else if (k >= 2 && std::abs(prev) < 1e-6 && std::abs(prev) < std::abs(prev2) &&
                   std::abs(prev) < std::abs(cur) && prev2 * cur > 0.0) {
            // near-touch without a sign flip: settle multiplicity by disk winding
            int w = argument_winding(circle_contour({0.5, prev_t}, 5e-3), cfg);
            int mult = kind == EventKind::Zero ? w : -w;
            if (mult > 0) push(prev_t, mult);
        }
        prev2 = prev;
        prev = cur;
        prev_t = cur_t;
    }
    return out;
}

}  // namespace detail

inline std::vector<CriticalLineEvent> find_zeros_T_plus(
    double t_lo, double t_hi, const PrecisionConfig& cfg = default_precision(),
    double step = 0.01) {
    if (!(t_lo > 0.0) || t_hi > 5000.0 || t_lo > t_hi)
        throw DomainError("find_zeros_T_plus: range must sit inside (0, 5000]");
    return detail::scan_events([&](double t) { return t_plus_detector(t, cfg); }, t_lo, t_hi,
                               step, EventKind::Zero, EventSource::NumeratorTPlus, cfg);
}

inline std::vector<CriticalLineEvent> find_poles_zeta(
    double t_lo, double t_hi, const PrecisionConfig& cfg = default_precision(),
    double step = 0.005) {
    if (!(t_lo > 0.0) || t_hi > 5000.0 || t_lo > t_hi)
        throw DomainError("find_poles_zeta: range must sit inside (0, 5000]");
    return detail::scan_events([&](double t) { return zeta_pole_detector(t, cfg); }, t_lo,
                               t_hi, step, EventKind::Pole, EventSource::DenominatorZeta, cfg);
}

inline std::vector<CriticalLineEvent> merge_events(std::vector<CriticalLineEvent> a,
                                                   const std::vector<CriticalLineEvent>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end(),
              [](const CriticalLineEvent& x, const CriticalLineEvent& y) { return x.t < y.t; });
    return a;
}

inline int count_strictly_below(const std::vector<CriticalLineEvent>& events, double t) {
    int n = 0;
    for (const CriticalLineEvent& e : events)
        if (e.t < t) n += e.multiplicity;
    return n;
}

// winding on a 5e-3 disk confirms the sign and multiplicity of a detected event
inline int event_disk_winding(const CriticalLineEvent& e,
                              const PrecisionConfig& cfg = default_precision()) {
    return argument_winding(circle_contour({0.5, e.t}, 5e-3), cfg);
}

inline void match_intersection(TracedLine& line, const std::vector<CriticalLineEvent>& events) {
    if (!line.reached || events.empty()) return;
    const CriticalLineEvent* best = nullptr;
    for (const CriticalLineEvent& e : events)
        if (!best || std::abs(e.t - line.intersection_t) < std::abs(best->t - line.intersection_t))
            best = &e;
    if (best && std::abs(best->t - line.intersection_t) <= 1e-3) {
        line.matched = true;
        line.matched_event_t = best->t;
        line.matched_event_kind = best->kind == EventKind::Zero ? 'Z' : 'P';
    }
}

inline CountingReport balance_report(const TracedLine& line_a, const TracedLine& line_b,
                                     const PrecisionConfig& cfg = default_precision()) {
    if (line_a.termination != Termination::ReachedCriticalLine ||
        line_b.termination != Termination::ReachedCriticalLine)
        throw IncompleteContour("balance_report: both lines must reach the critical line");
    if (!(line_a.intersection_t < line_b.intersection_t))
        throw DomainError("balance_report: line_a must intersect below line_b");
    double ta = line_a.intersection_t, tb = line_b.intersection_t;

    CountingReport rep;
    rep.t_lower = ta;
    rep.t_upper = tb;
    for (const CriticalLineEvent& e : find_zeros_T_plus(ta, tb, cfg))
        if (e.t > ta + 1e-3 && e.t < tb - 1e-3) rep.zero_sum += e.multiplicity;
    for (const CriticalLineEvent& e : find_poles_zeta(ta, tb, cfg))
        if (e.t > ta + 1e-3 && e.t < tb - 1e-3) rep.pole_sum += e.multiplicity;

    // counterclockwise: line_a out to its seed, across to line_b's seed, down
    // line_b, then the offset critical segment closing the loop
    std::vector<cplx> contour(line_a.points.rbegin(), line_a.points.rend());
    cplx sa = line_a.points.front(), sb = line_b.points.front();
    int nv = std::max(2, static_cast<int>(std::ceil(std::abs(sb - sa) / 0.05)));
    for (int i = 1; i < nv; ++i)
        contour.push_back(sa + (sb - sa) * (static_cast<double>(i) / nv));
    contour.insert(contour.end(), line_b.points.begin(), line_b.points.end());
    double off = 0.5 + 1e-3;
    long ns = std::max(2L, std::lround(std::ceil((tb - ta) / 5e-4)));
    for (long i = 0; i <= ns; ++i)
        contour.push_back(cplx{off, tb + (ta - tb) * (static_cast<double>(i) / ns)});
    rep.winding = argument_winding(contour, cfg);
    rep.balanced = rep.zero_sum == rep.pole_sum && rep.winding == 0;
    return rep;
}

inline double n_zeta_main(double t) {
    if (!(t > 2.0 * kPi)) throw DomainError("n_zeta_main: requires t > 2*pi");
    return t / (2.0 * kPi) * std::log(t) - t / (2.0 * kPi) * (1.0 + std::log(2.0 * kPi));
}

struct DistributionRow {
    double t = 0.0;
    int count_T_plus = 0;
    int count_zeta_poles = 0;
    double main_term = 0.0;
};

inline std::vector<DistributionRow> distribution_comparison(
    double t_max, const PrecisionConfig& cfg = default_precision()) {
    if (!(t_max >= 1.0) || t_max > 2500.0)
        throw DomainError("distribution_comparison: t_max must lie in [1, 2500]");
    std::vector<CriticalLineEvent> zeros = find_zeros_T_plus(0.01, t_max, cfg);
    std::vector<CriticalLineEvent> poles = find_poles_zeta(0.01, t_max, cfg);
    std::vector<DistributionRow> out;
    for (double t = 1.0; t <= t_max + 1e-12; t += 1.0) {
        DistributionRow row;
        row.t = t;
        for (const CriticalLineEvent& e : zeros)
            if (e.t <= t) row.count_T_plus += e.multiplicity;
        for (const CriticalLineEvent& e : poles)
            if (e.t <= t) row.count_zeta_poles += e.multiplicity;
        row.main_term = 2.0 * t > 2.0 * kPi ? n_zeta_main(2.0 * t)
                                            : std::numeric_limits<double>::quiet_NaN();
        out.push_back(row);
    }
    return out;
}

}  // namespace critline
