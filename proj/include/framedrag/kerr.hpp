#pragma once

// Light kinematics in the equatorial plane of the Kerr metric.
//
// Speeds are tangential proper distance per coordinate time, signed along
// the source's rotation: positive values follow the rotation (co-rotating),
// negative values oppose it. In the (t, phi) chart of MetricComponents the
// rotation runs toward decreasing phi, matching the rotating-frame metric
// (1 - v^2) dt^2 - 2 v r dt dphi - r^2 dphi^2.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "framedrag/errors.hpp"
#include "framedrag/format.hpp"
#include "framedrag/interference.hpp"
#include "framedrag/units.hpp"

namespace framedrag {

enum class Direction { co, counter };

inline const char* to_string(Direction d) { return d == Direction::co ? "co" : "counter"; }

/// Co- and counter-rotating speeds, both as magnitudes.
struct LightSpeedPair {
    double co;
    double counter;
};

/// (1+1) line element ds^2 = g_tt dt^2 + 2 g_tphi dt dphi + g_phiphi dphi^2.
struct MetricComponents {
    double g_tt;
    double g_tphi;
    double g_phiphi;

    double determinant() const noexcept { return g_tt * g_phiphi - g_tphi * g_tphi; }

    /// ds^2/dt^2 along a curve with angular rate dphi/dt.
    double line_element_rate(double dphi_dt) const noexcept {
        return g_tt + 2.0 * g_tphi * dphi_dt + g_phiphi * dphi_dt * dphi_dt;
    }
};

namespace kerr {

// Scalar-generic kernels; instantiated with double in the typed API and with
// extended-precision types by the verification routines.
namespace formula {

template <class Real>
struct SpeedTerms {
    Real drag;  // r_s a / (r sqrt(r^2 + a^2 (1 + r_s/r)))
    Real root;  // sqrt(r_s^2 a^2 / (r^2 (r^2 + a^2 (1 + r_s/r))) + 1 - r_s/r)
};

template <class Real>
SpeedTerms<Real> full_terms(const Real& rs, const Real& a, const Real& r) {
    using std::sqrt;
    const Real x = rs / r;
    const Real big = r * r + a * a * (Real(1) + x);
    const Real arg = rs * rs * a * a / (r * r * big) + (Real(1) - x);
    if (arg < Real(0))
        throw DomainError("light_speed_full: negative radicand " + format_exact(static_cast<double>(arg)) +
                          " at r=" + format_exact(static_cast<double>(r)));
    return {rs * a / (r * sqrt(big)), sqrt(arg)};
}

template <class Real>
Real light_speed_full(const Real& rs, const Real& a, const Real& r, Direction d) {
    const auto t = full_terms(rs, a, r);
    return d == Direction::co ? t.drag + t.root : t.drag - t.root;
}

/// First-order expansion +-(1 - r_s/(2r) +- r_s a / r^2).
template <class Real>
Real light_speed_weak(const Real& rs, const Real& a, const Real& r, Direction d) {
    const Real half = rs / (Real(2) * r);
    const Real drag = rs * a / (r * r);
    return d == Direction::co ? Real(1) - half + drag : -(Real(1) - half - drag);
}

/// 1/|c_counter| - 1/c_co without cancellation: c_co - |c_counter| = 2 min(drag, root).
template <class Real>
Real inverse_speed_gap(const Real& rs, const Real& a, const Real& r) {
    using std::abs;
    const auto t = full_terms(rs, a, r);
    const Real co = t.drag + t.root;
    const Real counter = abs(t.drag - t.root);
    // Outside the static limit drag < root and the counter speed is negative.
    const Real gap = Real(2) * (t.drag <= t.root ? t.drag : t.root);
    return gap / (co * counter);
}

} // namespace formula

/// An equatorial point outside the horizon.
class KerrPoint {
public:
    KerrPoint(GravSource source, double r) : source_(source), r_(r) {
        detail::require(std::isfinite(r) && r > 0.0, "KerrPoint: r must be > 0, got " + format_exact(r));
        if (source.sub_extremal()) {
            const double h = 0.5 * source.rs();
            const double r_plus = h + std::sqrt(h * h - source.a() * source.a());
            detail::require(r > r_plus, "KerrPoint: r=" + format_exact(r) + " m is inside the horizon r+=" +
                                            format_exact(r_plus) + " m");
        } else {
            // No horizon; stay outside the static limit where the equatorial chart is sane.
            detail::require(r > source.rs(), "KerrPoint: r=" + format_exact(r) +
                                                 " m is inside r_s=" + format_exact(source.rs()) +
                                                 " m of a super-extremal source");
        }
    }

    const GravSource& source() const noexcept { return source_; }
    double r() const noexcept { return r_; }
    double rs() const noexcept { return source_.rs(); }
    double a() const noexcept { return source_.a(); }

private:
    GravSource source_;
    double r_;
};

struct WeakFieldGuard {
    double threshold = 0.01;
    bool override = false;

    void check(const KerrPoint& p, const char* op) const {
        if (override) return;
        const double x = p.rs() / p.r();
        const double y = std::abs(p.a()) / p.r();
        if (!(x < threshold && y < threshold))
            throw GuardViolation("weak-field", std::string(op) + ": weak-field invalid (r_s/r=" + format_exact(x) +
                                                   ", a/r=" + format_exact(y) + ", threshold " +
                                                   format_exact(threshold) + ")");
    }
};

/// Equatorial (1+1) reduction (1 - r_s/r, -r_s a/r, -r^2).
inline MetricComponents metric_components_kerr(const KerrPoint& p) {
    return {1.0 - p.rs() / p.r(), -p.rs() * p.a() / p.r(), -p.r() * p.r()};
}

/// Equatorial components without dropping a^2 terms: g_phiphi = -(r^2 + a^2 + r_s a^2 / r).
/// This is the metric whose null curves the full light speeds solve.
inline MetricComponents metric_components_kerr_equatorial(const KerrPoint& p) {
    const double r = p.r(), a = p.a(), rs = p.rs();
    return {1.0 - rs / r, -rs * a / r, -(r * r + a * a * (1.0 + rs / r))};
}

/// dphi/dt for a tangential speed u in the equatorial chart.
inline double angular_rate(const KerrPoint& p, double u) {
    const MetricComponents g = metric_components_kerr_equatorial(p);
    return -u / std::sqrt(-g.g_phiphi);
}

inline double light_speed_full(const KerrPoint& p, Direction d) {
    return formula::light_speed_full(p.rs(), p.a(), p.r(), d);
}

inline double light_speed_weak(const KerrPoint& p, Direction d, WeakFieldGuard guard = {}) {
    guard.check(p, "light_speed_weak");
    return formula::light_speed_weak(p.rs(), p.a(), p.r(), d);
}

inline LightSpeedPair light_speeds_full(const KerrPoint& p) {
    return {std::abs(light_speed_full(p, Direction::co)), std::abs(light_speed_full(p, Direction::counter))};
}

inline LightSpeedPair light_speeds_weak(const KerrPoint& p, WeakFieldGuard guard = {}) {
    return {std::abs(light_speed_weak(p, Direction::co, guard)),
            std::abs(light_speed_weak(p, Direction::counter, guard))};
}

enum class PhaseMode { weak, full };

inline const char* to_string(PhaseMode m) { return m == PhaseMode::weak ? "weak" : "full"; }

/// Arrival-time difference (counter minus co) over a path of length L, full solution.
inline double time_delay_full(const KerrPoint& p, double path_length) {
    detail::require(path_length > 0.0, "time_delay_full: L must be > 0");
    return path_length * formula::inverse_speed_gap(p.rs(), p.a(), p.r());
}

/// Weak-field delay 2 L r_s a / r^2.
inline double kerr_time_delay(const KerrPoint& p, double path_length) {
    detail::require(path_length > 0.0, "kerr_time_delay: L must be > 0, got " + format_exact(path_length));
    return 2.0 * path_length * p.rs() * p.a() / (p.r() * p.r());
}

/// Phase difference between counter- and co-propagating wavepackets.
/// weak: 2 w L (r_s a / r^2)(1 + r_s/r); full: w L (1/|c_counter| - 1/c_co).
inline double kerr_phase_difference(const KerrPoint& p, double path_length, double omega, PhaseMode mode,
                                    WeakFieldGuard guard = {}) {
    detail::require(path_length > 0.0, "kerr_phase_difference: L must be > 0, got " + format_exact(path_length));
    detail::require(omega > 0.0, "kerr_phase_difference: omega must be > 0, got " + format_exact(omega));
    if (mode == PhaseMode::full) return omega * time_delay_full(p, path_length);
    guard.check(p, "kerr_phase_difference");
    const double x = p.rs() / p.r();
    return 2.0 * omega * path_length * p.rs() * p.a() / (p.r() * p.r()) * (1.0 + x);
}

struct RoundTrip {
    double mean;            // far-away observer, 1 / (1 + r_s/r)
    double local_two_way;   // mean * dt/dtau with dt/dtau = 1 / (1 - r_s/r)
};

inline RoundTrip roundtrip_mean_speed(const KerrPoint& p, WeakFieldGuard guard = {}) {
    guard.check(p, "roundtrip_mean_speed");
    const double x = p.rs() / p.r();
    const double mean = 1.0 / (1.0 + x);
    return {mean, mean / (1.0 - x)};
}

/// Outer root of r^2 - r_s r + a^2 = 0.
inline double horizon_radius(const GravSource& s) {
    detail::require(s.sub_extremal(), "horizon_radius: super-extremal source (|a|=" + format_exact(std::abs(s.a())) +
                                          " > r_s/2=" + format_exact(0.5 * s.rs()) + ")");
    const double h = 0.5 * s.rs();
    return h + std::sqrt(h * h - s.a() * s.a());
}

inline double wrap_phase(double phi) {
    const double w = std::remainder(phi, 2.0 * std::numbers::pi);
    return w == -std::numbers::pi ? std::numbers::pi : w;
}

struct ScanSample {
    double r_over_rs;
    double delta_t;     // m
    double phase_rad;   // unwrapped
    double visibility;
};

struct ScanOptions {
    double r_min_rs = 0.0;   // 0 selects 1.05 r+/r_s
    double r_max_rs = 1e3;
    std::size_t samples = 512;
    double omega = 2e6;      // 1/m
    double sigma = 3.5e3;    // 1/m
};

/// One full-solution sample with interferometer length L = 2 pi r.
inline ScanSample scan_sample(const GravSource& s, double r_over_rs, double omega, double sigma) {
    const double r = r_over_rs * s.rs();
    const KerrPoint p(s, r);
    const double dt = time_delay_full(p, 2.0 * std::numbers::pi * r);
    return {r_over_rs, dt, omega * dt, interference::gaussian_visibility(dt, sigma)};
}

/// Logarithmic radial scan of phase difference and single-photon visibility.
inline std::vector<ScanSample> blackhole_scan(const GravSource& s, const ScanOptions& opt = {}) {
    detail::require(s.rs() > 0.0, "blackhole_scan: source needs r_s > 0");
    detail::require(opt.samples >= 2, "blackhole_scan: need at least 2 samples");
    detail::require(opt.omega > 0.0 && opt.sigma > 0.0, "blackhole_scan: omega and sigma must be > 0");
    const double r_plus = horizon_radius(s) / s.rs();
    const double lo = opt.r_min_rs > 0.0 ? opt.r_min_rs : 1.05 * r_plus;
    detail::require(opt.r_max_rs > lo, "blackhole_scan: r_max must exceed r_min");
    if (lo <= r_plus)
        throw DomainError("blackhole_scan: sample r'=" + format_exact(lo) + " is inside the horizon r+'=" +
                          format_exact(r_plus));
    std::vector<ScanSample> out;
    out.reserve(opt.samples);
    const double llo = std::log(lo), lhi = std::log(opt.r_max_rs);
    const double n = static_cast<double>(opt.samples - 1);
    for (std::size_t i = 0; i < opt.samples; ++i) {
        const double rr = i == 0 ? lo : i + 1 == opt.samples ? opt.r_max_rs
                                                             : std::exp(llo + (lhi - llo) * static_cast<double>(i) / n);
        out.push_back(scan_sample(s, rr, opt.omega, opt.sigma));
    }
    return out;
}

/// Outermost r' (outside the static limit r' = 1) where the scan visibility equals `level`,
/// by bisection in log r'.
inline double visibility_crossover(const GravSource& s, double sigma, double level = 0.5, double r_lo_rs = 1.0 + 1e-9,
                                   double r_hi_rs = 1e6) {
    detail::require(level > 0.0 && level < 1.0, "visibility_crossover: level must be in (0, 1)");
    auto vis = [&](double rr) { return scan_sample(s, rr, 1.0, sigma).visibility; };
    double lo = r_lo_rs, hi = r_hi_rs;
    detail::require(vis(lo) < level && vis(hi) > level, "visibility_crossover: level not bracketed");
    for (int it = 0; it < 200 && hi / lo - 1.0 > 1e-15; ++it) {
        const double mid = std::sqrt(lo * hi);
        (vis(mid) < level ? lo : hi) = mid;
    }
    return std::sqrt(lo * hi);
}

} // namespace kerr
} // namespace framedrag
