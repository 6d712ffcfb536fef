#pragma once

// Turntable kinematics and the turntable <-> Kerr correspondence.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "framedrag/errors.hpp"
#include "framedrag/format.hpp"
#include "framedrag/kerr.hpp"
#include "framedrag/units.hpp"

namespace framedrag::rotating {

namespace detail_ {
inline void require_subluminal(double v, const char* op) {
    detail::require(std::isfinite(v) && std::abs(v) < 1.0,
                    std::string(op) + ": |v| must be < 1, got " + format_exact(v));
}
} // namespace detail_

/// Turntable of radius r_t spinning with tangential speed v (fraction of c).
class TurntableConfig {
public:
    static TurntableConfig from_velocity(double r_t, double v, unsigned windings = 0) {
        return TurntableConfig(r_t, v, windings);
    }

    /// Angular frequency in rad/s; v = Omega r_t / c.
    static TurntableConfig from_angular_frequency(double r_t, double omega_rad_s, unsigned windings = 0) {
        detail::require(r_t > 0.0, "TurntableConfig: radius must be > 0, got " + format_exact(r_t));
        return TurntableConfig(r_t, omega_rad_s * r_t / constants.c, windings);
    }

    double radius() const noexcept { return r_t_; }
    double v() const noexcept { return v_; }
    unsigned windings() const noexcept { return windings_; }
    double angular_frequency() const noexcept { return v_ * constants.c / r_t_; }
    double velocity_m_per_s() const noexcept { return v_ * constants.c; }

    /// Contracted path for photons meeting half way after N windings:
    /// (2N + 1) pi r_t sqrt(1 - v^2).
    double default_arm_length() const noexcept {
        return (2.0 * windings_ + 1.0) * std::numbers::pi * r_t_ * std::sqrt(1.0 - v_ * v_);
    }

    double arm_a() const noexcept { return arm_a_.value_or(default_arm_length()); }
    double arm_b() const noexcept { return arm_b_.value_or(default_arm_length()); }

    TurntableConfig& with_arms(double l_a, double l_b) {
        detail::require(l_a > 0.0 && l_b > 0.0, "TurntableConfig: arm lengths must be > 0");
        arm_a_ = l_a;
        arm_b_ = l_b;
        return *this;
    }

private:
    TurntableConfig(double r_t, double v, unsigned windings) : r_t_(r_t), v_(v), windings_(windings) {
        detail::require(r_t > 0.0 && std::isfinite(r_t), "TurntableConfig: radius must be > 0, got " + format_exact(r_t));
        detail::require(v >= 0.0 && v < 1.0, "TurntableConfig: need 0 <= v < 1, got " + format_exact(v));
    }

    double r_t_;
    double v_;
    unsigned windings_;
    std::optional<double> arm_a_, arm_b_;
};

inline double g_force(double v, double r_t) {
    const double vs = v * constants.c;
    return vs * vs / r_t / constants.standard_gravity;
}

/// Flat (1+1) metric seen from a frame rotating with tangential speed v at radius r_t.
inline MetricComponents metric_components_rotating(double v, double r_t) {
    detail::require(v >= 0.0 && v < 1.0, "metric_components_rotating: need 0 <= v < 1, got " + format_exact(v));
    detail::require(r_t > 0.0, "metric_components_rotating: r_t must be > 0");
    return {1.0 - v * v, -v * r_t, -r_t * r_t};
}

/// Factor s in dt -> s dt that maps the Kerr g_tt onto 1 - v^2.
inline double time_rescale_factor(const GravSource& s, double r, double v) {
    detail::require(r > s.rs(), "time_rescale_factor: need r > r_s, got r=" + format_exact(r));
    detail_::require_subluminal(v, "time_rescale_factor");
    return std::sqrt((1.0 - v * v) / (1.0 - s.rs() / r));
}

/// Kerr (1+1) components after the time rescaling dt -> s dt.
inline MetricComponents rescaled_kerr_metric(const kerr::KerrPoint& p, double v) {
    const double s = time_rescale_factor(p.source(), p.r(), v);
    const MetricComponents g = kerr::metric_components_kerr(p);
    return {g.g_tt * s * s, g.g_tphi * s, g.g_phiphi};
}

enum class EquivalenceMethod { metric, timeshift };

inline const char* to_string(EquivalenceMethod m) { return m == EquivalenceMethod::metric ? "metric" : "timeshift"; }

struct EquivalenceResult {
    double v;                 // fraction of c
    EquivalenceMethod method;
    GravSource source;
    double r;                 // Kerr radius, m
    double r_t;               // turntable radius, m
    // Round-trip delays matched by the time-shift method (m); zero for the metric method.
    double turntable_delay = 0.0;
    double kerr_delay = 0.0;

    double v_m_per_s() const noexcept { return v * constants.c; }
    double angular_frequency() const noexcept { return v * constants.c / r_t; }
    double g_force() const noexcept { return rotating::g_force(v, r_t); }
};

/// Turntable speed that makes the rescaled Kerr g_tphi equal the rotating-frame g_tphi
/// at r_t = r: v = r_s a / (r^2 sqrt(1 - r_s/r + r_s^2 a^2 / r^4)).
inline EquivalenceResult equivalence_velocity_metric(const GravSource& s, double r) {
    const kerr::KerrPoint p(s, r);
    detail::require(r > s.rs(), "equivalence_velocity_metric: need r > r_s, got r=" + format_exact(r));
    const double k = s.rs() * s.a() / (r * r);
    const double v = k / std::sqrt(1.0 - s.rs() / r + k * k);
    return {v, EquivalenceMethod::metric, s, r, r};
}

/// The leading form r_s a / (r^2 sqrt(1 - r_s/r)).
inline double equivalence_velocity_metric_approx(const GravSource& s, double r) {
    detail::require(r > s.rs(), "equivalence_velocity_metric_approx: need r > r_s");
    return s.rs() * s.a() / (r * r * std::sqrt(1.0 - s.rs() / r));
}

/// Turntable round-trip shift seen by the lab observer for a contracted loop
/// L = 2 pi r_t / sqrt(1 - v^2): L/(1 - v) - L.
inline double turntable_roundtrip_delay(double v, double r_t) {
    detail_::require_subluminal(v, "turntable_roundtrip_delay");
    const double loop = 2.0 * std::numbers::pi * r_t / std::sqrt(1.0 - v * v);
    return loop * v / (1.0 - v);
}

/// Weak-field Kerr round-trip shift 2 pi r_s a / r.
inline double kerr_roundtrip_delay(const GravSource& s, double r) {
    return 2.0 * std::numbers::pi * s.rs() * s.a() / r;
}

/// Turntable speed for equal round-trip shifts at turntable radius r_t.
///
/// Solves r_s a / (r r_t) = v / sqrt(1 - v^2), i.e. v = K / sqrt(1 + K^2) with
/// K = r_s a / (r r_t). The turntable delay itself carries an extra 1/(1 - v),
/// so the reported delays agree only to first order in v.
inline EquivalenceResult equivalence_velocity_timeshift(const GravSource& s, double r, double r_t) {
    const kerr::KerrPoint p(s, r);
    detail::require(r_t > 0.0, "equivalence_velocity_timeshift: r_t must be > 0, got " + format_exact(r_t));
    const double k = s.rs() * s.a() / (r * r_t);
    const double v = k / std::sqrt(1.0 + k * k);
    EquivalenceResult res{v, EquivalenceMethod::timeshift, s, r, r_t};
    res.turntable_delay = turntable_roundtrip_delay(std::abs(v), r_t) * (v < 0 ? -1.0 : 1.0);
    res.kerr_delay = kerr_roundtrip_delay(s, r);
    return res;
}

/// r_t = r with the metric time transformation: solves
/// (r_s a / r^2) sqrt((1 - v^2)/(1 - r_s/r)) = v for v by bracketed root finding.
inline double equivalence_velocity_timeshift_metric_time(const GravSource& s, double r) {
    detail::require(r > s.rs(), "equivalence_velocity_timeshift_metric_time: need r > r_s");
    const double k = s.rs() * s.a() / (r * r);
    if (k == 0.0) return 0.0;
    const double sign = k < 0 ? -1.0 : 1.0;
    const double kk = std::abs(k);
    const double x = s.rs() / r;
    auto f = [&](double v) { return kk * std::sqrt((1.0 - v * v) / (1.0 - x)) - v; };
    boost::uintmax_t iters = 200;
    auto tol = boost::math::tools::eps_tolerance<double>(52);
    auto [lo, hi] = boost::math::tools::toms748_solve(f, 0.0, 1.0, f(0.0), f(1.0), tol, iters);
    return sign * 0.5 * (lo + hi);
}

/// Vacuum tangential light speeds 1 + v and 1 - v in the rotating frame.
inline LightSpeedPair sagnac_light_speeds(double v) {
    detail_::require_subluminal(v, "sagnac_light_speeds");
    return {1.0 + v, 1.0 - v};
}

/// Sagnac phase 2 w v L / (1 - v^2).
inline double sagnac_phase(double v, double path_length, double omega) {
    detail_::require_subluminal(v, "sagnac_phase");
    detail::require(path_length > 0.0 && omega > 0.0, "sagnac_phase: L and omega must be > 0");
    return 2.0 * omega * v * path_length / (1.0 - v * v);
}

/// Delay 2 v L / (1 - v^2) matching sagnac_phase / omega.
inline double sagnac_delay(double v, double path_length) {
    detail_::require_subluminal(v, "sagnac_delay");
    return 2.0 * v * path_length / (1.0 - v * v);
}

struct MinVelocity {
    double exact;    // 1 / sqrt(4 pi^2 R^2 sigma^2 + 1)
    double approx;   // 1 / (2 pi R sigma)
    double effective_radius;  // (2N + 1) r

    double exact_m_per_s() const noexcept { return exact * constants.c; }
    double approx_m_per_s() const noexcept { return approx * constants.c; }
};

/// Tangential speed at which the single-photon visibility drops to 1/e for photons
/// meeting half way round a platform of radius r with N windings.
inline MinVelocity min_velocity_for_visibility(double r, double sigma, unsigned windings = 0) {
    detail::require(r > 0.0 && sigma > 0.0, "min_velocity_for_visibility: r and sigma must be > 0");
    const double big_r = (2.0 * windings + 1.0) * r;
    const double x = 2.0 * std::numbers::pi * big_r * sigma;
    return {1.0 / std::sqrt(x * x + 1.0), 1.0 / x, big_r};
}

struct TwoWayPhases {
    double phi_a;
    double phi_b;
    double difference;
};

/// Round-trip phases after reflection half way round; L = pi r_t sqrt(1 - v^2).
inline TwoWayPhases two_way_phase_turntable(double v, double r_t, double omega) {
    detail_::require_subluminal(v, "two_way_phase_turntable");
    const double len = std::numbers::pi * r_t * std::sqrt(1.0 - v * v);
    const LightSpeedPair c = sagnac_light_speeds(std::abs(v));
    const double phi_a = omega * len / c.co + omega * len / c.counter;
    const double phi_b = omega * len / c.counter + omega * len / c.co;
    return {phi_a, phi_b, phi_a - phi_b};
}

} // namespace framedrag::rotating
