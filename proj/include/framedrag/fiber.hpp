#pragma once

// Light in a moving dispersive medium (fiber wound on a turntable).
//
// Wavenumbers k and frequencies w are both in 1/m; velocities are fractions
// of c. Direction::co takes the upper sign in (n -+ v).

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>

#include "framedrag/errors.hpp"
#include "framedrag/format.hpp"
#include "framedrag/kerr.hpp"
#include "framedrag/quadrature.hpp"
#include "framedrag/units.hpp"

namespace framedrag::fiber {

/// n(k) with analytic n'(k), n''(k), a reference wavenumber and a validity window.
class RefractiveModel {
public:
    using Fn = std::function<double(double)>;

    RefractiveModel(std::string name, Fn n, Fn dn, Fn d2n, double k0, double k_min, double k_max)
        : name_(std::move(name)), n_(std::move(n)), dn_(std::move(dn)), d2n_(std::move(d2n)),
          k0_(k0), k_min_(k_min), k_max_(k_max) {
        detail::require(k_min > 0.0 && k_max > k_min, "RefractiveModel: need 0 < k_min < k_max");
        detail::require(k0 >= k_min && k0 <= k_max, "RefractiveModel: k0 outside validity window");
    }

    /// n(k) = A/k + B.
    static RefractiveModel inverse_wavenumber(double a, double b, double k0, double k_min, double k_max) {
        RefractiveModel m(
            "A/k+B", [a, b](double k) { return a / k + b; }, [a](double k) { return -a / (k * k); },
            [a](double k) { return 2.0 * a / (k * k * k); }, k0, k_min, k_max);
        m.a_ = a;
        m.b_ = b;
        // n is monotone in k, so checking the window edges suffices.
        detail::require(m.n_(k_min) >= 1.0 && m.n_(k_max) >= 1.0,
                        "RefractiveModel: n(k) must be at least 1 over the validity window");
        return m;
    }

    /// Fused silica near 1 um: n(k) = 1e5/k + 1.44 about k0 = 8e6 1/m.
    static RefractiveModel fused_silica() { return inverse_wavenumber(1e5, 1.44, 8e6, 4e6, 1.6e7); }

    static RefractiveModel constant(double n, double k0 = 8e6) {
        detail::require(n >= 1.0, "RefractiveModel: constant index must be >= 1");
        return inverse_wavenumber(0.0, n, k0, k0 / 100.0, k0 * 100.0);
    }

    double n(double k) const { return n_(checked(k)); }
    double dn(double k) const { return dn_(checked(k)); }
    double d2n(double k) const { return d2n_(checked(k)); }
    double index() const { return n_(k0_); }

    double k0() const noexcept { return k0_; }
    double k_min() const noexcept { return k_min_; }
    double k_max() const noexcept { return k_max_; }
    const std::string& name() const noexcept { return name_; }
    double coefficient_a() const noexcept { return a_; }
    double coefficient_b() const noexcept { return b_; }

private:
    double checked(double k) const {
        if (!(k >= k_min_ && k <= k_max_))
            throw DomainError("RefractiveModel: k=" + format_exact(k) + " outside validity window [" +
                              format_exact(k_min_) + ", " + format_exact(k_max_) + "]");
        return k;
    }

    std::string name_;
    Fn n_, dn_, d2n_;
    double k0_, k_min_, k_max_;
    double a_ = 0.0, b_ = 0.0;
};

namespace detail_ {
inline double upper(Direction d) { return d == Direction::co ? 1.0 : -1.0; }
inline void check_nv(double n, double v, const char* op) {
    detail::require(n >= 1.0, std::string(op) + ": n must be >= 1, got " + format_exact(n));
    detail::require(std::abs(v) < 1.0, std::string(op) + ": |v| must be < 1, got " + format_exact(v));
}
} // namespace detail_

/// Relativistic composition of the medium speed 1/n with the medium motion:
/// co (1/n - v)/(1 - v/n), counter (1/n + v)/(1 + v/n).
inline double phase_velocity_moving(double n, double v, Direction d) {
    detail_::check_nv(n, v, "phase_velocity_moving");
    const double s = detail_::upper(d);
    return (1.0 / n - s * v) / (1.0 - s * v / n);
}

/// Lab-frame effective speed (1 - v^2)/(n -+ v).
inline double effective_lab_velocity(double n, double v, Direction d) {
    detail_::check_nv(n, v, "effective_lab_velocity");
    return (1.0 - v * v) / (n - detail_::upper(d) * v);
}

/// Two fiber arms of lengths L and L + delta_L moving with tangential speed v.
struct FiberArms {
    double length;
    double delta_length;
    RefractiveModel model;
    double v;

    FiberArms(double l, double dl, RefractiveModel m, double v_)
        : length(l), delta_length(dl), model(std::move(m)), v(v_) {
        detail::require(l > 0.0, "FiberArms: L must be > 0, got " + format_exact(l));
        detail::require(std::abs(dl) < 0.1 * l, "FiberArms: |delta_L| must be < 0.1 L");
        detail::require(std::abs(v_) < 1.0, "FiberArms: |v| must be < 1");
    }
};

/// 2 v L w0/(1 - v^2) + w0 dL n/(1 - v^2); index-free when dL = 0.
inline double fiber_phase_difference(const FiberArms& arms, double omega0) {
    const double v = arms.v;
    const double g = 1.0 - v * v;
    return 2.0 * v * arms.length * omega0 / g + omega0 * arms.delta_length * arms.model.index() / g;
}

struct DipShift {
    double control_delay;   // -2 dL n, zeroes the dip at v = 0
    double delta_t_total;   // 4vL/(1-v^2) + 2 dL n/(1-v^2) + control
    double shift_exact;     // 2 dL n v^2/(1-v^2)
    double shift_approx;    // 2 dL n v^2
    double relative_shift;  // shift_exact over the leading 4vL/(1-v^2) term
};

inline DipShift hom_dip_shift(const FiberArms& arms) {
    const double v = arms.v, n = arms.model.index(), dl = arms.delta_length;
    const double g = 1.0 - v * v;
    const double control = -2.0 * dl * n;
    const double leading = 4.0 * v * arms.length / g;
    const double shift = 2.0 * dl * n * v * v / g;
    return {control, leading + 2.0 * dl * n / g + control, shift, 2.0 * dl * n * v * v,
            leading != 0.0 ? shift / leading : 0.0};
}

/// Coherence length 4 pi L' Omega R / c needed for significant visibility loss.
inline double coherence_length_required(double total_length, double omega_rad_s, double radius) {
    detail::require(total_length > 0.0 && radius > 0.0 && omega_rad_s >= 0.0,
                    "coherence_length_required: L' and R must be > 0, Omega >= 0");
    return 4.0 * std::numbers::pi * total_length * omega_rad_s * radius / constants.c;
}

inline double fiber_length_for_coherence(double coherence_length, double omega_rad_s, double radius) {
    detail::require(coherence_length > 0.0 && omega_rad_s > 0.0 && radius > 0.0,
                    "fiber_length_for_coherence: inputs must be > 0");
    return coherence_length * constants.c / (4.0 * std::numbers::pi * omega_rad_s * radius);
}

inline double angular_frequency_for_coherence(double coherence_length, double total_length, double radius) {
    detail::require(coherence_length > 0.0 && total_length > 0.0 && radius > 0.0,
                    "angular_frequency_for_coherence: inputs must be > 0");
    return coherence_length * constants.c / (4.0 * std::numbers::pi * total_length * radius);
}

/// Which closed form to use for dw/dk and d2w/dk2.
///  printed: v_g = v_p (1 - n'/(n -+ v)) and the matching second-order
///           expression, as commonly quoted (k factors absent);
///  exact:   derivatives of w(k) = k (1 - v^2)/(n(k) -+ v).
enum class DerivativeForm { printed, exact };

inline double group_velocity_moving(const RefractiveModel& m, double k, double v, Direction d,
                                    DerivativeForm form = DerivativeForm::printed) {
    const double n = m.n(k), dn = m.dn(k);
    const double den = n - detail_::upper(d) * v;
    const double vp = effective_lab_velocity(n, v, d);
    const double scale = form == DerivativeForm::exact ? k : 1.0;
    return vp * (1.0 - scale * dn / den);
}

inline double gvd_moving(const RefractiveModel& m, double k, double v, Direction d,
                         DerivativeForm form = DerivativeForm::printed) {
    const double n = m.n(k), dn = m.dn(k), d2n = m.d2n(k);
    const double den = n - detail_::upper(d) * v;
    const double g = 1.0 - v * v;
    if (form == DerivativeForm::printed) {
        const double vg = group_velocity_moving(m, k, v, d, form);
        const double vp = effective_lab_velocity(n, v, d);
        return vg - vp - d2n * g / (den * den) + 2.0 * dn * dn * g / (den * den * den);
    }
    // w = k u(k), u = g/den: w'' = 2 u' + k u''.
    const double u1 = -g * dn / (den * den);
    const double u2 = -g * d2n / (den * den) + 2.0 * g * dn * dn / (den * den * den);
    return 2.0 * u1 + k * u2;
}

struct GroupPhase {
    double phase;        // 4 w0 v L/(1-v^2) (1 + correction)
    double correction;   // n'(k0) v/(1 - v^2)
};

inline GroupPhase corrected_group_phase(double omega0, double v, double path_length, const RefractiveModel& m) {
    detail::require(std::abs(v) < 1.0, "corrected_group_phase: |v| must be < 1");
    detail::require(path_length > 0.0, "corrected_group_phase: L must be > 0");
    const double g = 1.0 - v * v;
    const double corr = m.dn(m.k0()) * v / g;
    return {4.0 * omega0 * v * path_length / g * (1.0 + corr), corr};
}

/// Expansion k(w) = k0 + alpha (w - w0) + beta (w - w0)^2 per propagation direction.
struct DispersionCoefficients {
    double alpha_plus;
    double alpha_minus;
    double beta_plus;
    double beta_minus;

    double delta_alpha() const noexcept { return alpha_plus - alpha_minus; }
    double beta_sum() const noexcept { return beta_plus + beta_minus; }
};

/// alpha = 1/v_g and beta = d2k/dw2 = -(d2w/dk2)/v_g^3 at wavenumber k.
inline DispersionCoefficients dispersion_coefficients(const RefractiveModel& m, double k, double v,
                                                      DerivativeForm form = DerivativeForm::printed) {
    auto coeffs = [&](Direction d) {
        const double vg = group_velocity_moving(m, k, v, d, form);
        const double w2 = gvd_moving(m, k, v, d, form);
        return std::pair{1.0 / vg, -w2 / (vg * vg * vg)};
    };
    const auto [ap, bp] = coeffs(Direction::co);
    const auto [am, bm] = coeffs(Direction::counter);
    return {ap, am, bp, bm};
}

/// Temporal broadening factor sqrt(1 + (2 beta L sigma^2)^2) of a transform-limited
/// Gaussian pulse. Diagnostic only: detectors integrate over a window longer than
/// the broadened pulse.
inline double dispersive_broadening_factor(double beta, double path_length, double sigma) {
    const double x = 2.0 * beta * path_length * sigma * sigma;
    return std::sqrt(1.0 + x * x);
}

/// Coincidence kernel for the anti-correlated pair |w0 + w'>_A |w0 - w'>_B:
/// 1/4 |f(w')|^2 |exp(i theta_1) - exp(i theta_2)|^2 with
/// theta_1 = L (k_A(w0 + w') + k_B(w0 - w')), theta_2 = L (k_B(w0 + w') + k_A(w0 - w')).
/// Phases are accumulated in long double.
inline double coincidence_kernel(double detuning, double density, const DispersionCoefficients& c,
                                 double path_length) {
    using ld = long double;
    const ld w = detuning, L = path_length;
    auto k_rel = [](ld alpha, ld beta, ld dw) { return alpha * dw + beta * dw * dw; };
    const ld th1 = L * (k_rel(c.alpha_plus, c.beta_plus, w) + k_rel(c.alpha_minus, c.beta_minus, -w));
    const ld th2 = L * (k_rel(c.alpha_minus, c.beta_minus, w) + k_rel(c.alpha_plus, c.beta_plus, -w));
    const std::complex<ld> diff = std::polar(1.0L, th1) - std::polar(1.0L, th2);
    return static_cast<double>(0.25L * static_cast<ld>(density) * std::norm(diff));
}

/// Coincidence probability for a Gaussian pair spectrum
/// |f(w')|^2 = exp(-w'^2/sigma^2)/(sqrt(pi) sigma), by adaptive quadrature of the kernel.
inline double downconverted_coincidence(double sigma, const DispersionCoefficients& c, double path_length,
                                        quadrature::Options opts = {}) {
    detail::require(sigma > 0.0, "downconverted_coincidence: sigma must be > 0");
    detail::require(path_length > 0.0, "downconverted_coincidence: L must be > 0");
    auto f = [&](double w) {
        const double z = w / sigma;
        const double dens = std::exp(-z * z) / (std::sqrt(std::numbers::pi) * sigma);
        return coincidence_kernel(w, dens, c, path_length);
    };
    // The density vanishes below 1e-60 past 12 sigma.
    return quadrature::integrate(f, -12.0 * sigma, 12.0 * sigma, opts).value;
}

/// Closed form 1/2 (1 - exp(-sigma^2 (delta_alpha L)^2)) of the Gaussian kernel integral.
inline double downconverted_coincidence_gaussian(double sigma, double delta_alpha_l) {
    const double x = sigma * delta_alpha_l;
    return -0.5 * std::expm1(-x * x);
}

/// The same probability written in the turntable parameters,
/// 1/2 (1 - exp(-4 sigma^2 (v L/(1 - v^2) (1 + n' v/(1 - v^2)))^2)).
inline double downconverted_coincidence_turntable(double sigma, double v, double path_length, double dn) {
    const double g = 1.0 - v * v;
    const double x = v * path_length / g * (1.0 + dn * v / g);
    return -0.5 * std::expm1(-4.0 * sigma * sigma * x * x);
}

} // namespace framedrag::fiber
