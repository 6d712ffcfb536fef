#pragma once

// Single-photon and two-photon (Hong-Ou-Mandel) interference observables.
//
// Conventions: time delays are lengths (c = 1), spectral variables are
// wavenumbers in 1/m. A Wavepacket carries the spectral density |f(w)|^2.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "framedrag/errors.hpp"
#include "framedrag/format.hpp"
#include "framedrag/quadrature.hpp"

namespace framedrag::interference {

struct InterferenceResult {
    double delta_t = 0.0;     // m
    double delta_phi = 0.0;   // rad
    double visibility = 1.0;
    double probability = 0.0;
};

/// Photon spectrum. Three shapes:
///  - Gaussian: |f(w)|^2 = exp(-(w - w0)^2 / sigma^2) / (sqrt(pi) sigma)
///  - Tabulated: piecewise-linear density on a strictly increasing grid
///  - Lines: discrete spectral lines with weights (a comb of deltas)
/// Tabulated and line spectra are renormalized to unit weight on construction.
class Wavepacket {
public:
    struct Gaussian {
        double omega0;
        double sigma;
    };
    struct Tabulated {
        std::vector<double> omega;
        std::vector<double> density;
    };
    struct Lines {
        std::vector<double> omega;
        std::vector<double> weight;
    };

    static Wavepacket gaussian(double omega0, double sigma) {
        detail::require(sigma > 0.0 && std::isfinite(sigma),
                        "Wavepacket: sigma must be > 0, got " + format_exact(sigma));
        detail::require(omega0 > 0.0 && std::isfinite(omega0),
                        "Wavepacket: omega0 must be > 0, got " + format_exact(omega0));
        return Wavepacket(Gaussian{omega0, sigma});
    }

    static Wavepacket tabulated(std::vector<double> omega, std::vector<double> density) {
        detail::require(omega.size() == density.size() && omega.size() >= 2,
                        "Wavepacket: tabulated spectrum needs >= 2 (omega, density) pairs");
        for (std::size_t i = 0; i < omega.size(); ++i) {
            detail::require(std::isfinite(omega[i]) && omega[i] >= 0.0,
                            "Wavepacket: tabulated frequencies must be finite and non-negative");
            detail::require(std::isfinite(density[i]) && density[i] >= 0.0,
                            "Wavepacket: tabulated density must be finite and non-negative");
            if (i > 0)
                detail::require(omega[i] > omega[i - 1], "Wavepacket: tabulated grid must be strictly increasing");
        }
        double norm = 0.0;
        for (std::size_t i = 1; i < omega.size(); ++i)
            norm += 0.5 * (density[i] + density[i - 1]) * (omega[i] - omega[i - 1]);
        detail::require(norm > 0.0 && std::isfinite(norm), "Wavepacket: tabulated spectrum is not normalizable");
        for (double& d : density) d /= norm;
        Wavepacket w(Tabulated{std::move(omega), std::move(density)});
        w.note_renormalization(norm);
        return w;
    }

    static Wavepacket lines(std::vector<double> omega, std::vector<double> weight) {
        detail::require(omega.size() == weight.size() && !omega.empty(),
                        "Wavepacket: line spectrum needs matching, non-empty frequency and weight lists");
        for (std::size_t i = 0; i < omega.size(); ++i) {
            detail::require(std::isfinite(omega[i]) && omega[i] > 0.0, "Wavepacket: line frequencies must be > 0");
            detail::require(std::isfinite(weight[i]) && weight[i] >= 0.0, "Wavepacket: line weights must be >= 0");
        }
        const double norm = std::accumulate(weight.begin(), weight.end(), 0.0);
        detail::require(norm > 0.0, "Wavepacket: line spectrum is not normalizable");
        for (double& x : weight) x /= norm;
        Wavepacket w(Lines{std::move(omega), std::move(weight)});
        w.note_renormalization(norm);
        return w;
    }

    bool is_gaussian() const noexcept { return std::holds_alternative<Gaussian>(shape_); }
    const auto& shape() const noexcept { return shape_; }

    /// Mean wavenumber of |f|^2.
    double omega0() const {
        if (auto g = std::get_if<Gaussian>(&shape_)) return g->omega0;
        return moment(1);
    }

    /// Width parameter in the Gaussian convention: sqrt(2) times the rms width of |f|^2.
    double sigma() const {
        if (auto g = std::get_if<Gaussian>(&shape_)) return g->sigma;
        const double m1 = moment(1);
        return std::sqrt(2.0 * std::max(0.0, moment(2) - m1 * m1));
    }

    /// Spectral density |f(w)|^2 (zero outside a tabulated grid; lines have no density).
    double density(double w) const {
        if (auto g = std::get_if<Gaussian>(&shape_)) {
            const double z = (w - g->omega0) / g->sigma;
            return std::exp(-z * z) / (std::sqrt(std::numbers::pi) * g->sigma);
        }
        if (auto t = std::get_if<Tabulated>(&shape_)) {
            if (w < t->omega.front() || w > t->omega.back()) return 0.0;
            auto it = std::upper_bound(t->omega.begin(), t->omega.end(), w);
            if (it == t->omega.end()) return t->density.back();
            const auto i = static_cast<std::size_t>(it - t->omega.begin());
            const double s = (w - t->omega[i - 1]) / (t->omega[i] - t->omega[i - 1]);
            return (1.0 - s) * t->density[i - 1] + s * t->density[i];
        }
        return 0.0;
    }

    /// Total weight; 1 up to quadrature error for every shape.
    double norm(quadrature::Options opts = {}) const {
        return characteristic(0.0, opts).real();
    }

    /// chi(dt) = integral over positive w of |f(w)|^2 exp(-i w dt).
    std::complex<double> characteristic(double dt, quadrature::Options opts = {}) const {
        if (auto l = std::get_if<Lines>(&shape_)) {
            std::complex<double> sum{0.0, 0.0};
            for (std::size_t i = 0; i < l->omega.size(); ++i)
                sum += l->weight[i] * std::polar(1.0, -l->omega[i] * dt);
            return sum;
        }
        // Integrate against exp(-i (w - wc) dt) so the integrand oscillates at
        // the envelope scale, then restore the carrier phase.
        const double wc = omega0();
        auto re = [&](double w) { return density(w) * std::cos((w - wc) * dt); };
        auto im = [&](double w) { return -density(w) * std::sin((w - wc) * dt); };
        double sre = 0.0, sim = 0.0;
        for (auto [lo, hi] : support()) {
            sre += quadrature::integrate(re, lo, hi, opts).value;
            sim += quadrature::integrate(im, lo, hi, opts).value;
        }
        return std::complex<double>(sre, sim) * std::polar(1.0, -wc * dt);
    }

    /// Non-fatal notices raised during construction (renormalization).
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    using Shape = std::variant<Gaussian, Tabulated, Lines>;

    explicit Wavepacket(Shape s) : shape_(std::move(s)) {}

    void note_renormalization(double norm) {
        if (std::abs(norm - 1.0) > 1e-12)
            warnings_.push_back("spectrum renormalized (input weight " + format_exact(norm) + ")");
    }

    // Integration intervals. Gaussian tails are cut at 12 sigma (weight < 1e-60)
    // and at w = 0 (positive frequencies only).
    std::vector<std::pair<double, double>> support() const {
        std::vector<std::pair<double, double>> out;
        if (auto g = std::get_if<Gaussian>(&shape_)) {
            out.emplace_back(std::max(0.0, g->omega0 - 12.0 * g->sigma), g->omega0 + 12.0 * g->sigma);
        } else if (auto t = std::get_if<Tabulated>(&shape_)) {
            for (std::size_t i = 1; i < t->omega.size(); ++i) out.emplace_back(t->omega[i - 1], t->omega[i]);
        }
        return out;
    }

    double moment(int k) const {
        if (auto l = std::get_if<Lines>(&shape_)) {
            double m = 0.0;
            for (std::size_t i = 0; i < l->omega.size(); ++i) m += l->weight[i] * std::pow(l->omega[i], k);
            return m;
        }
        const auto& t = std::get<Tabulated>(shape_);
        double m = 0.0;
        for (std::size_t i = 1; i < t.omega.size(); ++i) {
            auto f = [&](double w) { return density(w) * std::pow(w, k); };
            m += quadrature::integrate(f, t.omega[i - 1], t.omega[i]).value;
        }
        return m;
    }

    Shape shape_;
    std::vector<std::string> warnings_;
};

/// Mean photon number at one output port of a two-beamsplitter interferometer.
inline double single_photon_prob(double delta_phi) {
    return 0.5 * (1.0 + std::sin(delta_phi));
}

/// Single-photon fringe visibility exp(-(dt sigma)^2).
inline double gaussian_visibility(double delta_t, double sigma) {
    detail::require(sigma > 0.0, "gaussian_visibility: sigma must be > 0, got " + format_exact(sigma));
    const double x = delta_t * sigma;
    return std::exp(-x * x);
}

struct NarrowbandGuard {
    double max_sigma_over_omega0 = 0.2;
    bool override = false;
};

/// Closed-form output probability for a Gaussian photon,
/// 1/2 (1 + exp(-(dphi sigma / w0)^2) sin dphi).
///
/// The closed form extends the Gaussian to negative frequencies; the guard
/// keeps that truncation negligible. Note that integrating the Gaussian
/// density directly gives the exponent divided by 4 (see
/// single_photon_prob_quadrature); the two agree only while
/// (dphi sigma / w0)^2 is small.
inline double single_photon_prob_gaussian(double delta_phi, double omega0, double sigma,
                                          NarrowbandGuard guard = {}) {
    detail::require(omega0 > 0.0 && sigma > 0.0, "single_photon_prob_gaussian: omega0 and sigma must be > 0");
    if (!guard.override && sigma >= guard.max_sigma_over_omega0 * omega0)
        throw GuardViolation("narrowband", "narrowband assumption violated: sigma/omega0 = " +
                                               format_exact(sigma / omega0) + " >= " +
                                               format_exact(guard.max_sigma_over_omega0));
    const double x = delta_phi * sigma / omega0;
    return 0.5 * (1.0 + std::exp(-x * x) * std::sin(delta_phi));
}

/// Output probability by integrating 1/2 (1 + sin(w dt)) against |f(w)|^2,
/// with dt = dphi / w0.
inline double single_photon_prob_quadrature(double delta_phi, const Wavepacket& packet,
                                            quadrature::Options opts = {}) {
    const double dt = delta_phi / packet.omega0();
    const auto chi = packet.characteristic(dt, opts);
    return 0.5 * (packet.norm(opts) - chi.imag());
}

/// HOM coincidence probability for identical Gaussian photons.
inline double hom_coincidence_gaussian(double sigma, double delta_t) {
    detail::require(sigma > 0.0, "hom_coincidence_gaussian: sigma must be > 0, got " + format_exact(sigma));
    const double x = sigma * delta_t;
    return -0.5 * std::expm1(-0.5 * x * x);
}

/// HOM coincidence probability 1/2 - 1/2 |chi(dt)|^2 for identical photons
/// with an arbitrary spectrum.
inline double hom_coincidence_general(const Wavepacket& packet, double delta_t, quadrature::Options opts = {}) {
    const double n = packet.norm(opts);
    if (std::abs(n - 1.0) > 1e-8)
        throw DomainError("hom_coincidence_general: spectrum is not normalized (weight " + format_exact(n) + ")");
    const double overlap = std::norm(packet.characteristic(delta_t, opts));
    return std::clamp(0.5 - 0.5 * overlap, 0.0, 0.5);
}

/// HOM dip visibility 1 - P0/Pmax.
inline double hom_visibility(double p0, double pmax) {
    if (pmax == 0.0) throw DomainError("hom_visibility: undefined for pmax = 0");
    detail::require(p0 >= 0.0 && p0 <= pmax && pmax <= 0.5,
                    "hom_visibility: need 0 <= p0 <= pmax <= 0.5, got p0=" + format_exact(p0) +
                        " pmax=" + format_exact(pmax));
    return 1.0 - p0 / pmax;
}

} // namespace framedrag::interference
