#pragma once

// Physical constants and the SI <-> geometric-unit boundary.
//
// Internally every length is in meters, every frequency or wavenumber in
// inverse meters and every velocity a fraction of c (c = G = 1).

#include <cmath>
#include <string>

#include "framedrag/errors.hpp"
#include "framedrag/format.hpp"

namespace framedrag {

struct PhysicalConstants {
    double c = 299792458.0;            // m/s, exact
    double G = 6.674e-11;              // m^3 kg^-1 s^-2
    double earth_mass = 5.972e24;      // kg
    double earth_radius = 6.371e6;     // m, equatorial surface
    double earth_angular_momentum = 7.07e33; // kg m^2/s
    double solar_mass = 1.989e30;      // kg
    double standard_gravity = 9.81;    // m/s^2, for g-force reporting
};

inline constexpr PhysicalConstants constants{};

inline double schwarzschild_radius(double mass_kg) {
    detail::require(mass_kg >= 0.0, "schwarzschild_radius: mass must be >= 0, got " + format_exact(mass_kg));
    return 2.0 * constants.G * mass_kg / (constants.c * constants.c);
}

inline double spin_parameter(double angular_momentum, double mass_kg) {
    detail::require(mass_kg > 0.0, "spin_parameter: mass must be > 0, got " + format_exact(mass_kg));
    detail::require(angular_momentum >= 0.0,
                    "spin_parameter: angular momentum must be >= 0, got " + format_exact(angular_momentum));
    return angular_momentum / (mass_kg * constants.c);
}

inline double velocity_si_to_natural(double v_m_per_s) {
    detail::require(std::abs(v_m_per_s) < constants.c,
                    "velocity_si_to_natural: |v| must be < c, got " + format_exact(v_m_per_s) + " m/s");
    return v_m_per_s / constants.c;
}

inline double velocity_natural_to_si(double beta) {
    detail::require(std::abs(beta) < 1.0, "velocity_natural_to_si: |v| must be < 1, got " + format_exact(beta));
    return beta * constants.c;
}

/// A rotating mass in geometric units.
///
/// The spin is signed: a < 0 describes the same body rotating the other way,
/// which swaps co- and counter-rotating quantities.
class GravSource {
public:
    GravSource(double rs, double a) : rs_(rs), a_(a) {
        detail::require(std::isfinite(rs) && rs >= 0.0,
                        "GravSource: Schwarzschild radius must be >= 0, got " + format_exact(rs));
        detail::require(std::isfinite(a), "GravSource: spin parameter must be finite");
    }

    static GravSource from_si(double mass_kg, double angular_momentum) {
        if (mass_kg == 0.0) {
            detail::require(angular_momentum == 0.0, "GravSource: massless source cannot carry angular momentum");
            return {0.0, 0.0};
        }
        return {schwarzschild_radius(mass_kg), spin_parameter(angular_momentum, mass_kg)};
    }

    static GravSource earth() {
        return from_si(constants.earth_mass, constants.earth_angular_momentum);
    }

    double rs() const noexcept { return rs_; }
    double a() const noexcept { return a_; }

    /// a <= r_s/2: the horizon Delta = r^2 - r_s r + a^2 = 0 has real roots.
    bool sub_extremal() const noexcept { return std::abs(a_) <= 0.5 * rs_; }

    /// True when r_s and |a| are within 5% of Earth's canonical values.
    bool earth_like() const {
        const GravSource e = earth();
        return std::abs(rs_ - e.rs()) <= 0.05 * e.rs() && std::abs(std::abs(a_) - e.a()) <= 0.05 * e.a();
    }

private:
    double rs_;
    double a_;
};

} // namespace framedrag
