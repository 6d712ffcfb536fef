#pragma once

// Command implementations behind the `framedrag` CLI. Each command reads a
// layered Scenario (defaults < preset < config file < --set overrides),
// validates it through the module constructors and returns a RunReport,
// plus CSV text for the sweep commands.

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>

#include "framedrag/config.hpp"
#include "framedrag/fiber.hpp"
#include "framedrag/interference.hpp"
#include "framedrag/kerr.hpp"
#include "framedrag/report.hpp"
#include "framedrag/rotating.hpp"
#include "framedrag/units.hpp"

namespace framedrag::cli {

inline constexpr int kFig1SchemaVersion = 1;
inline constexpr int kFig3SchemaVersion = 1;
inline constexpr std::string_view kFig1Header = "r_over_rs,phase_rad,visibility";
inline constexpr std::string_view kFig3Header = "omega_rad_s,coincidence_probability";
inline constexpr std::string_view kHomHeader = "delta_t_m,coincidence_probability";

struct RunOptions {
    bool override_guards = false;
};

/// Built-in parameter values for each command.
inline std::string_view command_defaults(std::string_view command) {
    if (command == "kerr")
        return "source.rs = 0.009\nsource.a = 3.9\npoint.r = 6.37e7\nwave.omega0 = 2e6\nwave.sigma = 3.5e3\n";
    if (command == "fig1")
        return "source.rs = 30000\nsource.a_over_rs = 0.25\nwave.omega0 = 2e6\nwave.sigma = 3.5e3\n"
               "wave.sigma_unit = inv_s\nscan.r_max_rs = 1000\nscan.samples = 512\n";
    if (command == "fig3")
        return "turntable.rt = 0.2\nfiber.L = 1e4\nwave.sigma = 12566.370614359172\n"
               "sweep.omega_max = 10\nsweep.samples = 501\n";
    if (command == "equivalence")
        return "source.rs = 30000\nsource.a_over_rs = 0.01\npoint.r_over_rs = 10\n"
               "turntable.rt = 0.2\nequivalence.method = metric\n";
    if (command == "feasibility")
        return "wave.sigma = 3.3e3\nplatform.r = 5\nplatform.windings = 0\nfeasibility.short_pulse_factor = 10\n"
               "turntable.rt = 0.2\nturntable.omega_rad_s = 6.283185307179586\nfiber.L = 1e4\n"
               "fiber.delta_L = 0.01\nfeasibility.target_visibility = 0.5\n";
    if (command == "hom")
        return "wave.omega0 = 2e6\nwave.sigma = 3.5e3\nhom.delta_t = 2e-4\nhom.delta_t_max = 3e-3\nhom.samples = 201\n";
    if (command == "fiber")
        return "turntable.rt = 0.2\nturntable.omega_rad_s = 6.283185307179586\nfiber.L = 1e4\nfiber.delta_L = 0.01\n"
               "wave.sigma = 12566.370614359172\nwave.omega0 = 8e6\n";
    return "";
}

/// Named parameter sets for the worked examples.
inline std::string_view preset(std::string_view name) {
    if (name == "earth-phase")
        return "source.rs = 0.009\nsource.a = 3.9\npoint.r = 6.37e7\nwave.omega0 = 2e6\nwave.sigma = 3.5e3\n";
    if (name == "earth-surface")
        return "source.rs = 0.009\nsource.a = 3.9\npoint.r = 6.37e6\nwave.omega0 = 2e6\nwave.sigma = 3.5e3\n";
    if (name == "earth-timeshift")
        return "source.rs = 0.009\nsource.a = 3.9\npoint.r = 6.37e7\nturntable.rt = 0.2\nequivalence.method = timeshift\n";
    if (name == "earth-mass-bh")
        return "source.rs = 0.009\nsource.a = 3.9\npoint.r = 100\nequivalence.method = metric\n";
    if (name == "bh10")
        return "source.rs = 30000\nsource.a_over_rs = 0.01\npoint.r_over_rs = 10\n";
    if (name == "fig1")
        return "source.rs = 30000\nsource.a_over_rs = 0.25\nwave.sigma = 3.5e3\nwave.sigma_unit = inv_s\n";
    if (name == "picosecond") return "wave.sigma = 3.3e3\nplatform.r = 5\n";
    throw ConfigError("unknown preset '" + std::string(name) + "'");
}

inline config::Scenario make_scenario(std::string_view command, std::string_view preset_name = {},
                                      const std::string& config_path = {},
                                      const std::vector<std::string>& overrides = {}) {
    config::KeyValues kv;
    kv.merge_text(command_defaults(command), "defaults");
    if (!preset_name.empty()) kv.merge_text(preset(preset_name), "preset");
    if (!config_path.empty()) kv.merge_file(config_path);
    for (const auto& o : overrides) kv.merge_assignment(o);
    return config::Scenario(std::move(kv));
}

namespace detail_ {

inline GravSource source_from(config::Scenario& s) {
    double rs = 0.0;
    if (s.has("source.mass_kg")) {
        const double m = s.number("source.mass_kg");
        rs = schwarzschild_radius(m);
        if (s.has("source.J")) return GravSource(rs, spin_parameter(s.number("source.J"), m));
    } else {
        rs = s.number("source.rs");
    }
    if (s.has("source.a_over_rs")) return GravSource(rs, s.number("source.a_over_rs") * rs);
    return GravSource(rs, s.number("source.a", 0.0));
}

inline double radius_from(config::Scenario& s, const GravSource& src) {
    if (s.has("point.r_over_rs")) return s.number("point.r_over_rs") * src.rs();
    return s.number("point.r");
}

inline rotating::TurntableConfig turntable_from(config::Scenario& s, const std::string& radius_key = "turntable.rt",
                                                const std::string& windings_key = "turntable.windings") {
    const double rt = s.number(radius_key);
    const unsigned n = s.count(windings_key, 0);
    if (s.has("turntable.v")) return rotating::TurntableConfig::from_velocity(rt, s.number("turntable.v"), n);
    return rotating::TurntableConfig::from_angular_frequency(rt, s.number("turntable.omega_rad_s", 0.0), n);
}

inline bool near(double x, double target, double rel = 1e-9) { return std::abs(x - target) <= rel * std::abs(target); }

inline void warn_earth_radius(RunReport& rep, const GravSource& src, double r) {
    if (!src.earth_like() || near(r, constants.earth_radius, 0.01)) return;
    rep.warn("input-inconsistency", "Earth-like source evaluated at r=" + format_exact(r) +
                                        " m, which is not the canonical surface radius " +
                                        format_exact(constants.earth_radius) + " m (ratio " +
                                        format_short(r / constants.earth_radius) + ")");
}

/// The dip-centre error quoted for Omega = 2 pi rad/s, R = 20 cm, dL = 1 cm is not what the
/// formula gives; flag it whenever those inputs are used.
inline void flag_dip_shift(RunReport& rep, double omega_rad_s, double radius, double delta_l,
                           const fiber::DipShift& shift) {
    if (!(near(omega_rad_s, 2.0 * std::numbers::pi) && near(radius, 0.2) && near(delta_l, 0.01))) return;
    rep.warn("paper-value-unreproduced",
             "quoted dip-centre error 3e-11 s (and relative 3e-11); formula 2 dL n v^2 gives " +
                 format_short(shift.shift_approx / constants.c) + " s (relative " + format_short(shift.relative_shift) +
                 ")");
}

inline interference::Wavepacket wavepacket_from(config::Scenario& s) {
    if (s.has("wave.spectrum")) return config::load_spectrum(s.text("wave.spectrum", ""));
    return interference::Wavepacket::gaussian(s.number("wave.omega0"), s.number("wave.sigma"));
}

inline std::string csv_row(std::initializer_list<double> xs) {
    std::string out;
    bool first = true;
    for (double x : xs) {
        if (!first) out += ',';
        out += format_exact(x);
        first = false;
    }
    out += '\n';
    return out;
}

} // namespace detail_

inline CommandOutput cmd_kerr(config::Scenario s, const RunOptions& opt = {}) {
    using namespace kerr;
    RunReport rep{"kerr"};
    const GravSource src = detail_::source_from(s);
    const double r = detail_::radius_from(s, src);
    const KerrPoint p(src, r);
    const double len = s.number("path.L", std::numbers::pi * r);
    const double omega = s.number("wave.omega0");
    const double sigma = s.number("wave.sigma");
    const WeakFieldGuard guard{0.01, opt.override_guards};

    rep.add("c_co_full", light_speed_full(p, Direction::co), "c", "kerr-full-speed");
    rep.add("c_counter_full", light_speed_full(p, Direction::counter), "c", "kerr-full-speed");
    const double dt_full = time_delay_full(p, len);
    rep.add("delta_t_full", dt_full, "m", "kerr-full-phase");
    rep.add("phase_full_rad", kerr_phase_difference(p, len, omega, PhaseMode::full), "rad", "kerr-full-phase");

    double dt = dt_full;
    try {
        rep.add("c_co_weak", light_speed_weak(p, Direction::co, guard), "c", "kerr-weak-speed");
        rep.add("c_counter_weak", light_speed_weak(p, Direction::counter, guard), "c", "kerr-weak-speed");
        const double dphi = kerr_phase_difference(p, len, omega, PhaseMode::weak, guard);
        rep.add("phase_weak_rad", dphi, "rad", "kerr-weak-phase");
        dt = kerr_time_delay(p, len);
        rep.add("delta_t_kerr", dt, "m", "kerr-time-delay");
        rep.add("single_photon_probability", interference::single_photon_prob(dphi), "", "single-photon-probability");
        const RoundTrip rt = roundtrip_mean_speed(p, guard);
        rep.add("roundtrip_mean_speed", rt.mean, "c", "kerr-roundtrip-mean");
        rep.add("local_two_way_speed", rt.local_two_way, "c", "kerr-roundtrip-mean");
        if (opt.override_guards) rep.warn("guard-override", "weak-field guard overridden");
    } catch (const GuardViolation& e) {
        rep.warn("weak-field", std::string(e.what()) + "; weak-field outputs omitted, visibility uses the full delay");
    }
    const double x = dt * sigma;
    rep.add("visibility", interference::gaussian_visibility(dt, sigma), "", "single-photon-visibility");
    rep.add("one_minus_visibility", -std::expm1(-x * x), "", "single-photon-visibility");
    if (src.sub_extremal() && src.rs() > 0.0) rep.add("horizon_radius", horizon_radius(src), "m", "kerr-horizon");
    detail_::warn_earth_radius(rep, src, r);
    rep.inputs = s.echoed();
    return {std::move(rep), std::nullopt};
}

inline CommandOutput cmd_fig1(config::Scenario s, const RunOptions& = {}) {
    RunReport rep{"fig1"};
    const GravSource src = detail_::source_from(s);
    kerr::ScanOptions so;
    so.omega = s.number("wave.omega0");
    const double sigma_in = s.number("wave.sigma");
    const std::string unit = s.text("wave.sigma_unit", "inv_m");
    if (unit == "inv_s") {
        so.sigma = sigma_in / constants.c;
        rep.note("wave.sigma given in 1/s, divided by c");
    } else if (unit == "inv_m") {
        so.sigma = sigma_in;
    } else {
        throw ConfigError("wave.sigma_unit must be inv_m or inv_s, got '" + unit + "'");
    }
    so.r_min_rs = s.number("scan.r_min_rs", 0.0);
    so.r_max_rs = s.number("scan.r_max_rs");
    so.samples = s.count("scan.samples", 512);

    const auto rows = kerr::blackhole_scan(src, so);
    std::string csv(kFig1Header);
    csv += '\n';
    for (const auto& row : rows) csv += detail_::csv_row({row.r_over_rs, row.phase_rad, row.visibility});

    rep.add("horizon_r_over_rs", kerr::horizon_radius(src) / src.rs(), "r_s", "kerr-horizon");
    rep.add("r_min_over_rs", rows.front().r_over_rs, "r_s", "kerr-horizon");
    rep.add("visibility_innermost", rows.front().visibility, "", "single-photon-visibility");
    rep.add("visibility_outermost", rows.back().visibility, "", "single-photon-visibility");
    if (src.a() != 0.0) {
        try {
            rep.add("crossover_r_over_rs_v_half", kerr::visibility_crossover(src, so.sigma), "r_s",
                    "single-photon-visibility");
        } catch (const DomainError&) {
            rep.note("visibility does not cross 1/2 outside the static limit");
        }
    }
    rep.add("samples", static_cast<double>(rows.size()), "", "kerr-full-phase");
    rep.inputs = s.echoed();
    return {std::move(rep), std::move(csv)};
}

/// Turntable delay 4 v L / (1 - v^2) at angular frequency Omega.
inline double fig3_delay(double omega_rad_s, double radius, double length) {
    const double v = omega_rad_s * radius / constants.c;
    return 4.0 * v * length / (1.0 - v * v);
}

/// Angular frequency where the coincidence probability reaches 1/4:
/// sigma dt = sqrt(2 ln 2), solved for v in dt = 4 v L/(1 - v^2).
inline double fig3_half_depth_omega(double sigma, double radius, double length) {
    const double dt = std::sqrt(2.0 * std::numbers::ln2) / sigma;
    const double v = 2.0 * dt / (4.0 * length + std::sqrt(16.0 * length * length + 4.0 * dt * dt));
    return v * constants.c / radius;
}

inline CommandOutput cmd_fig3(config::Scenario s, const RunOptions& = {}) {
    RunReport rep{"fig3"};
    const double radius = s.number("turntable.rt");
    const double len = s.number("fiber.L");
    const double sigma = s.number("wave.sigma");
    const double omega_max = s.number("sweep.omega_max");
    const unsigned n = s.count("sweep.samples", 501);
    detail::require(radius > 0.0 && len > 0.0 && sigma > 0.0, "fig3: R, L and sigma must be > 0");
    detail::require(omega_max > 0.0 && n >= 2, "fig3: need omega_max > 0 and >= 2 samples");
    detail::require(omega_max * radius < constants.c, "fig3: omega_max * R must be below c");

    std::string csv(kFig3Header);
    csv += '\n';
    for (unsigned i = 0; i < n; ++i) {
        const double om = omega_max * static_cast<double>(i) / static_cast<double>(n - 1);
        csv += detail_::csv_row({om, interference::hom_coincidence_gaussian(sigma, fig3_delay(om, radius, len))});
    }
    const double half = fig3_half_depth_omega(sigma, radius, len);
    rep.add("half_depth_omega_rad_s", half, "rad/s", "hom-gaussian");
    rep.add("p_at_omega_max", interference::hom_coincidence_gaussian(sigma, fig3_delay(omega_max, radius, len)), "",
            "hom-gaussian");
    rep.inputs = s.echoed();
    return {std::move(rep), std::move(csv)};
}

inline CommandOutput cmd_equivalence(config::Scenario s, const RunOptions& = {}) {
    using namespace rotating;
    RunReport rep{"equivalence"};
    const GravSource src = detail_::source_from(s);
    const double r = detail_::radius_from(s, src);
    const std::string method = s.text("equivalence.method", "metric");
    EquivalenceResult res = [&] {
        if (method == "metric") return equivalence_velocity_metric(src, r);
        if (method == "timeshift") return equivalence_velocity_timeshift(src, r, s.number("turntable.rt"));
        throw ConfigError("equivalence.method must be metric or timeshift, got '" + method + "'");
    }();
    const std::string anchor = method == "metric" ? "equivalence-metric" : "equivalence-timeshift";
    rep.add("v", res.v, "c", anchor);
    rep.add("v_m_per_s", res.v_m_per_s(), "m/s", anchor);
    rep.add("turntable_radius", res.r_t, "m", anchor);
    rep.add("omega_rad_s", res.angular_frequency(), "rad/s", anchor);
    rep.add("g_force", res.g_force(), "g", "g-force");
    if (res.method == EquivalenceMethod::metric) {
        rep.add("v_approx_m_per_s", equivalence_velocity_metric_approx(src, r) * constants.c, "m/s",
                "equivalence-metric-approx");
        rep.add("time_rescale_factor", time_rescale_factor(src, r, res.v), "", "time-rescale");
        if (src.earth_like() && detail_::near(r, 100.0))
            rep.warn("paper-value-unreproduced", "quoted 110 m/s for an Earth-mass black hole at r = 100 m; formula gives " +
                                                     format_short(res.v_m_per_s()) + " m/s");
    } else {
        rep.add("turntable_roundtrip_delay", res.turntable_delay, "m", "turntable-roundtrip");
        rep.add("kerr_roundtrip_delay", res.kerr_delay, "m", "kerr-roundtrip");
    }
    detail_::warn_earth_radius(rep, src, r);
    rep.inputs = s.echoed();
    return {std::move(rep), std::nullopt};
}

/// Smallest winding count N with exp(-4 v^2/(1-v^2) (2N+1)^2 pi^2 R^2 sigma^2) <= target.
inline unsigned windings_for_visibility(double v, double radius, double sigma, double target) {
    detail::require(target > 0.0 && target < 1.0, "windings_for_visibility: target must be in (0, 1)");
    detail::require(v > 0.0 && v < 1.0, "windings_for_visibility: need 0 < v < 1");
    const double per = 4.0 * v * v / (1.0 - v * v) * std::numbers::pi * std::numbers::pi * radius * radius * sigma * sigma;
    const double odd = std::sqrt(-std::log(target) / per);
    const double n = std::ceil((odd - 1.0) / 2.0);
    detail::require(n < 4e9, "windings_for_visibility: required winding count overflows");
    return n <= 0.0 ? 0u : static_cast<unsigned>(n);
}

inline CommandOutput cmd_feasibility(config::Scenario s, const RunOptions& = {}) {
    RunReport rep{"feasibility"};
    const double sigma = s.number("wave.sigma");
    const double platform_r = s.number("platform.r");
    const unsigned platform_n = s.count("platform.windings", 0);
    const double factor = s.number("feasibility.short_pulse_factor");
    const auto vmin = rotating::min_velocity_for_visibility(platform_r, sigma, platform_n);
    const auto vshort = rotating::min_velocity_for_visibility(platform_r, sigma * factor, platform_n);
    rep.add("v_min", vmin.exact, "c", "min-velocity");
    rep.add("v_min_m_per_s", vmin.exact_m_per_s(), "m/s", "min-velocity");
    rep.add("v_min_approx_m_per_s", vmin.approx_m_per_s(), "m/s", "min-velocity");
    rep.add("g_force_at_v_min", rotating::g_force(vmin.exact, platform_r), "g", "g-force");
    rep.add("v_min_short_pulse_m_per_s", vshort.exact_m_per_s(), "m/s", "min-velocity");
    rep.add("g_force_short_pulse", rotating::g_force(vshort.exact, platform_r), "g", "g-force");

    const auto table = detail_::turntable_from(s);
    const double len = s.number("fiber.L");
    const double dl = s.number("fiber.delta_L");
    rep.add("turntable_v", table.v(), "c", "sagnac-speeds");
    rep.add("coherence_length", fiber::coherence_length_required(len, table.angular_frequency(), table.radius()), "m",
            "coherence-length");
    const fiber::FiberArms arms(len, dl, config::refractive_model(s), table.v());
    const auto shift = fiber::hom_dip_shift(arms);
    rep.add("dip_control_delay", shift.control_delay, "m", "hom-dip-shift");
    rep.add("dip_shift_exact", shift.shift_exact, "m", "hom-dip-shift");
    rep.add("dip_shift_approx", shift.shift_approx, "m", "hom-dip-shift");
    rep.add("dip_shift_seconds", shift.shift_exact / constants.c, "s", "hom-dip-shift");
    rep.add("dip_shift_relative", shift.relative_shift, "", "hom-dip-shift");
    const double target = s.number("feasibility.target_visibility");
    if (table.v() > 0.0)
        rep.add("windings_for_target_visibility",
                static_cast<double>(windings_for_visibility(table.v(), table.radius(), sigma, target)), "",
                "windings-for-visibility");
    detail_::flag_dip_shift(rep, table.angular_frequency(), table.radius(), dl, shift);
    rep.inputs = s.echoed();
    return {std::move(rep), std::nullopt};
}

inline CommandOutput cmd_hom(config::Scenario s, const RunOptions& = {}) {
    RunReport rep{"hom"};
    const auto packet = detail_::wavepacket_from(s);
    for (const auto& w : packet.warnings()) rep.warn("spectrum-renormalized", w);
    const double dt = s.number("hom.delta_t");
    const double dt_max = s.number("hom.delta_t_max");
    const unsigned n = s.count("hom.samples", 201);
    detail::require(dt_max > 0.0 && n >= 2, "hom: need delta_t_max > 0 and >= 2 samples");

    const double p = interference::hom_coincidence_general(packet, dt);
    rep.add("coincidence_probability", p, "", "hom-general");
    if (packet.is_gaussian())
        rep.add("coincidence_probability_closed_form", interference::hom_coincidence_gaussian(packet.sigma(), dt), "",
                "hom-gaussian");
    const double p0 = interference::hom_coincidence_general(packet, 0.0);
    const double pmax = interference::hom_coincidence_general(packet, dt_max);
    rep.add("p0", p0, "", "hom-general");
    rep.add("pmax", pmax, "", "hom-general");
    if (pmax > 0.0) rep.add("dip_visibility", interference::hom_visibility(p0, std::max(p0, pmax)), "", "hom-visibility");

    std::string csv(kHomHeader);
    csv += '\n';
    for (unsigned i = 0; i < n; ++i) {
        const double t = dt_max * static_cast<double>(i) / static_cast<double>(n - 1);
        csv += detail_::csv_row({t, interference::hom_coincidence_general(packet, t)});
    }
    rep.inputs = s.echoed();
    return {std::move(rep), std::move(csv)};
}

inline CommandOutput cmd_fiber(config::Scenario s, const RunOptions& = {}) {
    using fiber::DerivativeForm;
    RunReport rep{"fiber"};
    const auto model = config::refractive_model(s);
    const auto table = detail_::turntable_from(s);
    const double v = table.v();
    const double k = s.number("fiber.k", model.k0());
    const double len = s.number("fiber.L");
    const double dl = s.number("fiber.delta_L");
    const double sigma = s.number("wave.sigma");
    const double omega0 = s.number("wave.omega0");

    const double n = model.n(k);
    rep.add("n", n, "", "refractive-model");
    rep.add("dn_dk", model.dn(k), "m", "refractive-model");
    rep.add("d2n_dk2", model.d2n(k), "m^2", "refractive-model");
    rep.add("phase_velocity_co", fiber::phase_velocity_moving(n, v, Direction::co), "c", "fiber-phase-velocity");
    rep.add("phase_velocity_counter", fiber::phase_velocity_moving(n, v, Direction::counter), "c", "fiber-phase-velocity");
    rep.add("effective_velocity_co", fiber::effective_lab_velocity(n, v, Direction::co), "c", "fiber-effective-velocity");
    rep.add("effective_velocity_counter", fiber::effective_lab_velocity(n, v, Direction::counter), "c",
            "fiber-effective-velocity");
    for (auto [form, tag] : {std::pair{DerivativeForm::printed, "printed"}, std::pair{DerivativeForm::exact, "exact"}}) {
        const std::string t(tag);
        rep.add("group_velocity_co_" + t, fiber::group_velocity_moving(model, k, v, Direction::co, form), "c",
                "group-velocity");
        rep.add("group_velocity_counter_" + t, fiber::group_velocity_moving(model, k, v, Direction::counter, form), "c",
                "group-velocity");
        rep.add("gvd_co_" + t, fiber::gvd_moving(model, k, v, Direction::co, form), "m", "gvd");
        rep.add("gvd_counter_" + t, fiber::gvd_moving(model, k, v, Direction::counter, form), "m", "gvd");
    }
    const auto coeffs = fiber::dispersion_coefficients(model, k, v);
    rep.add("delta_alpha", coeffs.delta_alpha(), "", "dispersion-coefficients");
    rep.add("beta_sum", coeffs.beta_sum(), "m", "dispersion-coefficients");
    rep.add("broadening_factor_co", fiber::dispersive_broadening_factor(coeffs.beta_plus, len, sigma), "", "broadening");

    const fiber::FiberArms arms(len, dl, model, v);
    rep.add("fiber_phase_difference", fiber::fiber_phase_difference(arms, omega0), "rad", "fiber-phase-difference");
    const auto gp = fiber::corrected_group_phase(omega0, v, len, model);
    rep.add("group_phase", gp.phase, "rad", "corrected-group-phase");
    rep.add("group_phase_correction", gp.correction, "", "corrected-group-phase");
    rep.add("coincidence_probability", fiber::downconverted_coincidence(sigma, coeffs, len), "",
            "downconverted-coincidence");
    rep.add("coincidence_probability_turntable_form",
            fiber::downconverted_coincidence_turntable(sigma, v, len, model.dn(model.k0())), "", "turntable-coincidence");
    const auto shift = fiber::hom_dip_shift(arms);
    rep.add("dip_shift_exact", shift.shift_exact, "m", "hom-dip-shift");
    detail_::flag_dip_shift(rep, table.angular_frequency(), table.radius(), dl, shift);
    rep.inputs = s.echoed();
    return {std::move(rep), std::nullopt};
}

} // namespace framedrag::cli
