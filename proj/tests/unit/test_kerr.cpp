#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "framedrag/kerr.hpp"
#include "framedrag/verify.hpp"
#include "frozen_values.hpp"

using namespace framedrag;
using namespace framedrag::kerr;

namespace {

const GravSource kEarth(0.009, 3.9);

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST(Units, SchwarzschildRadiusOfEarthMass) {
    EXPECT_NEAR(schwarzschild_radius(constants.earth_mass), 8.87e-3, 1e-5);
    EXPECT_NEAR(schwarzschild_radius(10 * constants.solar_mass), 2.95e4, 1e2);
    EXPECT_THROW(schwarzschild_radius(-1.0), DomainError);
}

TEST(Units, SpinParameterAndVelocityConversions) {
    EXPECT_NEAR(spin_parameter(constants.earth_angular_momentum, constants.earth_mass), 3.95, 0.01);
    EXPECT_DOUBLE_EQ(velocity_natural_to_si(velocity_si_to_natural(1234.5)), 1234.5);
    EXPECT_THROW(velocity_si_to_natural(constants.c), DomainError);
    EXPECT_THROW(spin_parameter(1.0, 0.0), DomainError);
}

TEST(Units, GravSourceClassification) {
    EXPECT_TRUE(GravSource::earth().earth_like());
    EXPECT_TRUE(kEarth.earth_like());
    EXPECT_FALSE(kEarth.sub_extremal());
    EXPECT_TRUE(GravSource(30000, 7500).sub_extremal());
    EXPECT_TRUE(GravSource(1.0, 0.5).sub_extremal());
    EXPECT_THROW(GravSource(-1.0, 0.0), DomainError);
    EXPECT_THROW(GravSource::from_si(0.0, 1.0), DomainError);
}

TEST(KerrMetric, EquatorialComponents) {
    const KerrPoint p(GravSource(1.0, 0.25), 4.0);
    const auto g = metric_components_kerr(p);
    EXPECT_DOUBLE_EQ(g.g_tt, 0.75);
    EXPECT_DOUBLE_EQ(g.g_tphi, -0.0625);
    EXPECT_DOUBLE_EQ(g.g_phiphi, -16.0);
    EXPECT_LT(g.determinant(), 0.0);
    const auto flat = metric_components_kerr(KerrPoint(GravSource(0.0, 0.0), 2.0));
    EXPECT_DOUBLE_EQ(flat.g_tt, 1.0);
    EXPECT_DOUBLE_EQ(flat.g_tphi, 0.0);
}

TEST(KerrMetric, PointRejectsHorizonInterior) {
    EXPECT_THROW(KerrPoint(GravSource(30000, 7500), 20000), DomainError);
    EXPECT_THROW(KerrPoint(kEarth, 0.0), DomainError);
    EXPECT_THROW(KerrPoint(kEarth, 0.001), DomainError);
    EXPECT_NO_THROW(KerrPoint(GravSource(30000, 7500), 28000));
    try {
        KerrPoint(GravSource(30000, 7500), 20000);
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("r+="), std::string::npos);
    }
}

TEST(KerrSpeeds, FullSolutionMatchesExtendedPrecision) {
    const KerrPoint p(kEarth, 6.37e7);
    EXPECT_LT(rel(light_speed_full(p, Direction::co), frozen::kEarthCoFull), 1e-15);
    EXPECT_LT(rel(light_speed_full(p, Direction::counter), frozen::kEarthCounterFull), 1e-15);
}

TEST(KerrSpeeds, TrivialLimits) {
    const KerrPoint flat(GravSource(0.0, 0.0), 10.0);
    EXPECT_DOUBLE_EQ(light_speed_full(flat, Direction::co), 1.0);
    EXPECT_DOUBLE_EQ(light_speed_full(flat, Direction::counter), -1.0);
    const KerrPoint schw(GravSource(1.0, 0.0), 4.0);
    EXPECT_DOUBLE_EQ(light_speed_full(schw, Direction::co), std::sqrt(0.75));
    EXPECT_DOUBLE_EQ(-light_speed_full(schw, Direction::counter), std::sqrt(0.75));
}

TEST(KerrSpeeds, SpinReversalSwapsDirections) {
    verify::Sampler s(11);
    for (int i = 0; i < 200; ++i) {
        const double rs = s.log_uniform(1e-3, 1e4);
        const double a = s.uniform(0.0, 0.5) * rs;
        const double r = rs * s.log_uniform(1.5, 1e8);
        const KerrPoint p(GravSource(rs, a), r), q(GravSource(rs, -a), r);
        EXPECT_DOUBLE_EQ(light_speed_full(p, Direction::co), -light_speed_full(q, Direction::counter));
        EXPECT_DOUBLE_EQ(light_speed_full(p, Direction::counter), -light_speed_full(q, Direction::co));
    }
}

TEST(KerrSpeeds, WeakFieldGuard) {
    const KerrPoint near(GravSource(30000, 7500), 1e5);
    EXPECT_THROW(light_speed_weak(near, Direction::co), GuardViolation);
    EXPECT_NO_THROW(light_speed_weak(near, Direction::co, WeakFieldGuard{0.01, true}));
    try {
        light_speed_weak(near, Direction::co);
    } catch (const GuardViolation& e) {
        EXPECT_EQ(e.guard(), "weak-field");
    }
    const KerrPoint far(kEarth, 6.37e7);
    EXPECT_NEAR(light_speed_weak(far, Direction::co), 1.0 - 0.009 / (2 * 6.37e7) + 0.009 * 3.9 / (6.37e7 * 6.37e7), 1e-16);
}

TEST(KerrSpeeds, FrameDraggingAsymmetryLeadingOrder) {
    verify::Sampler s(12);
    for (int i = 0; i < 100; ++i) {
        const double rs = 1.0, a = s.uniform(0.01, 0.5);
        const double r = s.log_uniform(1e7, 1e10);
        const auto pair = light_speeds_full(KerrPoint(GravSource(rs, a), r));
        const double lead = 2 * rs * a / (r * r);
        // c_co - |c_counter| is computed without cancellation via the inverse gap.
        const double gap = formula::inverse_speed_gap(rs, a, r) * pair.co * pair.counter;
        EXPECT_GT(gap, 0.0);
        EXPECT_LT(rel(gap, lead), 0.01);
    }
}

TEST(KerrPhase, EarthHalfWay) {
    const KerrPoint p(kEarth, 6.37e7);
    const double L = std::numbers::pi * 6.37e7;
    const double weak = kerr_phase_difference(p, L, 2e6, PhaseMode::weak);
    const double full = kerr_phase_difference(p, L, 2e6, PhaseMode::full);
    EXPECT_LT(rel(weak, frozen::kEarthPhaseWeak), 1e-14);
    EXPECT_LT(rel(full, frozen::kEarthPhaseFull), 1e-12);
    EXPECT_NEAR(weak, 7e-3, 0.03 * 7e-3);
    EXPECT_LT(rel(kerr_time_delay(p, L), frozen::kEarthDelayWeak), 1e-14);
    EXPECT_LT(rel(kerr_time_delay(p, L), 2 * std::numbers::pi * 0.009 * 3.9 / 6.37e7), 1e-14);
}

TEST(KerrPhase, LinearityAndAntisymmetry) {
    const KerrPoint p(kEarth, 6.37e7), q(GravSource(0.009, -3.9), 6.37e7);
    const double L = 1e7;
    const double base = kerr_phase_difference(p, L, 2e6, PhaseMode::weak);
    EXPECT_DOUBLE_EQ(kerr_phase_difference(p, L, 4e6, PhaseMode::weak), 2 * base);
    EXPECT_DOUBLE_EQ(kerr_phase_difference(p, 2 * L, 2e6, PhaseMode::weak), 2 * base);
    EXPECT_DOUBLE_EQ(kerr_phase_difference(q, L, 2e6, PhaseMode::weak), -base);
    const KerrPoint z(GravSource(0.009, 0.0), 6.37e7);
    EXPECT_EQ(kerr_phase_difference(z, L, 2e6, PhaseMode::weak), 0.0);
    EXPECT_EQ(kerr_phase_difference(z, L, 2e6, PhaseMode::full), 0.0);
    EXPECT_THROW(kerr_phase_difference(p, -1.0, 2e6, PhaseMode::weak), DomainError);
}

TEST(KerrRoundTrip, MeanAndLocalSpeeds) {
    EXPECT_DOUBLE_EQ(roundtrip_mean_speed(KerrPoint(GravSource(0.0, 0.0), 1.0)).mean, 1.0);
    const auto rt = roundtrip_mean_speed(KerrPoint(kEarth, 6.37e7));
    EXPECT_NEAR(rt.mean, 1.0 - 1.413e-10, 1e-13);
    EXPECT_NEAR(rt.local_two_way, 1.0, 1e-15);
}

TEST(KerrHorizon, Roots) {
    EXPECT_DOUBLE_EQ(horizon_radius(GravSource(2.0, 0.0)), 2.0);
    EXPECT_DOUBLE_EQ(horizon_radius(GravSource(2.0, 1.0)), 1.0);
    EXPECT_LT(rel(horizon_radius(GravSource(30000, 7500)), frozen::kBhHorizon), 1e-15);
    EXPECT_THROW(horizon_radius(kEarth), DomainError);
}

TEST(KerrScan, GridAndShape) {
    const GravSource bh(30000, 7500);
    ScanOptions opt;
    opt.sigma = 3.5e3 / constants.c;
    const auto rows = blackhole_scan(bh, opt);
    ASSERT_EQ(rows.size(), 512u);
    EXPECT_NEAR(rows.front().r_over_rs, 1.05 * frozen::kBhHorizon / 30000, 1e-12);
    EXPECT_DOUBLE_EQ(rows.back().r_over_rs, 1000.0);
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].r_over_rs, rows[i - 1].r_over_rs);
    EXPECT_LE(rows.front().visibility, 0.01);
    EXPECT_GE(rows.back().visibility, 0.99);
}

TEST(KerrScan, SampleAgreesWithExtendedPrecision) {
    const auto s = scan_sample(GravSource(30000, 7500), 2.0, 2e6, 3.5e3 / constants.c);
    EXPECT_LT(rel(s.visibility, frozen::kBhVisibilityAt2), 1e-12);
    EXPECT_LT(rel(s.phase_rad, frozen::kBhPhaseAt2), 1e-12);
}

TEST(KerrScan, NonRotatingIsFlat) {
    ScanOptions opt;
    opt.samples = 64;
    for (const auto& row : blackhole_scan(GravSource(30000, 0.0), opt)) {
        EXPECT_EQ(row.phase_rad, 0.0);
        EXPECT_EQ(row.visibility, 1.0);
    }
}

TEST(KerrScan, InsideHorizonNamesTheRadius) {
    ScanOptions opt;
    opt.r_min_rs = 0.5;
    try {
        blackhole_scan(GravSource(30000, 7500), opt);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("r'=0.5"), std::string::npos);
    }
}

TEST(KerrScan, CrossoverRegression) {
    const double x = visibility_crossover(GravSource(30000, 7500), 3.5e3 / constants.c);
    EXPECT_LT(rel(x, frozen::kBhCrossoverHalf), 1e-9);
}

TEST(KerrMisc, WrapPhase) {
    EXPECT_NEAR(wrap_phase(3 * std::numbers::pi), std::numbers::pi, 1e-12);
    EXPECT_NEAR(wrap_phase(0.5 + 4 * std::numbers::pi), 0.5, 1e-12);
}
