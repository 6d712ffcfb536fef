#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "framedrag/fiber.hpp"
#include "framedrag/rotating.hpp"
#include "frozen_values.hpp"

using namespace framedrag;
using namespace framedrag::fiber;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
const double kFig3V = 2 * std::numbers::pi * 0.2 / constants.c;
} // namespace

TEST(RefractiveModel, FusedSilicaAtK0) {
    const auto m = RefractiveModel::fused_silica();
    EXPECT_NEAR(m.n(8e6), frozen::kSilicaN, 1e-12);
    EXPECT_NEAR(m.dn(8e6), frozen::kSilicaDn, 1e-12 * 1.5625e-9);
    EXPECT_NEAR(m.d2n(8e6), frozen::kSilicaD2n, 1e-12 * 3.90625e-16);
    EXPECT_DOUBLE_EQ(m.index(), m.n(m.k0()));
}

TEST(RefractiveModel, WindowIsEnforced) {
    const auto m = RefractiveModel::fused_silica();
    EXPECT_THROW(m.n(1e6), DomainError);
    EXPECT_THROW(m.dn(2e7), DomainError);
    EXPECT_THROW(RefractiveModel::inverse_wavenumber(1e5, 0.5, 8e6, 4e6, 1.6e7), DomainError);
    EXPECT_THROW(RefractiveModel::inverse_wavenumber(1e5, 1.44, 8e6, 9e6, 1.6e7), DomainError);
}

TEST(MovingMedium, Velocities) {
    EXPECT_DOUBLE_EQ(phase_velocity_moving(1.5, 0.0, Direction::co), 1 / 1.5);
    EXPECT_DOUBLE_EQ(phase_velocity_moving(1.5, 0.0, Direction::counter), 1 / 1.5);
    EXPECT_DOUBLE_EQ(effective_lab_velocity(1.0, 0.3, Direction::co), 1.3);
    EXPECT_DOUBLE_EQ(effective_lab_velocity(1.0, 0.3, Direction::counter), 0.7);
    EXPECT_DOUBLE_EQ(phase_velocity_moving(2.0, 0.25, Direction::co), (0.5 - 0.25) / (1 - 0.125));
    EXPECT_DOUBLE_EQ(phase_velocity_moving(1.0, 0.3, Direction::co), 1.0);
    EXPECT_DOUBLE_EQ(phase_velocity_moving(1.0, 0.3, Direction::counter), 1.0);
    // First-order Fresnel drag.
    const double n = 1.453, v = 4.19e-9;
    EXPECT_NEAR(phase_velocity_moving(n, v, Direction::co), 1 / n - v * (1 - 1 / (n * n)), 1e-16);
    EXPECT_NEAR(phase_velocity_moving(n, v, Direction::counter), 1 / n + v * (1 - 1 / (n * n)), 1e-16);
    EXPECT_THROW(phase_velocity_moving(0.9, 0.1, Direction::co), DomainError);
}

TEST(FiberArms, PhaseDifferenceIsIndexFreeWithoutLengthMismatch) {
    const double v = kFig3V;
    const double a = fiber_phase_difference(FiberArms(1e4, 0.0, RefractiveModel::fused_silica(), v), 8e6);
    const double b = fiber_phase_difference(FiberArms(1e4, 0.0, RefractiveModel::constant(1.0), v), 8e6);
    const double c = fiber_phase_difference(FiberArms(1e4, 0.0, RefractiveModel::constant(2.2), v), 8e6);
    EXPECT_EQ(a, b);
    EXPECT_EQ(b, c);
    EXPECT_THROW(FiberArms(1e4, 2e3, RefractiveModel::constant(1.5), v), DomainError);
}

TEST(DipShift, CalibrationAndWorkedValue) {
    const auto m = RefractiveModel::fused_silica();
    const auto rest = hom_dip_shift(FiberArms(1e4, 0.01, m, 0.0));
    EXPECT_EQ(rest.shift_exact, 0.0);
    EXPECT_NEAR(rest.delta_t_total, 0.0, 1e-18);
    const auto matched = hom_dip_shift(FiberArms(1e4, 0.0, m, 0.1));
    EXPECT_EQ(matched.shift_exact, 0.0);
    EXPECT_DOUBLE_EQ(matched.delta_t_total, 4 * 0.1 * 1e4 / 0.99);
    const auto fig3 = hom_dip_shift(FiberArms(1e4, 0.01, m, kFig3V));
    EXPECT_LT(rel(fig3.shift_exact / constants.c, frozen::kDipShiftSeconds), 1e-12);
    EXPECT_LT(rel(fig3.shift_approx, fig3.shift_exact), 1e-16);
}

TEST(Coherence, LengthAndInverses) {
    const double dx = coherence_length_required(1e4, 2 * std::numbers::pi, 0.2);
    EXPECT_LT(rel(dx, frozen::kCoherenceLength), 1e-14);
    EXPECT_NEAR(dx, 5e-4, 0.1 * 5e-4);
    EXPECT_EQ(coherence_length_required(1e4, 0.0, 0.2), 0.0);
    EXPECT_DOUBLE_EQ(coherence_length_required(2e4, 2.0, 0.2), 2 * coherence_length_required(1e4, 2.0, 0.2));
    EXPECT_NEAR(fiber_length_for_coherence(dx, 2 * std::numbers::pi, 0.2), 1e4, 1e-9);
    EXPECT_NEAR(angular_frequency_for_coherence(dx, 1e4, 0.2), 2 * std::numbers::pi, 1e-12);
}

TEST(GroupVelocity, ConstantIndexHasNoDispersion) {
    const auto m = RefractiveModel::constant(1.5);
    for (auto form : {DerivativeForm::printed, DerivativeForm::exact})
        for (auto d : {Direction::co, Direction::counter}) {
            EXPECT_DOUBLE_EQ(group_velocity_moving(m, 8e6, 0.2, d, form), effective_lab_velocity(1.5, 0.2, d));
            EXPECT_EQ(gvd_moving(m, 8e6, 0.2, d, form), 0.0);
        }
}

TEST(GroupVelocity, ExactFormMatchesExtendedPrecision) {
    const auto m = RefractiveModel::fused_silica();
    const double v = 4.1916900439033638e-9;
    EXPECT_LT(rel(group_velocity_moving(m, 8e6, v, Direction::co, DerivativeForm::exact),
                  frozen::kSilicaGroupVelocityCo), 1e-14);
    EXPECT_LT(rel(group_velocity_moving(m, 8e6, v, Direction::counter, DerivativeForm::exact),
                  frozen::kSilicaGroupVelocityCounter), 1e-14);
    EXPECT_LT(rel(gvd_moving(m, 8e6, v, Direction::co, DerivativeForm::exact), frozen::kSilicaGvdCo), 1e-12);
    EXPECT_LT(rel(gvd_moving(m, 8e6, v, Direction::counter, DerivativeForm::exact), frozen::kSilicaGvdCounter),
              1e-12);
}

TEST(GroupVelocity, ContinuousAtRest) {
    const auto m = RefractiveModel::fused_silica();
    for (auto form : {DerivativeForm::printed, DerivativeForm::exact}) {
        EXPECT_EQ(group_velocity_moving(m, 8e6, 0.0, Direction::co, form),
                  group_velocity_moving(m, 8e6, 0.0, Direction::counter, form));
        EXPECT_EQ(gvd_moving(m, 8e6, 0.0, Direction::co, form), gvd_moving(m, 8e6, 0.0, Direction::counter, form));
    }
}

TEST(GroupPhase, Correction) {
    const auto vac = RefractiveModel::constant(1.0);
    const auto g0 = corrected_group_phase(8e6, 0.1, 1e4, vac);
    EXPECT_EQ(g0.correction, 0.0);
    EXPECT_DOUBLE_EQ(g0.phase, 4 * 8e6 * 0.1 * 1e4 / 0.99);
    const auto m = RefractiveModel::fused_silica();
    const auto g = corrected_group_phase(8e6, kFig3V, 1e4, m);
    EXPECT_GT(std::abs(g.correction), 1e-18);
    EXPECT_LT(std::abs(g.correction), 1e-17);
    EXPECT_DOUBLE_EQ(corrected_group_phase(8e6, -kFig3V, 1e4, m).correction, -g.correction);
}

TEST(Downconverted, ClosedFormAndTrivialCases) {
    EXPECT_EQ(downconverted_coincidence(1e3, DispersionCoefficients{1.5, 1.5, 1e-9, 2e-9}, 1e4), 0.0);
    const double sigma = 1e4, L = 1e4;
    const double dalpha = 0.25 / (sigma * L);
    const DispersionCoefficients c{1.5 + dalpha, 1.5, 3e-12, -1e-12};
    EXPECT_NEAR(downconverted_coincidence(sigma, c, L), frozen::kDownconvertedQuarter, 1e-9);
    EXPECT_DOUBLE_EQ(downconverted_coincidence_gaussian(sigma, dalpha * L), frozen::kDownconvertedQuarter);
}

TEST(Downconverted, BetaCancels) {
    const double sigma = 3e3, L = 1e4;
    const double dalpha = 0.7 / (sigma * L), beta = 0.9 / (sigma * sigma * L);
    const double base = downconverted_coincidence(sigma, {1.5 + dalpha, 1.5, beta, beta}, L);
    for (double sp : {0.5, 1.5})
        for (double sm : {0.5, 1.5})
            EXPECT_LT(std::abs(downconverted_coincidence(sigma, {1.5 + dalpha, 1.5, beta * sp, beta * sm}, L) - base),
                      1e-12 * base);
}

TEST(Downconverted, TurntableFormAgreesWithKernel) {
    const auto m = RefractiveModel::fused_silica();
    const double v = kFig3V, L = 1e4, sigma = 4000 * std::numbers::pi;
    const auto c = dispersion_coefficients(m, m.k0(), v);
    const double pk = downconverted_coincidence(sigma, c, L);
    const double pt = downconverted_coincidence_turntable(sigma, v, L, m.dn(m.k0()));
    EXPECT_NEAR(pk, pt, 1e-6);
}

TEST(Broadening, Diagnostic) {
    EXPECT_EQ(dispersive_broadening_factor(0.0, 1e4, 1e3), 1.0);
    EXPECT_GT(dispersive_broadening_factor(1e-12, 1e4, 1e3), 1.0);
}
