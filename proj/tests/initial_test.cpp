#include <gtest/gtest.h>

#include <random>

#include "nlsabc/initial.hpp"
#include "nlsabc/physics.hpp"

using namespace nlsabc;

TEST(ExactSoliton, PeakAtStart) {
    const Complex z = exact_soliton(15.0, 0.0, 1.0, 2.0, -2.0, 15.0);
    EXPECT_NEAR(z.real(), 1.0, 1e-15);
    EXPECT_NEAR(z.imag(), 0.0, 1e-15);
}

TEST(ExactSoliton, PeakTravelsAtTwiceB) {
    for (double t : {0.0, 0.5, 1.7, 3.0, 6.0})
        EXPECT_NEAR(std::abs(exact_soliton(15.0 + 4.0 * t, t, 1.0, 2.0, -2.0, 15.0)), 1.0, 1e-14) << t;
}

TEST(ExactSoliton, AmplitudeScalesWithCoupling) {
    EXPECT_NEAR(std::abs(exact_soliton(0.0, 0.0, 1.0, 2.0, -10.0, 0.0)), std::sqrt(0.2), 1e-15);
}

TEST(ExactSoliton, RequiresFocusing) {
    EXPECT_THROW(exact_soliton(0.0, 0.0, 1.0, 2.0, 0.0, 0.0), DomainError);
    EXPECT_THROW(exact_soliton(0.0, 0.0, 1.0, 2.0, 2.0, 0.0), DomainError);
}

// i psi_t + psi_xx - g |psi|^2 psi with sixth-order centred differences in x
// and fourth-order in t.
TEST(ExactSoliton, SatisfiesTheEquation) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ux(5.0, 25.0), ut(0.0, 2.0), uA(0.5, 1.5), uB(-2.0, 2.0);
    const double h = 1e-3;
    const double k = 1e-3;
    for (int trial = 0; trial < 50; ++trial) {
        const double A = uA(rng), B = uB(rng), g = -2.0 - trial % 3, x0 = 15.0;
        const double t = ut(rng);
        const double x = x0 + 2.0 * B * t + (ux(rng) - 15.0) * 0.3;
        auto psi = [&](double xx, double tt) { return exact_soliton(xx, tt, A, B, g, x0); };
        const Complex dxx = (2.0 * psi(x + 3 * h, t) - 27.0 * psi(x + 2 * h, t) + 270.0 * psi(x + h, t) -
                             490.0 * psi(x, t) + 270.0 * psi(x - h, t) - 27.0 * psi(x - 2 * h, t) +
                             2.0 * psi(x - 3 * h, t)) /
                            (180.0 * h * h);
        const Complex dt = (-psi(x, t + 2 * k) + 8.0 * psi(x, t + k) - 8.0 * psi(x, t - k) + psi(x, t - 2 * k)) /
                           (12.0 * k);
        const Complex z = psi(x, t);
        const Complex residual = Complex(0.0, 1.0) * dt + dxx - g * std::norm(z) * z;
        EXPECT_LT(std::abs(residual), 1e-6) << "A=" << A << " B=" << B << " x=" << x << " t=" << t;
    }
}

TEST(ExactSoliton, ModulusDependsOnTravellingCoordinateOnly) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0), ut(0.0, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double c = u(rng), t1 = ut(rng), t2 = ut(rng);
        const double a = std::abs(exact_soliton(15.0 + 4.0 * t1 + c, t1, 1.0, 2.0, -2.0, 15.0));
        const double b = std::abs(exact_soliton(15.0 + 4.0 * t2 + c, t2, 1.0, 2.0, -2.0, 15.0));
        EXPECT_NEAR(a, b, 1e-13);
    }
}

TEST(EvalInitial, SolitonMatchesExactSolutionAtStart) {
    const Grid grid = make_grid(0.0, 30.0, 300, 0.01, 1);
    const auto ic = InitialCondition::bright_soliton(1.0, 2.0, 15.0, -2.0);
    const WaveField psi = eval_initial(ic, grid);
    EXPECT_EQ(psi.time_index(), 0);
    for (int j = -1; j <= 301; ++j) {
        const double x = grid.x(j);
        EXPECT_EQ(psi(j), exact_soliton(x, 0.0, 1.0, 2.0, -2.0, 15.0));
        // sech(x - x0) e^{2i(x - x0)}
        const Complex closed = std::polar(1.0 / std::cosh(x - 15.0), 2.0 * (x - 15.0));
        EXPECT_NEAR(std::abs(psi(j) - closed), 0.0, 1e-15);
    }
    EXPECT_NEAR(std::abs(psi(150) - Complex(1.0, 0.0)), 0.0, 1e-14);
}

TEST(EvalInitial, ChirpedGaussianAtOrigin) {
    const Grid grid = make_grid(-5.0, 5.0, 100, 0.01, 1);
    const WaveField psi = eval_initial(InitialCondition::chirped_gaussian(8.0), grid);
    EXPECT_NEAR(std::abs(psi(50) - Complex(1.0, 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(psi(60) - std::exp(Complex(-1.0, 8.0))), 0.0, 1e-15);
}

TEST(EvalInitial, GaussianAtCentre) {
    const Grid grid = make_grid(0.0, 30.0, 300, 0.0375, 1);
    const WaveField psi = eval_initial(InitialCondition::gaussian(0.1, 15.0), grid);
    EXPECT_EQ(psi(150), Complex(1.0, 0.0));
    EXPECT_NEAR(psi(160).real(), std::exp(-0.1), 1e-15);
    EXPECT_THROW(eval_initial(InitialCondition::gaussian(0.0, 15.0), grid), DomainError);
}

TEST(Potential, ZeroAndGaussian) {
    EXPECT_EQ(eval_potential(PotentialSpec::zero(), 3.7), 0.0);
    const auto v = PotentialSpec::gaussian(1.0, 0.5, 15.0);
    EXPECT_DOUBLE_EQ(eval_potential(v, 15.0), 1.0);
    for (double w : {0.1, 1.0, 2.5, 7.0}) EXPECT_DOUBLE_EQ(eval_potential(v, 15.0 + w), eval_potential(v, 15.0 - w));
    EXPECT_DOUBLE_EQ(eval_potential(v, 16.0), std::exp(-0.5));
}

TEST(Potential, TabulatedInterpolatesAndRejectsOutside) {
    const auto v = PotentialSpec::tabulated({0.0, 1.0, 3.0}, {0.0, 2.0, -2.0});
    EXPECT_DOUBLE_EQ(eval_potential(v, 0.5), 1.0);
    EXPECT_DOUBLE_EQ(eval_potential(v, 2.0), 0.0);
    EXPECT_DOUBLE_EQ(eval_potential(v, 3.0), -2.0);
    EXPECT_THROW(eval_potential(v, 3.5), DomainError);
    EXPECT_THROW(eval_potential(v, -0.1), DomainError);
    EXPECT_THROW(PotentialSpec::tabulated({0.0, 0.0}, {1.0, 1.0}), DomainError);
    EXPECT_THROW(PotentialSpec::tabulated({0.0, 1.0}, {1.0}), DomainError);
}

TEST(Nonlinearity, Kinds) {
    EXPECT_EQ(eval_nonlinearity({NonlinearityKind::cubic}, 4.0), 4.0);
    EXPECT_EQ(eval_nonlinearity({NonlinearityKind::quintic}, 3.0), 9.0);
    EXPECT_EQ(eval_nonlinearity({NonlinearityKind::none}, 7.0), 0.0);
    EXPECT_THROW(eval_nonlinearity({NonlinearityKind::cubic}, -1e-3), DomainError);
}

TEST(PhysicalParams, DefaultProfileHasUnitKineticPrefactor) {
    PhysicalParams p;
    EXPECT_DOUBLE_EQ(p.kinetic(), 1.0);
    p.hbar = 0.0;
    EXPECT_THROW(p.validate(), DomainError);
}
