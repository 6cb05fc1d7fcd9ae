#include <gtest/gtest.h>

#include <cmath>

#include "ism/error.hpp"
#include "ism/meanfield.hpp"

using namespace ism;
using namespace ism::meanfield;

TEST(Meanfield, LangevinFrozenValue) { EXPECT_NEAR(h(1.0), 0.3130352854993312, 1e-15); }

TEST(Meanfield, LangevinSeriesAndLimits) {
  EXPECT_EQ(h(0.0), 0.0);
  EXPECT_DOUBLE_EQ(h_prime(0.0), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(h(1e-6), 1e-6 / 3.0 - 1e-18 / 45.0);
  EXPECT_NEAR(h(50.0), 1.0 - 1.0 / 50.0, 1e-15);
  // Branch boundaries are continuous.
  for (double x : {1.0, 20.0}) {
    const double a = x * (1 - 1e-12), b = x * (1 + 1e-12);
    EXPECT_NEAR(h(b) - h(a), h_prime(x) * (b - a), 1e-15);
    EXPECT_NEAR(h_prime(x * (1 - 1e-12)), h_prime(x * (1 + 1e-12)), 1e-11);
  }
  EXPECT_THROW(h(-1.0), DomainError);
}

TEST(Meanfield, DerivativeMatchesFiniteDifference) {
  for (double x : {0.005, 0.3, 2.0, 15.0, 30.0}) {
    const double d = 1e-6 * std::max(1.0, x);
    EXPECT_NEAR(h_prime(x), (h(x + d) - h(x - d)) / (2 * d), 1e-8);
  }
}

TEST(Meanfield, CriticalCouplingIsInverseSlopeAtZero) {
  EXPECT_NEAR(critical_coupling(), 1.0 / h_prime(0.0), 1e-6);
}

TEST(Meanfield, BelowOnsetOnlyTheTrivialSolution) {
  EXPECT_EQ(solve_selfconsistency(2.0).xi, 0.0);
  EXPECT_TRUE(positive_roots(2.9).empty());
}

TEST(Meanfield, AboveOnsetSolvesTheFixedPoint) {
  for (double bj : {3.5, 6.0, 20.0}) {
    const auto s = solve_selfconsistency(bj);
    EXPECT_GT(s.xi, 0.0);
    EXPECT_NEAR(s.xi, bj * h(s.xi), 1e-10 * s.xi);
    EXPECT_DOUBLE_EQ(s.gamma, s.xi / bj);
  }
  EXPECT_EQ(positive_roots(6.0).size(), 1u);
}

TEST(Meanfield, OrderParameterIncreases) {
  double prev = 0.0;
  for (double bj = 3.1; bj < 12.0; bj += 0.5) {
    const double g = solve_selfconsistency(bj).gamma;
    EXPECT_GT(g, prev);
    prev = g;
  }
}

TEST(Meanfield, ResidualVanishesAtTheSolution) {
  const auto s = solve_selfconsistency(6.0);
  const Vec3 w = (2.0 * s.gamma) * Vec3{0, 0, 1};
  EXPECT_LT(norm(selfconsistency_residual(w, 6.0, 2.0)), 1e-10);
  EXPECT_GT(norm(selfconsistency_residual(0.5 * w, 6.0, 2.0)), 1e-3);
}

TEST(Meanfield, VmfSamplerMeanIsLangevin) {
  Rng rng(12);
  for (double kappa : {0.0, 0.5, 4.0, 60.0}) {
    double m = 0.0;
    const int n = 100000;
    for (int k = 0; k < n; ++k) m += sample_vmf_cos(kappa, rng.uniform());
    EXPECT_NEAR(m / n, h(kappa), 5.0 / std::sqrt(n));
  }
}

TEST(Meanfield, EquilibriumSampleHasTheRightOrder) {
  const auto s = solve_selfconsistency(6.0);
  ModelParams p;
  p.J = 1.0;
  p.v_speed = 1.5;
  Rng rng(3);
  const auto e = sample_equilibrium(s, 6.0, p, 20000, rng);
  Vec3 w;
  double s2 = 0.0;
  for (const auto& a : e.agents) {
    w += a.v;
    s2 += norm2(a.s);
    ASSERT_NEAR(norm(a.v), 1.5, 1e-14);
    ASSERT_NEAR(dot(a.v, a.s), 0.0, 1e-13);
  }
  EXPECT_NEAR(norm(w) / 20000.0, 1.5 * s.gamma, 0.01);
  EXPECT_NEAR(s2 / 20000.0, 2.0 / 6.0, 0.01);
}

TEST(Meanfield, FreeEnergyIsStationaryAtTheSolution) {
  const double beta = 6.0, J = 1.0;
  const auto s = solve_selfconsistency(beta * J);
  const double k = s.xi, d = 1e-5;
  const double slope = (free_energy_product(k + d, beta, J, 1.0) - free_energy_product(k - d, beta, J, 1.0)) / (2 * d);
  EXPECT_NEAR(slope, 0.0, 1e-8);
  // The ordered state has lower free energy than the disordered one.
  EXPECT_LT(free_energy_product(k, beta, J, 1.0), free_energy_product(1e-6, beta, J, 1.0));
}
