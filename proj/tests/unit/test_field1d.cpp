#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "ism/error.hpp"
#include "ism/init.hpp"
#include "ism/mono/field1d.hpp"

using namespace ism;
using namespace ism::mono;

namespace {
ContinuumConfig grid(std::size_t cells, double rho0, double j, double q) {
  ContinuumConfig c;
  c.cells = cells;
  c.rho0 = rho0;
  c.j = j;
  c.q = q;
  return c;
}

double phase(const MonokineticField1D& f) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < f.cells(); ++i)
    acc += f.u[i].y * std::exp(std::complex<double>(0.0, -2.0 * std::numbers::pi * f.cell_center(i) / f.length));
  return std::arg(acc);
}
}  // namespace

TEST(Field1D, UniformStateIsStationary) {
  const auto f = MonokineticField1D::uniform(64, 1.0, 2.0, {1, 1, 0}, 1.0, 0.5, 1.0);
  const auto r = pde_rhs_1d(f);
  for (std::size_t i = 0; i < f.cells(); ++i) {
    EXPECT_EQ(r.rho[i], 0.0);
    EXPECT_EQ(norm(r.u[i]), 0.0);
    EXPECT_EQ(norm(r.sigma[i]), 0.0);
  }
}

TEST(Field1D, WaveSpeedFormula) {
  EXPECT_DOUBLE_EQ(linear_wave_speed(1.0, 1.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(linear_wave_speed(4.0, 2.0, 1.0), 2.0);
  EXPECT_DOUBLE_EQ(linear_wave_speed(1.0, 8.0, 5.0 / 3.0), std::pow(8.0, -1.0 / 3.0));
}

TEST(Field1D, MassAndRhoSigmaConserved) {
  auto f = uniform_field_perturbed(grid(128, 1.0, 1.0, 0.0), 2, 0.05);
  // A density bump makes the flux nontrivial.
  for (std::size_t i = 0; i < f.cells(); ++i) {
    f.rho[i] += 0.3 * std::sin(2.0 * std::numbers::pi * f.cell_center(i));
    f.u[i] = Vec3{0.2, f.u[i].y, 1.0};
    f.u[i] = f.v * (f.u[i] / norm(f.u[i]));
  }
  const double m0 = total_mass(f);
  const Vec3 rs0 = total_rho_sigma(f);
  const double dt = 0.5 * max_stable_dt(f);
  for (int s = 0; s < 200; ++s) pde_step_1d(f, dt);
  EXPECT_NEAR(total_mass(f), m0, 1e-13);
  // RK4 in time: exact semi-discretely, O(dt^4) in practice.
  EXPECT_LT(norm(total_rho_sigma(f) - rs0), 1e-8);
  for (const auto& u : f.u) ASSERT_NEAR(norm(u), f.v, 1e-14);
}

TEST(Field1D, CflViolationNamesTheAdmissibleStep) {
  auto f = MonokineticField1D::uniform(100, 1.0, 1.0, {0, 0, 1}, 1.0, 0.0, 1.0);
  const double dt = max_stable_dt(f);
  EXPECT_DOUBLE_EQ(dt, 0.01 / 2.0);
  try {
    pde_step_1d(f, 2.0 * dt);
    FAIL();
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("admissible dt"), std::string::npos);
  }
}

TEST(Field1D, TransverseWaveTravelsAtTheLinearSpeed) {
  for (auto [q, rho] : {std::pair{0.0, 1.0}, {1.0, 2.0}, {5.0 / 3.0, 1.0}}) {
    auto f = uniform_field_perturbed(grid(256, rho, 1.0, q), 1, 1e-4);
    const double c = linear_wave_speed(1.0, rho, q);
    const double T = 0.2 / c;
    const auto n = static_cast<int>(std::ceil(T / (0.5 * max_stable_dt(f))));
    const double p0 = phase(f);
    for (int s = 0; s < n; ++s) pde_step_1d(f, T / n);
    double dp = p0 - phase(f);
    if (dp < 0) dp += 2.0 * std::numbers::pi;
    EXPECT_NEAR(dp / (2.0 * std::numbers::pi) / T, c, 0.01 * c) << "q = " << q;
  }
}

TEST(Field1D, ValidateRejectsBadStates) {
  auto f = MonokineticField1D::uniform(16, 1.0, 1.0, {0, 0, 1}, 1.0, 0.0, 1.0);
  EXPECT_NO_THROW(f.validate());
  f.u[3] = {0, 0, 2};
  EXPECT_THROW(f.validate(), ConfigError);
  f.u[3] = {0, 0, 1};
  f.rho[2] = -1.0;
  EXPECT_THROW(f.validate(), ConfigError);
}
