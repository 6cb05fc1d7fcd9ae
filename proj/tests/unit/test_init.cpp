#include <gtest/gtest.h>

#include <cmath>

#include "ism/config.hpp"
#include "ism/error.hpp"
#include "ism/init.hpp"
#include "ism/meanfield.hpp"

using namespace ism;

namespace {
ModelParams params(std::size_t N, double v = 1.0) {
  ModelParams p;
  p.N = N;
  p.v_speed = v;
  p.J = 1.0;
  return p;
}
}  // namespace

TEST(Init, AlignedWithoutPerturbationIsExact) {
  Rng rng(3);
  const auto e = aligned_perturbed(params(10, 2.0), KernelSpec{}, 0.0, 1.0, rng);
  for (const auto& a : e.agents) {
    EXPECT_EQ(a.v, (Vec3{0.0, 0.0, 2.0}));
    EXPECT_EQ(a.s, (Vec3{0.0, 0.0, 0.0}));
  }
}

TEST(Init, ConstraintsHoldForEveryInitializer) {
  Rng rng(11);
  const auto p = params(200, 1.5);
  for (const auto& e : {uniform_sphere(p, KernelSpec{}, 2.0, 0.7, rng), aligned_perturbed(p, KernelSpec{}, 0.4, 2.0, rng),
                        two_groups(p, KernelSpec{}, 0.3, 0.2, 2.0, rng), equilibrium(p, KernelSpec{}, 4.0, rng)}) {
    ASSERT_EQ(e.size(), 200u);
    for (std::size_t i = 0; i < e.size(); ++i) {
      EXPECT_NEAR(norm(e.agents[i].v), 1.5, 1e-14);
      EXPECT_NEAR(dot(e.agents[i].v, e.agents[i].s), 0.0, 1e-13);
      EXPECT_EQ(e.alpha[i], 0.0);
    }
  }
}

TEST(Init, UniformSphereMeanVelocityScale) {
  // E|w|^2 = v^2 / N for independent uniform directions.
  const std::size_t N = 50;
  double acc = 0.0;
  const int reps = 400;
  Rng rng(5);
  for (int r = 0; r < reps; ++r) {
    const auto e = uniform_sphere(params(N), KernelSpec{}, 1.0, 1.0, rng);
    const Vec3 w = mean_velocity(e);
    acc += dot(w, w);
  }
  EXPECT_NEAR(N * acc / reps, 1.0, 0.15);
}

TEST(Init, TwoGroupsSplit) {
  Rng rng(2);
  const auto e = two_groups(params(10), KernelSpec{}, 0.3, 0.0, 1.0, rng);
  int up = 0;
  for (const auto& a : e.agents) up += a.v.z > 0.0;
  EXPECT_EQ(up, 3);
}

TEST(Init, EquilibriumPolarizationMatchesMeanField) {
  Rng rng(9);
  const auto e = equilibrium(params(20000), KernelSpec{}, 6.0, rng);
  const double gamma = meanfield::solve_selfconsistency(6.0).gamma;
  EXPECT_NEAR(norm(mean_velocity(e)), gamma, 0.02);
}

TEST(Init, PositionsInsideBox) {
  Rng rng(4);
  const auto e = uniform_sphere(params(100), KernelSpec{}, 3.0, 1.0, rng);
  for (const auto& a : e.agents)
    for (double c : {a.x.x, a.x.y, a.x.z}) {
      EXPECT_GE(c, 0.0);
      EXPECT_LE(c, 3.0);
    }
}

TEST(Init, FieldPerturbationIsConsistent) {
  ContinuumConfig c;
  c.cells = 32;
  const auto f = uniform_field_perturbed(c, 1, 1e-3);
  EXPECT_NO_THROW(f.validate());
  double m = 0.0;
  for (double r : f.rho) m += r;
  EXPECT_DOUBLE_EQ(m / 32.0, 1.0);
}

TEST(Init, CircleChainConstraints) {
  ContinuumConfig c;
  c.cells = 48;
  const auto ci = circle_chain(c, 1.5);
  const auto& ch = ci.traveling.chain;
  ASSERT_EQ(ch.size(), 48u);
  for (std::size_t i = 0; i < ch.size(); ++i) {
    EXPECT_NEAR(norm(ch.v[i]), 1.0, 1e-14);
    EXPECT_NEAR(dot(ch.v[i], ch.s[i]), 0.0, 1e-14);
    EXPECT_NEAR(std::hypot(ch.x[i].x, ch.x[i].y), 1.5, 1e-14);
  }
}

TEST(Init, DispatchUsesConfig) {
  const auto cfg = parse_config(
      "model = deterministic\n[params]\nN = 6\nv = 2\n[kernel]\ntype = multiplicative\n"
      "weights_min = 0.5\nweights_max = 1.5\n[init]\nname = aligned_perturbed\n");
  Rng rng(1);
  const auto e = init_ensemble(cfg, rng);
  EXPECT_EQ(e.size(), 6u);
  ASSERT_EQ(e.kernel.n.size(), 6u);
  for (double w : e.kernel.n) {
    EXPECT_GE(w, 0.5);
    EXPECT_LE(w, 1.5);
  }
  EXPECT_DOUBLE_EQ(init_param(cfg, "delta"), 0.0);
}

TEST(Init, RingTooCloseToOriginIsAConfigError) {
  ContinuumConfig c;
  c.cells = 64;
  EXPECT_THROW(rotating_ring(c, 0.05, 0.3), ConfigError);
}
