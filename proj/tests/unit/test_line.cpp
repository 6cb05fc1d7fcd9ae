#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ism/error.hpp"
#include "ism/init.hpp"
#include "ism/mono/line.hpp"

using namespace ism;
using namespace ism::mono;

namespace {
double travel(ArcCurve curve, double j, std::size_t M, double periods = 1.0) {
  auto tc = traveling_curve(curve, 1.0, 0.0, M, 1.0, j, 0.0, 1.0);
  const double T = periods * curve.period();
  const auto n = static_cast<int>(std::ceil(T / (0.2 * tc.chain.dz)));
  for (int s = 0; s < n; ++s) line_step(tc.chain, T / n);
  return chain_deviation(tc.chain, curve, 1.0);
}
}  // namespace

TEST(Line, HelixFrenetFrame) {
  const auto h = ArcCurve::helix_from_frenet(0.8, 0.4);
  EXPECT_NEAR(h.a(), 1.0, 1e-15);
  EXPECT_NEAR(h.b(), 0.5, 1e-15);
  const double al = 0.7;
  EXPECT_NEAR(norm(h.d1(al)), 1.0, 1e-15);
  EXPECT_NEAR(norm(h.d2(al)), 0.8, 1e-15);  // curvature
  // Torsion from the Frenet relation: tau = (t, t', t'') / kappa^2.
  EXPECT_NEAR(dot(h.d1(al), cross(h.d2(al), h.d3(al))) / 0.64, 0.4, 1e-14);
  const Vec3 shift = h.position(al + h.period()) - h.position(al);
  EXPECT_LT(norm(shift - h.period_shift()), 1e-13);
  EXPECT_THROW(ArcCurve::helix_from_frenet(0.0, 1.0), DomainError);
}

TEST(Line, TravelingConditionFlag) {
  const auto c = ArcCurve::circle(1.0);
  EXPECT_TRUE(traveling_curve(c, 1.0, 0.0, 32, 1.0, 1.0, 0.0, 1.0).condition_holds);
  const auto bad = traveling_curve(c, 1.0, 0.0, 32, 1.0, 4.0, 0.0, 1.0);
  EXPECT_FALSE(bad.condition_holds);
  EXPECT_FALSE(bad.warning.empty());
  // With q = 1 the condition reads v^2 = j.
  EXPECT_TRUE(traveling_curve(c, 2.0, 0.0, 32, 3.0, 4.0, 1.0, 2.0).condition_holds);
}

TEST(Line, CircleChainConstraintsByConstruction) {
  ContinuumConfig cfg;
  cfg.cells = 64;
  const auto ci = circle_chain(cfg, 2.0);
  const auto& ch = ci.traveling.chain;
  for (std::size_t i = 0; i < ch.size(); ++i) {
    EXPECT_NEAR(norm(ch.v[i]), 1.0, 1e-15);
    EXPECT_NEAR(dot(ch.v[i], ch.s[i]), 0.0, 1e-15);
  }
}

TEST(Line, HelixTravelsWhenTheConditionHolds) {
  EXPECT_LT(travel(ArcCurve::helix(1.0, 0.5), 1.0, 256), 1e-3);
}

TEST(Line, HelixDepartsWhenTheConditionFails) {
  EXPECT_GT(travel(ArcCurve::helix(1.0, 0.5), 4.0, 256), 0.1);
}

TEST(Line, DeviationConvergesWithResolution) {
  const double a = travel(ArcCurve::helix(1.0, 0.5), 1.0, 64, 0.5);
  const double b = travel(ArcCurve::helix(1.0, 0.5), 1.0, 128, 0.5);
  EXPECT_NEAR(std::log2(a / b), 2.0, 0.4);
}

TEST(Line, StepKeepsConstraints) {
  auto tc = traveling_curve(ArcCurve::helix(1.0, 0.3), 1.0, 0.0, 64, 1.0, 2.0, 0.0, 1.0);
  for (int s = 0; s < 50; ++s) line_step(tc.chain, 0.01);
  for (std::size_t i = 0; i < tc.chain.size(); ++i) {
    EXPECT_NEAR(norm(tc.chain.v[i]), 1.0, 1e-14);
    EXPECT_NEAR(dot(tc.chain.v[i], tc.chain.s[i]), 0.0, 1e-14);
  }
}
