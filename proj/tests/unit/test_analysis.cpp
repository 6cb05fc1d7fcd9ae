#include <gtest/gtest.h>

#include "ism/analysis.hpp"
#include "ism/error.hpp"
#include "ism/init.hpp"
#include "support/fixtures.hpp"

using namespace ism;

TEST(Analysis, ThresholdsFrozenForTwoUnitAgents) {
  ModelParams p;
  p.J = 1.0;
  const auto t = corollary_thresholds(p, {1.0, 1.0});
  EXPECT_DOUBLE_EQ(t.aligned_bound, 1.0);
  EXPECT_DOUBLE_EQ(t.flocking_bound, 1.0);
  EXPECT_THROW(corollary_thresholds(p, {1.0, 0.0}), DomainError);
}

TEST(Analysis, ThresholdsWithWeights) {
  ModelParams p;
  p.J = 2.0;
  const auto t = corollary_thresholds(p, {0.5, 1.0, 1.5});
  EXPECT_DOUBLE_EQ(t.aligned_bound, 2.0 * 9.0 / 6.0);
  EXPECT_DOUBLE_EQ(t.flocking_bound, 2.0 * 2.0 * 0.5 * 2.5 / 3.0);
}

TEST(Analysis, AlignedDataIsFlocking) {
  ModelParams p;
  p.J = 1.0;
  p.N = 8;
  Rng rng(1);
  auto e = aligned_perturbed(p, KernelSpec::constant(), 0.0, 1.0, rng);
  RunOptions o;
  o.dynamics = Dynamics::FreeSpace;
  o.t_end = 1.0;
  o.dt = 0.1;
  o.stride = 1;
  const auto v = classify_asymptotic(run(e, o));
  EXPECT_EQ(v.kind, AsymptoticVerdict::Kind::Flocking);
  EXPECT_EQ(v.plus_set.size(), 8u);
  EXPECT_DOUBLE_EQ(v.w_inf_estimate, 1.0);
}

TEST(Analysis, AntiparallelGroupsAreAligned) {
  ModelParams p;
  p.J = 1.0;
  p.N = 6;
  Rng rng(1);
  auto e = two_groups(p, KernelSpec::constant(), 2.0 / 3.0, 0.0, 1.0, rng);
  RunOptions o;
  o.dynamics = Dynamics::FreeSpace;
  o.t_end = 1.0;
  o.dt = 0.1;
  const auto tr = run(e, o);
  const auto v = classify_asymptotic(tr);
  EXPECT_EQ(v.kind, AsymptoticVerdict::Kind::Aligned);
  EXPECT_EQ(v.minus_set, (std::vector<std::size_t>{4, 5}));
  EXPECT_NEAR(v.w_inf_estimate, aligned_w_norm(1.0, std::vector<double>(6, 1.0), tr.final_signs), 1e-15);
}

TEST(Analysis, RotatingSpinsAreUndecided) {
  auto e = support::random_ensemble(10, KernelSpec::constant(), 1.0, 1.0, 2);
  RunOptions o;
  o.dynamics = Dynamics::FreeSpace;
  o.t_end = 1.0;
  o.dt = 0.01;
  EXPECT_EQ(classify_asymptotic(run(e, o)).kind, AsymptoticVerdict::Kind::Undecided);
}

TEST(Analysis, EmptyTrajectoryIsRejected) { EXPECT_THROW(classify_asymptotic(Trajectory{}), DomainError); }

TEST(Analysis, WInfinityWindow) {
  Trajectory tr;
  for (int k = 0; k < 10; ++k) {
    Diagnostics d;
    d.w_norm = k < 8 ? 0.0 : 1.0 + 0.1 * (k - 8);
    tr.diagnostics.push_back(d);
  }
  const auto w = w_infinity(tr, 0.2);
  EXPECT_DOUBLE_EQ(w.mean, 1.05);
  EXPECT_NEAR(w.band, 0.05, 1e-15);
}

TEST(Analysis, WLowerBoundHoldsBelowAlignedThreshold) {
  ModelParams p;
  p.J = 1.0;
  p.N = 10;
  p.eta = 0.5;
  Rng rng(4);
  auto e = aligned_perturbed(p, KernelSpec::constant(), 0.3, 1.0, rng);
  const double bound = w_squared_lower_bound(e);
  ASSERT_LT(total_energy(e), corollary_thresholds(p, energy_weights(e)).aligned_bound);
  ASSERT_GT(bound, 0.0);
  RunOptions o;
  o.dynamics = Dynamics::FreeSpace;
  o.t_end = 20.0;
  o.dt = 0.01;
  o.stride = 10;
  for (const auto& d : run(e, o).diagnostics) EXPECT_GE(d.w_norm * d.w_norm, bound - 1e-12);
}
