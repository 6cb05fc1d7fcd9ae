#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

#include "ism/error.hpp"
#include "ism/interactions.hpp"
#include "ism/spatial_index.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace ism;
using ism::support::lattice_ensemble;
using ism::support::random_ensemble;

namespace {
void expect_identical(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i], b[i]) << "agent " << i;
}
}  // namespace

TEST(Interactions, ConstantIsScaledMean) {
  auto e = random_ensemble(10, KernelSpec::constant(2.0), 1.0, 1.0, 1);
  Vec3 m;
  for (const auto& a : e.agents) m += a.v;
  const auto w = w_constant(e, 2.0);
  for (const auto& wi : w) EXPECT_LT(norm(wi - 2.0 * m / 10.0), 1e-15);
}

TEST(Interactions, MultiplicativeFactorizes) {
  auto e = random_ensemble(4, KernelSpec::constant(), 1.0, 1.0, 2);
  const std::vector<double> n{1.0, 2.0, 0.5, 1.5};
  const auto w = w_multiplicative(e, n);
  Vec3 s;
  for (std::size_t j = 0; j < 4; ++j) s += n[j] * e.agents[j].v;
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LT(norm(w[i] - n[i] * s / 4.0), 1e-15);
  EXPECT_THROW(w_multiplicative(e, {1.0, -1.0, 1.0, 1.0}), DomainError);
}

TEST(Interactions, DistanceMatchesBruteForceExactly) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const double q = (seed % 3) * 0.5;
    const bool self = seed % 2 == 0;
    const auto k = seed % 4 < 2 ? RadialProfile::indicator(0.6) : RadialProfile::smooth_bump(0.8);
    auto e = random_ensemble(60 + 10 * seed, KernelSpec::distance(k, q, self), 2.0, 1.0, seed);
    try {
      expect_identical(w_distance(e, k, q, self), support::brute_distance(e, k, q, self));
    } catch (const NumericalError&) {
      // q > 0 with an isolated agent; covered below.
    }
  }
}

TEST(Interactions, DistanceOnLatticeTies) {
  const auto k = RadialProfile::indicator(1.5);
  auto e = lattice_ensemble(5, KernelSpec::distance(k, 0.5), 3);
  expect_identical(w_distance(e, k, 0.5, true), support::brute_distance(e, k, 0.5, true));
}

TEST(Interactions, RankMatchesBruteForceExactly) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto t = seed % 2 ? RadialProfile::indicator(0.3) : RadialProfile::table({{0.0, 1.0}, {0.5, 0.4}, {1.0, 0.0}});
    const bool self = seed % 3 != 0;
    auto e = random_ensemble(50 + 15 * seed, KernelSpec::rank(t, self), 1.0, 1.0, seed);
    expect_identical(w_rank(e, t, self), support::brute_rank(e, t, self));
  }
}

TEST(Interactions, RankOnLatticeTies) {
  const auto t = RadialProfile::table({{0.0, 1.0}, {0.25, 0.5}, {1.0, 0.0}});
  auto e = lattice_ensemble(4, KernelSpec::rank(t), 5);
  expect_identical(w_rank(e, t, true), support::brute_rank(e, t, true));
}

TEST(Interactions, IsolatedAgentUnderNormalization) {
  std::vector<AgentState> a{{{0, 0, 0}, {1, 0, 0}, {}}, {{0.1, 0, 0}, {0, 1, 0}, {}}, {{5, 5, 5}, {0, 0, 1}, {}}};
  ModelParams p;
  auto e = Ensemble::make(p, KernelSpec::distance(RadialProfile::indicator(1.0), 0.5), a);
  try {
    w_distance(e, RadialProfile::indicator(1.0), 0.5);
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& err) {
    EXPECT_NE(std::string(err.what()).find("agent 2"), std::string::npos);
  }
  // q = 0 has no denominator.
  EXPECT_NO_THROW(w_distance(e, RadialProfile::indicator(1.0), 0.0));
}

TEST(Interactions, SelfTermConvention) {
  std::vector<AgentState> a{{{0, 0, 0}, {1, 0, 0}, {}}, {{5, 0, 0}, {0, 1, 0}, {}}};
  auto e = Ensemble::make({}, KernelSpec::constant(), a);
  const auto k = RadialProfile::indicator(1.0);
  EXPECT_EQ(w_distance(e, k, 0.0, true)[0], (Vec3{0.5, 0, 0}));
  EXPECT_EQ(w_distance(e, k, 0.0, false)[0], (Vec3{0, 0, 0}));
  // M_ii = 0, so T(0) weighs the agent itself; M_01 = 1/2 falls outside T.
  const auto t = RadialProfile::indicator(0.4);
  EXPECT_EQ(w_rank(e, t, true)[0], (Vec3{0.5, 0, 0}));
  EXPECT_EQ(w_rank(e, t, false)[0], (Vec3{0, 0, 0}));
}

TEST(Interactions, ResultIndependentOfThreadCount) {
  const auto k = RadialProfile::smooth_bump(0.5);
  auto e = random_ensemble(400, KernelSpec::distance(k, 0.0), 2.0, 1.0, 77);
  ::setenv("ISM_THREADS", "1", 1);
  const auto one = w_distance(e, k, 0.0);
  const auto rank_one = w_rank(e, k);
  ::setenv("ISM_THREADS", "4", 1);
  const auto four = w_distance(e, k, 0.0);
  const auto rank_four = w_rank(e, k);
  ::unsetenv("ISM_THREADS");
  expect_identical(one, four);
  expect_identical(rank_one, rank_four);
}

TEST(Interactions, SpatialIndexMatchesLinearScan) {
  Rng rng(4);
  std::vector<Vec3> pts(500);
  for (auto& p : pts) p = {3.0 * rng.uniform() - 1.0, 3.0 * rng.uniform(), -3.0 * rng.uniform()};
  const SpatialIndex idx(pts, 0.4);
  for (int k = 0; k < 50; ++k) {
    const Vec3 x = pts[static_cast<std::size_t>(k)];
    std::vector<std::size_t> expect;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (distance(x, pts[j]) < 0.35) expect.push_back(j);
    EXPECT_EQ(idx.query(x, 0.35), expect);
  }
  EXPECT_THROW(idx.query(pts[0], 0.5), DomainError);
}

TEST(Interactions, ContinuumConstantAndDistance) {
  std::vector<ContinuumSample> s{{{0, 0, 0}, 0.5, {1, 0, 0}}, {{0.5, 0, 0}, 0.25, {0, 1, 0}}, {{3, 0, 0}, 1.0, {0, 0, 1}}};
  EXPECT_EQ(continuum_w(s, {}, KernelSpec::constant(2.0)), (Vec3{1.0, 0.5, 2.0}));
  const auto k = KernelSpec::distance(RadialProfile::indicator(1.0), 1.0);
  const Vec3 w = continuum_w(s, {0.1, 0, 0}, k);
  EXPECT_NEAR(w.x, 0.5 / 0.75, 1e-15);
  EXPECT_NEAR(w.y, 0.25 / 0.75, 1e-15);
  EXPECT_EQ(w.z, 0.0);
  EXPECT_THROW(continuum_w(s, {10, 10, 10}, k), DomainError);
}

TEST(Interactions, ContinuumRankGroupsEqualDistances) {
  // Two samples at equal distance share the same mass-below and weight.
  std::vector<ContinuumSample> s{{{1, 0, 0}, 0.3, {1, 0, 0}}, {{-1, 0, 0}, 0.3, {0, 1, 0}}, {{0, 2, 0}, 0.4, {0, 0, 1}}};
  const auto t = RadialProfile::table({{0.0, 1.0}, {1.0, 0.0}});
  const Vec3 w = continuum_w(s, {}, KernelSpec::rank(t));
  EXPECT_DOUBLE_EQ(w.x, 0.3);
  EXPECT_DOUBLE_EQ(w.y, 0.3);
  EXPECT_DOUBLE_EQ(w.z, 0.4 * 0.4);
}
