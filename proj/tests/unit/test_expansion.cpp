#include <gtest/gtest.h>

#include "ism/error.hpp"
#include "ism/mono/expansion.hpp"

using namespace ism;
using namespace ism::mono;

namespace {
const std::vector<double> kSweep{0.2, 0.1, 0.05, 0.025};

std::vector<ExpansionResult> line_sweep(ExpansionKind kind, const LineProblem& p) {
  std::vector<ExpansionResult> rows;
  for (double e : kSweep) rows.push_back(expansion_check(kind, p, e));
  return rows;
}
}  // namespace

TEST(Expansion, KindNames) {
  for (auto k : {ExpansionKind::Space, ExpansionKind::Line, ExpansionKind::LineRank})
    EXPECT_EQ(parse_expansion_kind(expansion_kind_name(k)), k);
  EXPECT_THROW(parse_expansion_kind("volume"), ConfigError);
}

TEST(Expansion, StandardSweepsConvergeAtTheExpectedOrder) {
  for (auto k : {ExpansionKind::Space, ExpansionKind::Line, ExpansionKind::LineRank}) {
    const auto rows = expansion_sweep(k, kSweep);
    EXPECT_NEAR(loglog_slope(rows), expected_slope(k), 0.3) << expansion_kind_name(k);
    EXPECT_LT(rows.back().rel_error, rows.front().rel_error);
  }
}

TEST(Expansion, SmoothKernels) {
  SpaceProblem sp = SpaceProblem::standard();
  sp.kernel = RadialProfile::smooth_bump(1.0);
  std::vector<ExpansionResult> rows;
  for (double e : kSweep) rows.push_back(expansion_check(sp, e));
  EXPECT_NEAR(loglog_slope(rows), 2.0, 0.3);

  LineProblem lp;
  lp.kernel = RadialProfile::smooth_bump(1.0);
  EXPECT_NEAR(loglog_slope(line_sweep(ExpansionKind::Line, lp)), 2.0, 0.3);
  lp.kernel = RadialProfile::table({{0.0, 1.0}, {0.5, 0.6}, {1.0, 0.0}});
  EXPECT_NEAR(loglog_slope(line_sweep(ExpansionKind::LineRank, lp)), 2.0, 0.3);
}

TEST(Expansion, LeadingTermScaling) {
  const auto a = expansion_check(SpaceProblem::standard(), 0.1);
  const auto b = expansion_check(SpaceProblem::standard(), 0.05);
  EXPECT_NEAR(a.asymptotic / b.asymptotic, 32.0, 1e-12);
  LineProblem lp;
  const auto c = expansion_check(ExpansionKind::Line, lp, 0.1);
  const auto d = expansion_check(ExpansionKind::Line, lp, 0.05);
  EXPECT_NEAR(c.asymptotic / d.asymptotic, 8.0, 1e-12);
}

TEST(Expansion, InvalidArguments) {
  EXPECT_THROW(expansion_check(SpaceProblem::standard(), 0.0), DomainError);
  LineProblem lp;
  EXPECT_THROW(expansion_check(ExpansionKind::Space, lp, 0.1), DomainError);
  lp.lambda = 0.0;
  EXPECT_THROW(expansion_check(ExpansionKind::LineRank, lp, 0.1), DomainError);
}
