#include <gtest/gtest.h>

#include <cmath>

#include "ism/error.hpp"
#include "ism/kernel.hpp"

using namespace ism;

TEST(Kernel, IndicatorIsOpenAtTheRadius) {
  const auto k = RadialProfile::indicator(2.0);
  EXPECT_EQ(k(0.0), 1.0);
  EXPECT_EQ(k(1.999), 1.0);
  EXPECT_EQ(k(2.0), 0.0);
  EXPECT_EQ(k.support(), 2.0);
}

TEST(Kernel, SmoothBumpValues) {
  const auto k = RadialProfile::smooth_bump(1.0);
  EXPECT_DOUBLE_EQ(k(0.0), 1.0);
  EXPECT_DOUBLE_EQ(k(0.5), std::exp(1.0 - 1.0 / 0.75));
  EXPECT_EQ(k(1.0), 0.0);
  EXPECT_GT(k(0.999), 0.0);
}

TEST(Kernel, TableInterpolatesLinearly) {
  const auto k = RadialProfile::table({{0.0, 1.0}, {0.5, 0.5}, {1.0, 0.0}});
  EXPECT_DOUBLE_EQ(k(0.25), 0.75);
  EXPECT_DOUBLE_EQ(k(0.75), 0.25);
  EXPECT_EQ(k(1.5), 0.0);
  EXPECT_EQ(k.support(), 1.0);
}

TEST(Kernel, TableValidation) {
  EXPECT_THROW(RadialProfile::table({{0.1, 1.0}, {1.0, 0.0}}), ConfigError);
  EXPECT_THROW(RadialProfile::table({{0.0, 1.0}, {0.0, 0.5}, {1.0, 0.0}}), ConfigError);
  EXPECT_THROW(RadialProfile::table({{0.0, 1.0}, {0.5, 1.5}, {1.0, 0.0}}), ConfigError);
  EXPECT_THROW(RadialProfile::table({{0.0, 1.0}, {1.0, 0.2}}), ConfigError);
}

TEST(Kernel, ScaledProfile) {
  const auto k = RadialProfile::smooth_bump(1.0).scaled(3.0);
  EXPECT_EQ(k.support(), 3.0);
  EXPECT_DOUBLE_EQ(k(1.5), RadialProfile::smooth_bump(1.0)(0.5));
}

TEST(Kernel, DistanceExponentOutsideUnitIntervalIsRejected) {
  EXPECT_THROW(KernelSpec::distance(RadialProfile::indicator(1.0), 1.5).validate(), ConfigError);
  EXPECT_THROW(KernelSpec::distance(RadialProfile::indicator(1.0), -0.1).validate(), ConfigError);
  EXPECT_NO_THROW(KernelSpec::distance(RadialProfile::indicator(1.0), 1.0).validate());
}

TEST(Kernel, MultiplicativeWeightsMustBePositive) {
  EXPECT_THROW(KernelSpec::multiplicative({1.0, 0.0}).validate(), ConfigError);
  EXPECT_NO_THROW(KernelSpec::multiplicative({1.0, 0.5}).validate());
}

TEST(Kernel, PositionDependence) {
  EXPECT_FALSE(KernelSpec::constant().position_dependent());
  EXPECT_FALSE(KernelSpec::multiplicative({1.0}).position_dependent());
  EXPECT_TRUE(KernelSpec::distance(RadialProfile::indicator(1.0), 0.0).position_dependent());
  EXPECT_TRUE(KernelSpec::rank(RadialProfile::indicator(1.0)).position_dependent());
}
