#include <gtest/gtest.h>

#include <cmath>

#include "ism/error.hpp"
#include "ism/geometry.hpp"
#include "ism/rng.hpp"

using namespace ism;

TEST(Geometry, CrossProductFrozen) {
  EXPECT_EQ(cross({1, 2, 3}, {4, 5, 6}), (Vec3{-3, 6, -3}));
}

TEST(Geometry, OmegaTraceFrozen) {
  const Mat3 m = omega_matrix({1, 2, 3});
  EXPECT_DOUBLE_EQ(trace(transpose(m) * m), 28.0);
}

TEST(Geometry, OmegaActsAsCrossProduct) {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const Vec3 u = rng.normal3(), b = rng.normal3();
    const Vec3 d = omega_matrix(u) * b - cross(b, u);
    EXPECT_LT(norm(d), 1e-14 * (1.0 + norm(u) * norm(b)));
  }
}

TEST(Geometry, OmegaIsSkew) {
  const Mat3 m = omega_matrix({0.3, -1.2, 2.0});
  const Mat3 t = transpose(m);
  for (int i = 0; i < 9; ++i) EXPECT_EQ(m.a[i], -t.a[i]);
}

TEST(Geometry, TangentProjectRemovesNormalPart) {
  const Vec3 v{1, 2, 2}, a{0.5, -3, 4};
  EXPECT_NEAR(dot(tangent_project(v, a), v), 0.0, 1e-14);
  EXPECT_THROW(tangent_project({0, 0, 0}, a), DomainError);
}

TEST(Geometry, RotateAboutMatchesRodrigues) {
  const Vec3 v{1, 0, 0}, w{0, 0, 2};
  const Vec3 r = rotate_about(v, w, 0.25);  // angle 0.5 about +z
  EXPECT_NEAR(r.x, std::cos(0.5), 1e-15);
  EXPECT_NEAR(r.y, std::sin(0.5), 1e-15);
  EXPECT_NEAR(r.z, 0.0, 1e-15);
}

TEST(Geometry, RotateAboutPreservesNormAndAxisComponent) {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const Vec3 v = rng.normal3(), w = rng.normal3();
    const double dt = std::pow(10.0, -8.0 + 8.0 * rng.uniform());
    const Vec3 r = rotate_about(v, w, dt);
    EXPECT_NEAR(norm(r), norm(v), 1e-15 * norm(v));
    EXPECT_NEAR(dot(r, w), dot(v, w), 1e-13 * norm(v) * norm(w));
  }
}

TEST(Geometry, RotateAboutSmallAngleBranchIsContinuous) {
  const Vec3 v{0.3, -0.4, 0.8}, w{1.0, 2.0, -0.5};
  const double n = norm(w);
  // Rodrigues in long double on both sides of the series cutoff.
  for (double th : {0.999e-4, 1.001e-4}) {
    const long double t = th, s = std::sin(t), c = 1.0L - std::cos(t);
    const Vec3 u = w / n, uv = cross(u, v), uuv = cross(u, uv);
    const Vec3 ref{static_cast<double>(v.x + s * uv.x + c * uuv.x), static_cast<double>(v.y + s * uv.y + c * uuv.y),
                   static_cast<double>(v.z + s * uv.z + c * uuv.z)};
    EXPECT_LT(norm(rotate_about(v, w, th / n) - ref), 1e-15) << th;
  }
}

TEST(Geometry, RotationArcIsTheIntegralOfTheRotation) {
  const Vec3 v{0.2, 0.9, -0.3}, w{0.7, -0.1, 1.3};
  const double t = 0.8, h = 1e-5;
  const Vec3 deriv = (rotation_arc(v, w, t + h) - rotation_arc(v, w, t - h)) / (2.0 * h);
  EXPECT_LT(norm(deriv - rotate_about(v, w, t)), 1e-9);
  EXPECT_LT(norm(rotation_arc(v, w, 0.0)), 1e-300);
}

TEST(Geometry, AnyOrthogonalIsUnitAndOrthogonal) {
  for (const Vec3 a : {Vec3{1, 0, 0}, Vec3{0, 0, 1}, Vec3{1e-3, 2, -5}}) {
    const Vec3 o = any_orthogonal(a);
    EXPECT_NEAR(norm(o), 1.0, 1e-15);
    EXPECT_NEAR(dot(o, a), 0.0, 1e-15 * norm(a));
  }
}
