#include "ism/geometry.hpp"

#include <cmath>

#include "ism/error.hpp"

namespace ism {

Mat3 operator*(const Mat3& m, const Mat3& n) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = m(i, 0) * n(0, j) + m(i, 1) * n(1, j) + m(i, 2) * n(2, j);
  return r;
}

Mat3 transpose(const Mat3& m) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = m(j, i);
  return r;
}

double trace(const Mat3& m) { return m(0, 0) + m(1, 1) + m(2, 2); }

Mat3 identity3() {
  Mat3 r;
  r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
  return r;
}

Mat3 outer(const Vec3& a, const Vec3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
  return r;
}

Mat3 omega_matrix(const Vec3& u) {
  Mat3 m;
  m(0, 1) = u.z;
  m(0, 2) = -u.y;
  m(1, 0) = -u.z;
  m(1, 2) = u.x;
  m(2, 0) = u.y;
  m(2, 1) = -u.x;
  return m;
}

Vec3 tangent_project(const Vec3& v, const Vec3& a) {
  const double vv = norm2(v);
  if (!(vv > 0.0)) throw DomainError("tangent_project: degenerate velocity");
  return a - (dot(v, a) / vv) * v;
}

namespace {

// Coefficients of  v(dt) = v + a (w x v) + b w x (w x v)  and
// int_0^dt v = dt v + b (w x v) + c w x (w x v), theta = |w| dt.
struct RotationCoefficients {
  double a, b, c;
};

RotationCoefficients rotation_coefficients(double wn, double dt) {
  const double th = wn * dt;
  const double th2 = th * th;
  if (std::abs(th) < 1e-4) {
    const double dt2 = dt * dt;
    return {dt * (1.0 - th2 / 6.0 * (1.0 - th2 / 20.0)),
            dt2 * (0.5 - th2 / 24.0 * (1.0 - th2 / 30.0)),
            dt2 * dt * (1.0 / 6.0 - th2 / 120.0 * (1.0 - th2 / 42.0))};
  }
  const double s = std::sin(th);
  const double h = std::sin(0.5 * th);
  const double w2 = wn * wn;
  return {s / wn, 2.0 * h * h / w2, (th - s) / (w2 * wn)};
}

}  // namespace

Vec3 rotate_about(const Vec3& v, const Vec3& omega, double dt) {
  const double wn = norm(omega);
  const auto k = rotation_coefficients(wn, dt);
  const Vec3 wv = cross(omega, v);
  const Vec3 r = v + k.a * wv + k.b * cross(omega, wv);
  const double n0 = norm2(v);
  const double n1 = norm2(r);
  if (n1 > 0.0 && n1 != n0) return std::sqrt(n0 / n1) * r;
  return r;
}

Vec3 rotation_arc(const Vec3& v, const Vec3& omega, double dt) {
  const double wn = norm(omega);
  const auto k = rotation_coefficients(wn, dt);
  const Vec3 wv = cross(omega, v);
  return dt * v + k.b * wv + k.c * cross(omega, wv);
}

Vec3 any_orthogonal(const Vec3& a) {
  const Vec3 e = (std::abs(a.x) <= std::abs(a.y) && std::abs(a.x) <= std::abs(a.z))
                     ? Vec3{1, 0, 0}
                     : (std::abs(a.y) <= std::abs(a.z) ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
  const Vec3 o = cross(a, e);
  return o / norm(o);
}

}  // namespace ism
