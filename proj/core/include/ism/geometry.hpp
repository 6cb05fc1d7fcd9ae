#pragma once

#include <array>
#include <cmath>

namespace ism {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double a) {
    x *= a;
    y *= a;
    z *= a;
    return *this;
  }

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
constexpr Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

constexpr double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }
inline bool is_finite(const Vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> a{};

  constexpr double operator()(int r, int c) const { return a[3 * r + c]; }
  constexpr double& operator()(int r, int c) { return a[3 * r + c]; }

  friend constexpr bool operator==(const Mat3&, const Mat3&) = default;
};

constexpr Vec3 operator*(const Mat3& m, const Vec3& b) {
  return {m(0, 0) * b.x + m(0, 1) * b.y + m(0, 2) * b.z,
          m(1, 0) * b.x + m(1, 1) * b.y + m(1, 2) * b.z,
          m(2, 0) * b.x + m(2, 1) * b.y + m(2, 2) * b.z};
}

Mat3 operator*(const Mat3& m, const Mat3& n);
Mat3 transpose(const Mat3& m);
double trace(const Mat3& m);
Mat3 identity3();
Mat3 outer(const Vec3& a, const Vec3& b);

// Skew matrix with omega_matrix(u) * b == cross(b, u).
//
//   [  0   u3  -u2 ]
//   [ -u3   0   u1 ]
//   [  u2 -u1   0  ]
Mat3 omega_matrix(const Vec3& u);

// (Id - v^ v^) a. Throws DomainError for v == 0.
Vec3 tangent_project(const Vec3& v, const Vec3& a);

// Exact flow of dv/dt = omega x v over time dt (right-handed rotation about
// omega by angle |omega| dt). The result is rescaled to |v| so that repeated
// application does not accumulate a norm drift.
Vec3 rotate_about(const Vec3& v, const Vec3& omega, double dt);

// Integral of the same flow over [0, dt]: the displacement of a point moving
// with velocity v(t) solving dv/dt = omega x v.
Vec3 rotation_arc(const Vec3& v, const Vec3& omega, double dt);

// Some unit vector orthogonal to a (a != 0).
Vec3 any_orthogonal(const Vec3& a);

}  // namespace ism
