#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ism/geometry.hpp"

namespace ism::mono {

// Arc-length parametrized reference curves Gamma(alpha).
//   Line:   (alpha, 0, 0)
//   Helix:  (a cos(alpha/c), a sin(alpha/c), b alpha/c), c = sqrt(a^2 + b^2)
//           with curvature a/c^2 and torsion b/c^2; b = 0 is a circle.
class ArcCurve {
 public:
  enum class Kind { Line, Helix };

  static ArcCurve line(double period_length = 1.0);
  static ArcCurve circle(double radius);
  static ArcCurve helix(double a, double b);
  // Helix with prescribed curvature kappa > 0 and torsion tau.
  static ArcCurve helix_from_frenet(double kappa, double tau);

  Vec3 position(double alpha) const;
  Vec3 d1(double alpha) const;  // unit tangent
  Vec3 d2(double alpha) const;
  Vec3 d3(double alpha) const;

  // Gamma(alpha + period()) = Gamma(alpha) + period_shift().
  double period() const;
  Vec3 period_shift() const;

  Kind kind() const { return kind_; }
  double a() const { return a_; }
  double b() const { return b_; }

 private:
  Kind kind_ = Kind::Line;
  double a_ = 0.0, b_ = 0.0, len_ = 1.0;
};

// Lagrangian samples z_i = i dz of a curve of agents.
struct LineChain {
  std::vector<Vec3> x, v, s;
  double dz = 1.0;
  bool periodic = true;
  Vec3 shift;  // periodic closure: x(z + M dz) = x(z) + shift
  double lambda = 1.0;
  double j = 1.0;
  double q = 0.0;
  double v_speed = 1.0;
  double t = 0.0;

  std::size_t size() const { return x.size(); }
};

struct ChainRates {
  std::vector<Vec3> x, v, s;
};

// dx/dt = v, dv/dt = s x v,
// ds/dt = (j lambda^(1-q) |x'|^q / v^2) v x d/dz(v' / |x'|^3).
// Periodic chains use a compact half-node stencil for d/dz(v'/|x'|^3); open
// chains use second-order one-sided differences at the ends. Throws
// NumericalError when |x'| falls below 1e-12.
ChainRates line_rhs(const LineChain& c);

// RK4 step; afterwards |v| = v_speed and v.s = 0 are restored per sample.
void line_step(LineChain& c, double dt);

struct TravelingChain {
  LineChain chain;
  bool condition_holds = false;  // v^2 / j == (lambda / gamma)^(1-q)
  std::string warning;
};

// Samples x = Gamma(gamma z + v t), v = v Gamma', s = v Gamma' x Gamma'' over
// one period of the curve with M points.
TravelingChain traveling_curve(const ArcCurve& curve, double gamma, double t, std::size_t M, double lambda,
                               double j, double q, double v_speed);

// max_i |x_i - Gamma(gamma z_i + v t)| for the chain's current time.
double chain_deviation(const LineChain& c, const ArcCurve& curve, double gamma);

}  // namespace ism::mono
