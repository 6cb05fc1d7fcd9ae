#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ism::mono {

// Planar rotation-field reduction on a periodic Cartesian grid of
// nx * ny cells covering [-half_width, half_width)^2:
//   d_t rho   + v div(rho U)        = 0
//   d_t theta + v U.grad theta      = sigma
//   d_t sigma + v U.grad sigma      = (j / rho^(1+q)) div(rho^2 grad theta)
// with U(theta) = (-sin theta, cos theta).
struct PolarField2D {
  std::size_t n = 0;  // cells per side
  double half_width = 1.0;
  double v = 1.0;
  double j = 1.0;
  double q = 0.0;
  std::vector<double> rho, theta, sigma;  // row-major, index = iy * n + ix

  double h() const { return 2.0 * half_width / static_cast<double>(n); }
  double x_of(std::size_t ix) const { return -half_width + (static_cast<double>(ix) + 0.5) * h(); }
};

// rho = g(r), theta = polar angle, sigma = v / r: the rigidly rotating
// stationary state. Throws DomainError if g is nonzero within two cells of
// the origin.
PolarField2D polar_rotating_state(const std::function<double(double)>& g, std::size_t n, double half_width,
                                  double v, double j, double q);

struct PolarResidual {
  double rho = 0.0;    // max |d_t rho|
  double theta = 0.0;  // max |d_t theta|
  double sigma = 0.0;  // max |d_t sigma|
  double max = 0.0;
  std::size_t cells = 0;  // cells in the evaluation core
};

// Max-norm of the discrete time derivatives over the core
// {rho >= core_fraction * max rho}. Angle differences are wrapped to
// (-pi, pi]; div(rho^2 grad theta) uses face fluxes. Zero density gives an
// empty core and a zero residual.
PolarResidual polar_residual(const PolarField2D& f, double core_fraction = 0.1);

}  // namespace ism::mono
