#pragma once

#include <cstddef>
#include <vector>

#include "ism/geometry.hpp"

namespace ism::mono {

// Periodic grid of M cells on [0, L) for the zero-range mono-kinetic system
//   d_t rho   = -div(rho u)
//   d_t u     = -(u.grad) u + sigma x u
//   d_t sigma = -(u.grad) sigma + (j / (v^2 rho^q)) u x lap(rho u)
// with all fields depending on x1 only.
struct MonokineticField1D {
  double length = 1.0;
  double j = 1.0;
  double q = 0.0;
  double v = 1.0;
  double t = 0.0;
  double floor_fraction = 1e-8;  // rho floor in rho^-q, relative to mean(rho)
  std::vector<double> rho;
  std::vector<Vec3> u;
  std::vector<Vec3> sigma;

  std::size_t cells() const { return rho.size(); }
  double dx() const { return length / static_cast<double>(rho.size()); }
  double cell_center(std::size_t i) const { return (static_cast<double>(i) + 0.5) * dx(); }

  // Uniform state (rho0, u0 scaled to |u0| = v, sigma = 0).
  static MonokineticField1D uniform(std::size_t cells, double length, double rho0, Vec3 u0, double j, double q,
                                    double v);

  // Throws ConfigError for inconsistent sizes, rho < 0 or |u| != v.
  void validate() const;
};

struct FieldRates {
  std::vector<double> rho;
  std::vector<Vec3> u;
  std::vector<Vec3> sigma;
};

// Second-order centered differences on the periodic grid.
FieldRates pde_rhs_1d(const MonokineticField1D& f);

// Small-perturbation speed relative to the flow: sqrt(j rho^(1-q)) when |u| = v.
double linear_wave_speed(double j, double rho, double q);

// Largest dt with dt <= cfl * dx / (v + max_cells sqrt(j rho^(1-q))).
double max_stable_dt(const MonokineticField1D& f, double cfl = 1.0);

// One RK4 step, renormalizing |u| = v after each stage. Throws NumericalError
// naming the admissible dt when dt exceeds max_stable_dt.
void pde_step_1d(MonokineticField1D& f, double dt, double cfl = 1.0);

double total_mass(const MonokineticField1D& f);
// sum_i rho_i sigma_i dx
Vec3 total_rho_sigma(const MonokineticField1D& f);

}  // namespace ism::mono
