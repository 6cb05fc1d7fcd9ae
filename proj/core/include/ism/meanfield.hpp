#pragma once

#include <cstddef>
#include <vector>

#include "ism/geometry.hpp"
#include "ism/model.hpp"
#include "ism/rng.hpp"

namespace ism::meanfield {

// h(x) = coth x - 1/x, h(0) = 0 (the Langevin function). Series for x < 1.
// Throws DomainError for x < 0.
double h(double x);
// h'(x) = 1/x^2 - 1/sinh^2 x, series for x < 1 (h'(0) = 1/3).
double h_prime(double x);

struct EquilibriumSolution {
  double beta_J = 0.0;
  double xi = 0.0;     // beta_J * gamma
  double gamma = 0.0;  // |w| / v
  Vec3 direction{0.0, 0.0, 1.0};
};

// Largest root xi >= 0 of xi = beta_J h(xi): sign scan on a log grid for
// brackets, then bisection to 1e-12 relative. xi = 0 when no positive root
// exists. Throws DomainError for beta_J < 0.
EquilibriumSolution solve_selfconsistency(double beta_J, Vec3 direction = {0.0, 0.0, 1.0});

// Positive roots of xi = beta_J h(xi) found by the same scan (ascending).
std::vector<double> positive_roots(double beta_J);

// Onset of the nonzero branch located by bisection on solve_selfconsistency.
double critical_coupling(double lo = 0.5, double hi = 10.0, double tol = 1e-10);

// w - <v>_w where <v>_w is the mean of v under the density
// exp(beta_J w.v / v^2) on the sphere of radius v; closed form
// <v>_w = v h(beta_J |w| / v) w^.
Vec3 selfconsistency_residual(const Vec3& w, double beta_J, double v_speed);

// N agents at the product equilibrium: velocities from exp(kappa cos theta)
// about sol.direction (kappa = xi) on the sphere of radius v, spins Gaussian
// in the tangent plane with variance 1/beta per direction. Positions are zero.
Ensemble sample_equilibrium(const EquilibriumSolution& sol, double beta, const ModelParams& params,
                            std::size_t N, Rng& rng);

// Single draw of cos theta for the von Mises-Fisher density on S^2.
double sample_vmf_cos(double kappa, double u);

// Free energy on product densities f(v, s) = f_*(s) h_kappa(v^), with f_* the
// tangential Gaussian at temperature 1/beta:
//   F(kappa) = log(kappa / (4 pi v^2 sinh kappa)) + kappa L
//            + log(beta / 2 pi) - 1 + 1 - beta J L^2 / 2 + beta J / 2,
// L = h(kappa). The delta(v.s) factor contributes an omitted constant, so only
// differences in kappa are meaningful.
double free_energy_product(double kappa, double beta, double J, double v_speed);

}  // namespace ism::meanfield
