#pragma once

#include <array>
#include <string>
#include <vector>

#include "ism/geometry.hpp"
#include "ism/kernel.hpp"

namespace ism::mono {

enum class ExpansionKind {
  Space,     // int K(|x-y|/eps) rho(y) (phi(y) - phi(x)) dy in R^3
  Line,      // int K(|x(z)|/eps) phi(z) dz along a curve
  LineRank,  // int T(M_{|x(z)|}/eps) phi(z) dz, M = lambda * length of {|x| < r}
};

const char* expansion_kind_name(ExpansionKind k);
ExpansionKind parse_expansion_kind(const std::string& s);

// Space problem: Gaussian density rho(y) = A exp(-|y - c|^2 / (2 w^2)) and
// quadratic phi(y) = g.y + y.H y / 2, evaluated at x.
struct SpaceProblem {
  RadialProfile kernel = RadialProfile::indicator(1.0);
  double rho_amplitude = 1.0;
  double rho_width = 0.7;
  Vec3 rho_center{0.3, -0.2, 0.1};
  Vec3 phi_gradient{0.5, -0.4, 0.8};
  Mat3 phi_hessian;  // symmetric
  Vec3 x{0.1, 0.2, -0.1};

  static SpaceProblem standard();
};

// Line problems: curve x(z) = c1 z + c2 z^2 + c3 z^3 (x(0) = 0) and
// phi(z) = p1 z + p2 z^2 + p3 z^3 (phi(0) = 0).
struct LineProblem {
  std::array<Vec3, 3> curve{Vec3{1.0, 0.0, 0.0}, Vec3{0.3, 0.5, 0.0}, Vec3{0.0, 0.0, 0.2}};
  std::array<double, 3> phi{1.0, 0.7, 0.4};
  RadialProfile kernel = RadialProfile::indicator(1.0);  // K for Line, T for LineRank
  double lambda = 1.5;                                   // LineRank only
};

struct ExpansionResult {
  double eps = 0.0;
  double exact = 0.0;       // quadrature of the left-hand side
  double asymptotic = 0.0;  // leading term
  double rel_error = 0.0;   // |exact - asymptotic| / |asymptotic| (0 if both vanish)
};

// Leading terms:
//   Space:    eps^5 b_K (rho lap(phi) / 2 + grad(rho).grad(phi))
//   Line:     eps^3 (b_2 / 2) (phi' / |x'|^3)'
//   LineRank: eps^3 b |x'|^3 / (8 lambda^3) (phi' / |x'|^3)',  b = int_0^1 T z^2
// with derivatives at z = 0 (resp. at x).
ExpansionResult expansion_check(const SpaceProblem& p, double eps);
ExpansionResult expansion_check(ExpansionKind kind, const LineProblem& p, double eps);

// Runs the standard problem for `kind` over eps_list.
std::vector<ExpansionResult> expansion_sweep(ExpansionKind kind, const std::vector<double>& eps_list);

// Least-squares slope of log(rel_error) against log(eps).
double loglog_slope(const std::vector<ExpansionResult>& rows);

// Slope expected for the relative error: 2 for every kind (next term is two
// powers of eps beyond the leading one).
double expected_slope(ExpansionKind kind);

}  // namespace ism::mono
