#pragma once

#include <functional>

namespace ism::quad {

// Adaptive Gauss-Kronrod (61 points) on [a, b]; b may be +infinity.
// Throws NumericalError if the error estimate exceeds
// 10 max(rel_tol |I|, abs_tol, 1e-14 int|f|) or the result is not finite.
// The estimate is conservative (about 1e-9 int|f| even for polynomials), so
// integrals that cancel to far below int|f| belong to gauss_legendre.
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-12,
                 double abs_tol = 0.0, unsigned max_depth = 20);

// Fixed Gauss-Legendre rule with `points` nodes (4 <= points <= 64, rounded
// to a supported size) on [a, b].
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int points = 32);

// `panels` equal subintervals, each with gauss_legendre(points).
double gauss_legendre_composite(const std::function<double(double)>& f, double a, double b, int panels,
                                int points = 64);

// Smallest supported Gauss-Legendre size >= points.
int gauss_legendre_size(int points);

}  // namespace ism::quad
