#include "ism/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "ism/error.hpp"

namespace ism::quad {

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol, double abs_tol,
                 unsigned max_depth) {
  if (a == b) return 0.0;
  double err = 0.0;
  double l1 = 0.0;
  const double v =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, max_depth, rel_tol, &err, &l1);
  if (!std::isfinite(v)) throw NumericalError("quadrature: non-finite result (divergent integral?)");
  // Cancellation leaves v far below the integrand's size; roundoff is bounded
  // by the L1 norm, not by v.
  const double floor = 1e-14 * l1;
  if (err > std::max({rel_tol * std::abs(v), abs_tol, floor}) * 10.0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", err);
    throw NumericalError(std::string("quadrature: no convergence (error estimate ") + buf + ")");
  }
  return v;
}

int gauss_legendre_size(int points) {
  for (int s : {4, 8, 16, 24, 32, 48, 64})
    if (points <= s) return s;
  return 64;
}

namespace {
template <int P>
double gl(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss<double, P>::integrate(f, a, b);
}
}  // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int points) {
  switch (gauss_legendre_size(points)) {
    case 4:
      return gl<4>(f, a, b);
    case 8:
      return gl<8>(f, a, b);
    case 16:
      return gl<16>(f, a, b);
    case 24:
      return gl<24>(f, a, b);
    case 32:
      return gl<32>(f, a, b);
    case 48:
      return gl<48>(f, a, b);
    default:
      return gl<64>(f, a, b);
  }
}

double gauss_legendre_composite(const std::function<double(double)>& f, double a, double b, int panels,
                                int points) {
  if (panels < 1) panels = 1;
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * h;
    const double hi = i + 1 == panels ? b : lo + h;
    sum += gauss_legendre(f, lo, hi, points);
  }
  return sum;
}

}  // namespace ism::quad
