#include "ism/mono/coefficients.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "ism/error.hpp"
#include "ism/quadrature.hpp"

namespace ism::mono {

namespace {

// int_0^R g(r) K(r) dr, split at the table knots so each piece is smooth.
double radial_moment(const RadialProfile& k, const std::function<double(double)>& g) {
  std::vector<double> cuts{0.0};
  if (k.kind() == RadialProfile::Kind::Table)
    for (std::size_t i = 1; i < k.knots().size(); ++i) cuts.push_back(k.knots()[i].first);
  else
    cuts.push_back(k.support());
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    s += quad::integrate([&](double r) { return g(r) * k(r); }, cuts[i], cuts[i + 1], 1e-13, 1e-300);
  return s;
}

}  // namespace

double coeff_bK(const RadialProfile& k) {
  return 4.0 * std::numbers::pi / 3.0 * radial_moment(k, [](double r) { return r * r * r * r; });
}

double coeff_bK(const std::function<double(double)>& k, double support) {
  return 4.0 * std::numbers::pi / 3.0 *
         quad::integrate([&](double r) { return r * r * r * r * k(r); }, 0.0, support, 1e-11, 1e-300);
}

LineCoefficients coeff_line(const RadialProfile& k) {
  return {2.0 * radial_moment(k, [](double) { return 1.0; }),
          2.0 * radial_moment(k, [](double z) { return z * z; })};
}

LineCoefficients coeff_line(const std::function<double(double)>& k, double support) {
  return {2.0 * quad::integrate(k, 0.0, support, 1e-11, 1e-300),
          2.0 * quad::integrate([&](double z) { return z * z * k(z); }, 0.0, support, 1e-11, 1e-300)};
}

RankCoefficients coeff_rank(const RadialProfile& t) {
  RankCoefficients c;
  c.b_line = radial_moment(t, [](double z) { return z * z; });
  // T(4 pi r^3) vanishes once 4 pi r^3 >= support(T).
  const double rmax = std::cbrt(t.support() / (4.0 * std::numbers::pi));
  std::vector<double> cuts{0.0};
  if (t.kind() == RadialProfile::Kind::Table)
    for (std::size_t i = 1; i < t.knots().size(); ++i)
      cuts.push_back(std::cbrt(t.knots()[i].first / (4.0 * std::numbers::pi)));
  else
    cuts.push_back(rmax);
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    s += quad::integrate(
        [&](double r) { return r * r * r * r * t(4.0 * std::numbers::pi * r * r * r); }, cuts[i], cuts[i + 1],
        1e-13, 1e-300);
  c.bT = 4.0 * std::numbers::pi / 3.0 * s;
  return c;
}

double j_space(double J, const RadialProfile& k) { return J * coeff_bK(k) / 2.0; }

double j_line(double J, const RadialProfile& k) {
  const auto c = coeff_line(k);
  if (!(c.b0 > 0.0)) throw DomainError("j_line: profile has zero mass");
  return J * c.b2 / (2.0 * c.b0);
}

}  // namespace ism::mono
