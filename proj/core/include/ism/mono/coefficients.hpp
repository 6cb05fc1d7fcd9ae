#pragma once

#include <functional>
#include <utility>

#include "ism/kernel.hpp"

namespace ism::mono {

// b_K = (1/3) int_{R^3} |z|^2 K(|z|) dz = (4 pi / 3) int_0^inf r^4 K(r) dr.
double coeff_bK(const RadialProfile& k);
// Same for an arbitrary profile with the given support (may be +infinity).
// Throws NumericalError when the integral diverges.
double coeff_bK(const std::function<double(double)>& k, double support);

struct LineCoefficients {
  double b0 = 0.0;  // int K(|z|) dz
  double b2 = 0.0;  // int K(|z|) z^2 dz
};

LineCoefficients coeff_line(const RadialProfile& k);
LineCoefficients coeff_line(const std::function<double(double)>& k, double support);

struct RankCoefficients {
  double bT = 0.0;      // (1/3) int |zeta|^2 T(4 pi |zeta|^3) dzeta
  double b_line = 0.0;  // int_0^inf T(z) z^2 dz
};

RankCoefficients coeff_rank(const RadialProfile& t);

// Zero-range coupling constants: j = J b_K / 2 (space) and
// j = J b_2 / (2 b_0) (line).
double j_space(double J, const RadialProfile& k);
double j_line(double J, const RadialProfile& k);

}  // namespace ism::mono
