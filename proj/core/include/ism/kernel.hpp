#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ism {

// Nonnegative, nonincreasing, compactly supported radial profile.
//
// Indicator(R):  1 for r < R, 0 otherwise.
// SmoothBump(R): exp(1 - 1/(1 - (r/R)^2)) for r < R, so K(0) = 1.
// Table:         piecewise linear through (r_k, value_k), 0 past the last knot.
class RadialProfile {
 public:
  enum class Kind { Indicator, SmoothBump, Table };

  RadialProfile() = default;

  static RadialProfile indicator(double radius);
  static RadialProfile smooth_bump(double radius);
  static RadialProfile table(std::vector<std::pair<double, double>> knots);

  double operator()(double r) const;

  Kind kind() const { return kind_; }
  // K(r) == 0 for every r >= support().
  double support() const { return radius_; }
  const std::vector<std::pair<double, double>>& knots() const { return knots_; }

  // Same shape with support scaled by s: K_s(r) = K(r / s).
  RadialProfile scaled(double s) const;

  static const char* kind_name(Kind k);

 private:
  Kind kind_ = Kind::Indicator;
  double radius_ = 1.0;
  std::vector<std::pair<double, double>> knots_;
};

// Communication-weight rule n_ij.
struct KernelSpec {
  enum class Kind { Constant, Multiplicative, Distance, Rank };

  Kind kind = Kind::Constant;
  double c = 1.0;                 // Constant
  std::vector<double> n;          // Multiplicative
  RadialProfile profile;          // Distance (K) or Rank (T on [0, 1])
  double q = 0.0;                 // Distance normalization exponent
  // Whether j == i contributes K(0) v_i (Distance) or T(0) v_i (Rank) to the
  // numerator of w_i. The distance normalization n_i always excludes j == i.
  bool include_self = true;

  static KernelSpec constant(double c = 1.0);
  static KernelSpec multiplicative(std::vector<double> n);
  static KernelSpec distance(RadialProfile k, double q, bool include_self = true);
  static KernelSpec rank(RadialProfile t, bool include_self = true);

  bool position_dependent() const { return kind == Kind::Distance || kind == Kind::Rank; }

  // Throws ConfigError on out-of-range parameters.
  void validate() const;

  static const char* kind_name(Kind k);
};

}  // namespace ism
