#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ism/integrators.hpp"
#include "ism/model.hpp"

namespace ism {

struct AsymptoticVerdict {
  enum class Kind { Flocking, Aligned, Incoherent, Undecided };

  Kind kind = Kind::Undecided;
  std::vector<std::size_t> plus_set;   // Aligned/Flocking: v_i -> +v u_inf
  std::vector<std::size_t> minus_set;  // Aligned: v_i -> -v u_inf
  double w_inf_estimate = 0.0;
  // Worst values over the window.
  double max_sigma = 0.0;
  double max_w_norm = 0.0;
  double min_abs_cos = 1.0;

  static const char* kind_name(Kind k);
};

// Window = trailing fraction of the snapshots (at least one).
//   max|sigma| < tol and |w| < tol                 -> Incoherent
//   max|sigma| < tol and min_i |cos(v_i, w)| > 1-tol -> Aligned (Flocking if
//                                                    no agent points against w)
//   otherwise                                      -> Undecided
// Throws DomainError if the trajectory has no snapshots.
AsymptoticVerdict classify_asymptotic(const Trajectory& tr, double window_fraction = 0.1,
                                      double tol = 1e-6);

struct Thresholds {
  double aligned_bound = 0.0;   // J m^2 / (2N)
  double flocking_bound = 0.0;  // 2 J n_min (m - n_min) / N
};

// Sufficient energy thresholds for convergence to an aligned (resp. flocking)
// stationary state, m = sum n_i. Throws DomainError for n_i <= 0.
Thresholds corollary_thresholds(const ModelParams& p, const std::vector<double>& n);

struct WInfinity {
  double mean = 0.0;
  double band = 0.0;  // max deviation from the mean within the window
};

// Trailing-window average of |w(t)|.
WInfinity w_infinity(const Trajectory& tr, double window_fraction = 0.1);

// (v/N) |sum_{I+} n_i - sum_{I-} n_i|.
double aligned_w_norm(double v_speed, const std::vector<double>& n, const std::vector<int>& signs);

// Lower bound |w(0)|^2 - (v^2 / (J N)) sum |sigma_i(0)|^2 that |w(t)|^2 keeps
// whenever E(0) is below the aligned threshold.
double w_squared_lower_bound(const Ensemble& initial);

}  // namespace ism
