#include "ism/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "ism/error.hpp"

namespace ism {

const char* AsymptoticVerdict::kind_name(Kind k) {
  switch (k) {
    case Kind::Flocking:
      return "Flocking";
    case Kind::Aligned:
      return "Aligned";
    case Kind::Incoherent:
      return "Incoherent";
    case Kind::Undecided:
      return "Undecided";
  }
  return "?";
}

namespace {

std::size_t window_start(std::size_t n, double fraction) {
  const auto len = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(fraction * n)));
  return n - std::min(n, len);
}

}  // namespace

AsymptoticVerdict classify_asymptotic(const Trajectory& tr, double window_fraction, double tol) {
  const auto& d = tr.diagnostics;
  if (d.empty()) throw DomainError("classify_asymptotic: empty trajectory");
  AsymptoticVerdict out;
  for (std::size_t k = window_start(d.size(), window_fraction); k < d.size(); ++k) {
    out.max_sigma = std::max(out.max_sigma, d[k].max_sigma);
    out.max_w_norm = std::max(out.max_w_norm, d[k].w_norm);
    out.min_abs_cos = std::min(out.min_abs_cos, d[k].min_abs_cos);
  }
  out.w_inf_estimate = w_infinity(tr, window_fraction).mean;

  if (!(out.max_sigma < tol)) return out;
  if (out.max_w_norm < tol) {
    out.kind = AsymptoticVerdict::Kind::Incoherent;
    return out;
  }
  if (out.min_abs_cos > 1.0 - tol) {
    for (std::size_t i = 0; i < tr.final_signs.size(); ++i)
      (tr.final_signs[i] < 0 ? out.minus_set : out.plus_set).push_back(i);
    out.kind = out.minus_set.empty() ? AsymptoticVerdict::Kind::Flocking : AsymptoticVerdict::Kind::Aligned;
  }
  return out;
}

Thresholds corollary_thresholds(const ModelParams& p, const std::vector<double>& n) {
  if (n.empty()) throw DomainError("corollary_thresholds: empty weights");
  double m = 0.0, nmin = n.front();
  for (double x : n) {
    if (!(x > 0.0)) throw DomainError("corollary_thresholds: weights must be positive");
    m += x;
    nmin = std::min(nmin, x);
  }
  const double N = static_cast<double>(n.size());
  return {p.J * m * m / (2.0 * N), 2.0 * p.J * nmin * (m - nmin) / N};
}

WInfinity w_infinity(const Trajectory& tr, double window_fraction) {
  const auto& d = tr.diagnostics;
  WInfinity out;
  if (d.empty()) return out;
  const std::size_t b = window_start(d.size(), window_fraction);
  for (std::size_t k = b; k < d.size(); ++k) out.mean += d[k].w_norm;
  out.mean /= static_cast<double>(d.size() - b);
  for (std::size_t k = b; k < d.size(); ++k) out.band = std::max(out.band, std::abs(d[k].w_norm - out.mean));
  return out;
}

double aligned_w_norm(double v_speed, const std::vector<double>& n, const std::vector<int>& signs) {
  double s = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) s += signs[i] < 0 ? -n[i] : n[i];
  return v_speed / static_cast<double>(n.size()) * std::abs(s);
}

double w_squared_lower_bound(const Ensemble& initial) {
  double s2 = 0.0;
  for (const Vec3& s : sigma_of(initial)) s2 += norm2(s);
  const double v2 = initial.params.v_speed * initial.params.v_speed;
  const double N = static_cast<double>(initial.size());
  return norm2(mean_velocity(initial)) - v2 / (initial.params.J * N) * s2;
}

}  // namespace ism
