#include "ism/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "ism/error.hpp"

namespace ism {

RadialProfile RadialProfile::indicator(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw ConfigError("indicator profile: radius must be positive and finite");
  RadialProfile p;
  p.kind_ = Kind::Indicator;
  p.radius_ = radius;
  return p;
}

RadialProfile RadialProfile::smooth_bump(double radius) {
  RadialProfile p = indicator(radius);
  p.kind_ = Kind::SmoothBump;
  return p;
}

RadialProfile RadialProfile::table(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) throw ConfigError("table profile: need at least two knots");
  for (std::size_t k = 0; k < knots.size(); ++k) {
    const auto [r, val] = knots[k];
    if (!std::isfinite(r) || !std::isfinite(val)) throw ConfigError("table profile: non-finite knot");
    if (val < 0.0) throw ConfigError("table profile: negative value");
    if (k == 0 && r != 0.0) throw ConfigError("table profile: first knot must be at r = 0");
    if (k > 0 && !(r > knots[k - 1].first))
      throw ConfigError("table profile: knot positions must be strictly increasing");
    if (k > 0 && val > knots[k - 1].second)
      throw ConfigError("table profile: values must be nonincreasing");
  }
  if (knots.back().second != 0.0) throw ConfigError("table profile: last value must be 0");
  RadialProfile p;
  p.kind_ = Kind::Table;
  p.radius_ = knots.back().first;
  p.knots_ = std::move(knots);
  return p;
}

double RadialProfile::operator()(double r) const {
  if (!(r < radius_)) return 0.0;
  switch (kind_) {
    case Kind::Indicator:
      return 1.0;
    case Kind::SmoothBump: {
      const double t = r / radius_;
      return std::exp(1.0 - 1.0 / (1.0 - t * t));
    }
    case Kind::Table: {
      if (r <= 0.0) return knots_.front().second;
      auto it = std::upper_bound(knots_.begin(), knots_.end(), r,
                                 [](double x, const auto& k) { return x < k.first; });
      const auto& [r1, v1] = *it;
      const auto& [r0, v0] = *(it - 1);
      return v0 + (v1 - v0) * (r - r0) / (r1 - r0);
    }
  }
  return 0.0;
}

RadialProfile RadialProfile::scaled(double s) const {
  if (!(s > 0.0)) throw DomainError("RadialProfile::scaled: factor must be positive");
  RadialProfile p = *this;
  p.radius_ *= s;
  for (auto& k : p.knots_) k.first *= s;
  return p;
}

const char* RadialProfile::kind_name(Kind k) {
  switch (k) {
    case Kind::Indicator:
      return "indicator";
    case Kind::SmoothBump:
      return "smooth_bump";
    case Kind::Table:
      return "table";
  }
  return "?";
}

KernelSpec KernelSpec::constant(double c) {
  KernelSpec k;
  k.kind = Kind::Constant;
  k.c = c;
  k.validate();
  return k;
}

KernelSpec KernelSpec::multiplicative(std::vector<double> n) {
  KernelSpec k;
  k.kind = Kind::Multiplicative;
  k.n = std::move(n);
  k.validate();
  return k;
}

KernelSpec KernelSpec::distance(RadialProfile prof, double q, bool include_self) {
  KernelSpec k;
  k.kind = Kind::Distance;
  k.profile = std::move(prof);
  k.q = q;
  k.include_self = include_self;
  k.validate();
  return k;
}

KernelSpec KernelSpec::rank(RadialProfile t, bool include_self) {
  KernelSpec k;
  k.kind = Kind::Rank;
  k.profile = std::move(t);
  k.include_self = include_self;
  k.validate();
  return k;
}

void KernelSpec::validate() const {
  switch (kind) {
    case Kind::Constant:
      if (!std::isfinite(c) || c < 0.0) throw ConfigError("constant kernel: c must be finite and >= 0");
      break;
    case Kind::Multiplicative:
      if (n.empty()) throw ConfigError("multiplicative kernel: weights missing");
      for (std::size_t i = 0; i < n.size(); ++i)
        if (!(n[i] > 0.0) || !std::isfinite(n[i]))
          throw ConfigError("multiplicative kernel: weight n_" + std::to_string(i) +
                            " must be positive");
      break;
    case Kind::Distance:
      if (!(q >= 0.0 && q <= 1.0)) throw ConfigError("distance kernel: q must lie in [0, 1]");
      break;
    case Kind::Rank:
      break;
  }
}

const char* KernelSpec::kind_name(Kind k) {
  switch (k) {
    case Kind::Constant:
      return "constant";
    case Kind::Multiplicative:
      return "multiplicative";
    case Kind::Distance:
      return "distance";
    case Kind::Rank:
      return "rank";
  }
  return "?";
}

}  // namespace ism
