#include "ism/mono/line.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ism/error.hpp"

namespace ism::mono {

ArcCurve ArcCurve::line(double period_length) {
  if (!(period_length > 0.0)) throw DomainError("ArcCurve::line: period length must be positive");
  ArcCurve c;
  c.kind_ = Kind::Line;
  c.len_ = period_length;
  return c;
}

ArcCurve ArcCurve::circle(double radius) { return helix(radius, 0.0); }

ArcCurve ArcCurve::helix(double a, double b) {
  if (!(a > 0.0)) throw DomainError("ArcCurve::helix: radius must be positive");
  ArcCurve c;
  c.kind_ = Kind::Helix;
  c.a_ = a;
  c.b_ = b;
  return c;
}

ArcCurve ArcCurve::helix_from_frenet(double kappa, double tau) {
  if (!(kappa > 0.0)) throw DomainError("ArcCurve::helix_from_frenet: curvature must be positive");
  const double d = kappa * kappa + tau * tau;
  return helix(kappa / d, tau / d);
}

namespace {
double speed_c(double a, double b) { return std::sqrt(a * a + b * b); }
}  // namespace

Vec3 ArcCurve::position(double al) const {
  if (kind_ == Kind::Line) return {al, 0.0, 0.0};
  const double c = speed_c(a_, b_), th = al / c;
  return {a_ * std::cos(th), a_ * std::sin(th), b_ * th};
}

Vec3 ArcCurve::d1(double al) const {
  if (kind_ == Kind::Line) return {1.0, 0.0, 0.0};
  const double c = speed_c(a_, b_), th = al / c;
  return {-a_ / c * std::sin(th), a_ / c * std::cos(th), b_ / c};
}

Vec3 ArcCurve::d2(double al) const {
  if (kind_ == Kind::Line) return {};
  const double c = speed_c(a_, b_), th = al / c, k = a_ / (c * c);
  return {-k * std::cos(th), -k * std::sin(th), 0.0};
}

Vec3 ArcCurve::d3(double al) const {
  if (kind_ == Kind::Line) return {};
  const double c = speed_c(a_, b_), th = al / c, k = a_ / (c * c * c);
  return {k * std::sin(th), -k * std::cos(th), 0.0};
}

double ArcCurve::period() const {
  return kind_ == Kind::Line ? len_ : 2.0 * std::numbers::pi * speed_c(a_, b_);
}

Vec3 ArcCurve::period_shift() const {
  if (kind_ == Kind::Line) return {len_, 0.0, 0.0};
  return {0.0, 0.0, 2.0 * std::numbers::pi * b_};
}

namespace {

void require_regular(double xp, std::size_t i) {
  if (!(xp >= 1e-12)) throw NumericalError("line chain: degenerate |x'| at sample " + std::to_string(i));
}

// Second-order first derivative with one-sided ends.
std::vector<Vec3> d_open(const std::vector<Vec3>& f, double dz) {
  const std::size_t m = f.size();
  std::vector<Vec3> d(m);
  for (std::size_t i = 1; i + 1 < m; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * dz);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * dz);
  d[m - 1] = (3.0 * f[m - 1] - 4.0 * f[m - 2] + f[m - 3]) / (2.0 * dz);
  return d;
}

}  // namespace

ChainRates line_rhs(const LineChain& c) {
  const std::size_t m = c.size();
  if (m < 3) throw DomainError("line chain needs at least 3 samples");
  if (c.v.size() != m || c.s.size() != m) throw DomainError("line chain: field sizes differ");
  const double pref0 = c.j * std::pow(c.lambda, 1.0 - c.q) / (c.v_speed * c.v_speed);
  ChainRates r;
  r.x = c.v;
  r.v.resize(m);
  r.s.resize(m);
  for (std::size_t i = 0; i < m; ++i) r.v[i] = cross(c.s[i], c.v[i]);

  if (c.periodic) {
    auto xs = [&](std::ptrdiff_t i) {
      const auto mm = static_cast<std::ptrdiff_t>(m);
      if (i < 0) return c.x[static_cast<std::size_t>(i + mm)] - c.shift;
      if (i >= mm) return c.x[static_cast<std::size_t>(i - mm)] + c.shift;
      return c.x[static_cast<std::size_t>(i)];
    };
    // G at half nodes i + 1/2, i = 0..m-1.
    std::vector<Vec3> g(m);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t ip = (i + 1) % m;
      const double xp = norm(xs(static_cast<std::ptrdiff_t>(i) + 1) - c.x[i]) / c.dz;
      require_regular(xp, i);
      g[i] = ((c.v[ip] - c.v[i]) / c.dz) / (xp * xp * xp);
    }
    for (std::size_t i = 0; i < m; ++i) {
      const auto ii = static_cast<std::ptrdiff_t>(i);
      const double xp = norm(xs(ii + 1) - xs(ii - 1)) / (2.0 * c.dz);
      require_regular(xp, i);
      const Vec3 dg = (g[i] - g[(i + m - 1) % m]) / c.dz;
      r.s[i] = (pref0 * std::pow(xp, c.q)) * cross(c.v[i], dg);
    }
  } else {
    const auto dv = d_open(c.v, c.dz);
    const auto dx = d_open(c.x, c.dz);
    std::vector<Vec3> g(m);
    std::vector<double> xp(m);
    for (std::size_t i = 0; i < m; ++i) {
      xp[i] = norm(dx[i]);
      require_regular(xp[i], i);
      g[i] = dv[i] / (xp[i] * xp[i] * xp[i]);
    }
    const auto dg = d_open(g, c.dz);
    for (std::size_t i = 0; i < m; ++i) r.s[i] = (pref0 * std::pow(xp[i], c.q)) * cross(c.v[i], dg[i]);
  }
  return r;
}

void line_step(LineChain& c, double dt) {
  const std::size_t m = c.size();
  auto axpy = [&](const LineChain& base, const ChainRates& k, double h) {
    LineChain g = base;
    for (std::size_t i = 0; i < m; ++i) {
      g.x[i] += h * k.x[i];
      g.v[i] += h * k.v[i];
      g.s[i] += h * k.s[i];
    }
    return g;
  };
  const ChainRates k1 = line_rhs(c);
  const ChainRates k2 = line_rhs(axpy(c, k1, 0.5 * dt));
  const ChainRates k3 = line_rhs(axpy(c, k2, 0.5 * dt));
  const ChainRates k4 = line_rhs(axpy(c, k3, dt));
  const double w = dt / 6.0;
  for (std::size_t i = 0; i < m; ++i) {
    c.x[i] += w * (k1.x[i] + 2.0 * k2.x[i] + 2.0 * k3.x[i] + k4.x[i]);
    c.v[i] += w * (k1.v[i] + 2.0 * k2.v[i] + 2.0 * k3.v[i] + k4.v[i]);
    c.s[i] += w * (k1.s[i] + 2.0 * k2.s[i] + 2.0 * k3.s[i] + k4.s[i]);
    c.v[i] *= c.v_speed / norm(c.v[i]);
    c.s[i] -= (dot(c.s[i], c.v[i]) / norm2(c.v[i])) * c.v[i];
    if (!is_finite(c.x[i]) || !is_finite(c.v[i]) || !is_finite(c.s[i]))
      throw NumericalError("blow-up in line chain at sample " + std::to_string(i));
  }
  c.t += dt;
}

TravelingChain traveling_curve(const ArcCurve& curve, double gamma, double t, std::size_t M, double lambda,
                               double j, double q, double v_speed) {
  if (!(gamma > 0.0)) throw DomainError("traveling_curve: gamma must be positive");
  if (M < 3) throw DomainError("traveling_curve: need at least 3 samples");
  TravelingChain out;
  LineChain& c = out.chain;
  c.dz = curve.period() / (gamma * static_cast<double>(M));
  c.periodic = true;
  c.shift = curve.period_shift();
  c.lambda = lambda;
  c.j = j;
  c.q = q;
  c.v_speed = v_speed;
  c.t = t;
  c.x.resize(M);
  c.v.resize(M);
  c.s.resize(M);
  for (std::size_t i = 0; i < M; ++i) {
    const double al = gamma * static_cast<double>(i) * c.dz + v_speed * t;
    c.x[i] = curve.position(al);
    c.v[i] = v_speed * curve.d1(al);
    c.s[i] = v_speed * cross(curve.d1(al), curve.d2(al));
  }
  const double lhs = v_speed * v_speed / j;
  const double rhs = std::pow(lambda / gamma, 1.0 - q);
  out.condition_holds = std::abs(lhs - rhs) <= 1e-9 * std::max(lhs, rhs);
  if (!out.condition_holds)
    out.warning = "v^2/j = " + std::to_string(lhs) + " differs from (lambda/gamma)^(1-q) = " + std::to_string(rhs) +
                  "; the sampled curve is not a solution";
  return out;
}

double chain_deviation(const LineChain& c, const ArcCurve& curve, double gamma) {
  double d = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double al = gamma * static_cast<double>(i) * c.dz + c.v_speed * c.t;
    d = std::max(d, distance(c.x[i], curve.position(al)));
  }
  return d;
}

}  // namespace ism::mono
