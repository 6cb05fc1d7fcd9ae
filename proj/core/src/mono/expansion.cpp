#include "ism/mono/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "ism/error.hpp"
#include "ism/mono/coefficients.hpp"
#include "ism/quadrature.hpp"

namespace ism::mono {

const char* expansion_kind_name(ExpansionKind k) {
  switch (k) {
    case ExpansionKind::Space:
      return "space";
    case ExpansionKind::Line:
      return "line";
    case ExpansionKind::LineRank:
      return "line_rank";
  }
  return "?";
}

ExpansionKind parse_expansion_kind(const std::string& s) {
  if (s == "space") return ExpansionKind::Space;
  if (s == "line") return ExpansionKind::Line;
  if (s == "line_rank") return ExpansionKind::LineRank;
  throw ConfigError("unknown expansion kind '" + s + "' (expected space, line or line_rank)");
}

SpaceProblem SpaceProblem::standard() {
  SpaceProblem p;
  const double h[9] = {1.0, 0.3, -0.2, 0.3, -0.5, 0.4, -0.2, 0.4, 0.8};
  for (int i = 0; i < 9; ++i) p.phi_hessian.a[i] = h[i];
  return p;
}

namespace {

// The integrals cancel to O(eps^2) of the integrand's size, which is below
// what an adaptive error estimate can certify; the pieces between kinks are
// smooth, so a fixed composite rule is exact to rounding for these problems.
constexpr int kPanels = 8;

double relative(double exact, double asym) {
  if (asym == 0.0) return exact == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(exact - asym) / std::abs(asym);
}

// Root of the increasing function f on [0, hi) with f(0) < target; hi is
// doubled until it brackets.
double solve_increasing(const std::function<double(double)>& f, double target, double hi) {
  double lo = 0.0;
  for (int k = 0; f(hi) < target; ++k) {
    lo = hi;
    hi *= 2.0;
    if (k > 60) throw NumericalError("expansion_check: support endpoint not bracketed");
  }
  for (int it = 0; it < 200 && hi - lo > 4e-16 * hi; ++it) {
    const double m = 0.5 * (lo + hi);
    (f(m) < target ? lo : hi) = m;
  }
  return 0.5 * (lo + hi);
}

Vec3 curve_at(const LineProblem& p, double z) { return z * (p.curve[0] + z * (p.curve[1] + z * p.curve[2])); }
double phi_at(const LineProblem& p, double z) { return z * (p.phi[0] + z * (p.phi[1] + z * p.phi[2])); }

// (phi' / |x'|^3)' at z = 0.
double transport_derivative(const LineProblem& p) {
  const double a = norm(p.curve[0]);
  const double xx = dot(p.curve[0], 2.0 * p.curve[1]);
  return 2.0 * p.phi[1] / (a * a * a) - 3.0 * p.phi[0] * xx / std::pow(a, 5);
}

// Points where the profile has kinks, scaled to the line parameter.
std::vector<double> profile_breaks(const RadialProfile& k) {
  std::vector<double> b;
  if (k.kind() == RadialProfile::Kind::Table)
    for (std::size_t i = 1; i + 1 < k.knots().size(); ++i) b.push_back(k.knots()[i].first);
  return b;
}

}  // namespace

ExpansionResult expansion_check(const SpaceProblem& p, double eps) {
  if (!(eps > 0.0)) throw DomainError("expansion_check: eps must be positive");
  const Vec3 c = p.rho_center;
  const double w2 = p.rho_width * p.rho_width;
  auto rho = [&](const Vec3& y) { return p.rho_amplitude * std::exp(-norm2(y - c) / (2.0 * w2)); };
  const Mat3& H = p.phi_hessian;
  const Vec3 grad_phi = p.phi_gradient + H * p.x;
  auto dphi = [&](const Vec3& d) { return dot(grad_phi, d) + 0.5 * dot(d, H * d); };

  // eps^3 int K(|z|) rho(x + eps z) (phi(x + eps z) - phi(x)) dz in spherical
  // coordinates; trapezoid in the azimuth (periodic), Gauss-Legendre elsewhere.
  const int n_az = 64;
  auto shell = [&](double r) {
    return quad::gauss_legendre(
        [&](double mu) {
          const double st = std::sqrt(std::max(0.0, 1.0 - mu * mu));
          double acc = 0.0;
          for (int k = 0; k < n_az; ++k) {
            const double ps = 2.0 * std::numbers::pi * (k + 0.5) / n_az;
            const Vec3 d = (eps * r) * Vec3{st * std::cos(ps), st * std::sin(ps), mu};
            acc += rho(p.x + d) * dphi(d);
          }
          return acc * (2.0 * std::numbers::pi / n_az);
        },
        -1.0, 1.0, 32);
  };
  std::vector<double> cuts{0.0};
  for (double b : profile_breaks(p.kernel)) cuts.push_back(b);
  cuts.push_back(p.kernel.support());
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    integral += quad::gauss_legendre([&](double r) { return r * r * p.kernel(r) * shell(r); }, cuts[i],
                                     cuts[i + 1], 48);

  ExpansionResult out;
  out.eps = eps;
  out.exact = eps * eps * eps * integral;
  const double rx = rho(p.x);
  const Vec3 grad_rho = (-rx / w2) * (p.x - c);
  out.asymptotic = std::pow(eps, 5) * coeff_bK(p.kernel) * (0.5 * rx * trace(H) + dot(grad_rho, grad_phi));
  out.rel_error = relative(out.exact, out.asymptotic);
  return out;
}

ExpansionResult expansion_check(ExpansionKind kind, const LineProblem& p, double eps) {
  if (!(eps > 0.0)) throw DomainError("expansion_check: eps must be positive");
  if (kind == ExpansionKind::Space) throw DomainError("expansion_check: space kind needs a SpaceProblem");
  const double a = norm(p.curve[0]);
  if (!(a > 0.0)) throw DomainError("expansion_check: curve must be regular at z = 0");

  auto rplus = [&](double z) { return norm(curve_at(p, z)); };
  auto rminus = [&](double t) { return norm(curve_at(p, -t)); };
  const double s = p.kernel.support();
  const double guess = eps * s / a;

  ExpansionResult out;
  out.eps = eps;
  const double e3 = eps * eps * eps;
  std::vector<double> nodes;

  if (kind == ExpansionKind::Line) {
    const double zp = solve_increasing(rplus, eps * s, guess);
    const double zm = -solve_increasing(rminus, eps * s, guess);
    // Kinks of K sit where |x(z)| = eps * break.
    nodes.push_back(zm);
    for (double b : profile_breaks(p.kernel)) nodes.push_back(-solve_increasing(rminus, eps * b, guess));
    nodes.push_back(0.0);
    for (double b : profile_breaks(p.kernel)) nodes.push_back(solve_increasing(rplus, eps * b, guess));
    nodes.push_back(zp);
    std::sort(nodes.begin(), nodes.end());
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
      out.exact += quad::gauss_legendre_composite(
          [&](double z) { return p.kernel(norm(curve_at(p, z)) / eps) * phi_at(p, z); }, nodes[i], nodes[i + 1],
          kPanels);
    out.asymptotic = e3 * coeff_line(p.kernel).b2 / 2.0 * transport_derivative(p);
  } else {
    if (!(p.lambda > 0.0)) throw DomainError("expansion_check: lambda must be positive");
    // Mass within distance |x(z)| of the origin: lambda (z_+(r) - z_-(r)).
    auto mass_plus = [&](double z) {
      const double r = rplus(z);
      return p.lambda * (z + solve_increasing(rminus, r, std::max(z, 1e-300)));
    };
    auto mass_minus = [&](double t) {
      const double r = rminus(t);
      return p.lambda * (t + solve_increasing(rplus, r, std::max(t, 1e-300)));
    };
    const double g0 = eps * s / (2.0 * p.lambda);
    const double zp = solve_increasing(mass_plus, eps * s, g0);
    const double zm = -solve_increasing(mass_minus, eps * s, g0);
    nodes.push_back(zm);
    for (double b : profile_breaks(p.kernel)) nodes.push_back(-solve_increasing(mass_minus, eps * b, g0));
    nodes.push_back(0.0);
    for (double b : profile_breaks(p.kernel)) nodes.push_back(solve_increasing(mass_plus, eps * b, g0));
    nodes.push_back(zp);
    std::sort(nodes.begin(), nodes.end());
    auto integrand = [&](double z) {
      const double m = z >= 0.0 ? mass_plus(z) : mass_minus(-z);
      return p.kernel(m / eps) * phi_at(p, z);
    };
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
      out.exact += quad::gauss_legendre_composite(integrand, nodes[i], nodes[i + 1], kPanels);
    const double b = coeff_rank(p.kernel).b_line;
    out.asymptotic = e3 * b * a * a * a / (8.0 * std::pow(p.lambda, 3)) * transport_derivative(p);
  }
  out.rel_error = relative(out.exact, out.asymptotic);
  return out;
}

std::vector<ExpansionResult> expansion_sweep(ExpansionKind kind, const std::vector<double>& eps_list) {
  std::vector<ExpansionResult> rows;
  const SpaceProblem sp = SpaceProblem::standard();
  const LineProblem lp;
  for (double eps : eps_list)
    rows.push_back(kind == ExpansionKind::Space ? expansion_check(sp, eps) : expansion_check(kind, lp, eps));
  return rows;
}

double loglog_slope(const std::vector<ExpansionResult>& rows) {
  if (rows.size() < 2) throw DomainError("loglog_slope: need at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(rows.size());
  for (const auto& r : rows) {
    if (!(r.rel_error > 0.0)) throw DomainError("loglog_slope: nonpositive relative error");
    const double x = std::log(r.eps), y = std::log(r.rel_error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double expected_slope(ExpansionKind) { return 2.0; }

}  // namespace ism::mono
