#include "ism/verify.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <json.hpp>
#include <sstream>

#include "ism/config.hpp"
#include "ism/csv.hpp"
#include "ism/error.hpp"
#include "ism/init.hpp"
#include "ism/meanfield.hpp"

namespace ism {

namespace fs = std::filesystem;
using nlohmann::json;

bool VerifyReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

namespace {

std::string sci(double x) {
  std::ostringstream o;
  o.precision(3);
  o << std::scientific << x;
  return o.str();
}

void add(VerifyReport& r, std::string name, double value, double bound) {
  r.checks.push_back({std::move(name), value <= bound, sci(value) + " <= " + sci(bound)});
}

Vec3 row_vec(const std::vector<double>& row, std::size_t i) { return {row[i], row[i + 1], row[i + 2]}; }

// Rows grouped by time (in file order).
std::vector<std::vector<const std::vector<double>*>> by_time(const CsvTable& t) {
  std::vector<std::vector<const std::vector<double>*>> groups;
  const std::size_t it = t.column("t");
  for (const auto& row : t.rows) {
    if (groups.empty() || groups.back().front()->at(it) != row[it]) groups.emplace_back();
    groups.back().push_back(&row);
  }
  return groups;
}

struct AgentChecks {
  double speed = 0.0;  // max relative
  double vs = 0.0;     // max |v.s - alpha| / v^2
};

AgentChecks check_agents(const CsvTable& t, double v_speed, bool alpha_from_first) {
  const std::size_t iv = t.column("v1"), is = t.column("s1");
  const auto groups = by_time(t);
  AgentChecks out;
  std::vector<double> alpha;
  for (const auto& g : groups) {
    if (alpha.empty()) {
      for (const auto* row : g) alpha.push_back(alpha_from_first ? dot(row_vec(*row, iv), row_vec(*row, is)) : 0.0);
    }
    if (g.size() != alpha.size()) throw Error("snapshots.csv: agent count changes between snapshots");
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Vec3 v = row_vec(*g[i], iv), s = row_vec(*g[i], is);
      out.speed = std::max(out.speed, std::abs(norm(v) - v_speed) / v_speed);
      out.vs = std::max(out.vs, std::abs(dot(v, s) - alpha[i]) / (v_speed * v_speed));
    }
  }
  return out;
}

void verify_particles(const ScenarioConfig& c, const json& summary, const fs::path& dir, VerifyReport& r) {
  const double v = c.params.v_speed;
  const auto& drifts = summary.at("drifts");
  add(r, "summary: speed drift", drifts.at("speed_rel").get<double>(), c.integration.speed_tol);
  if (c.model != ModelKind::Stochastic)
    add(r, "summary: v.s drift", drifts.at("vs_abs").get<double>(), c.integration.vs_tol * v * v);

  const auto diag = CsvTable::read((dir / "diagnostics.csv").string());
  const std::size_t iE = diag.column("E"), it = diag.column("t"), isp = diag.column("spin1");
  std::map<double, double> energy_at;
  for (const auto& row : diag.rows) energy_at[row[it]] = row[iE];

  const auto snap_path = dir / "snapshots.csv";
  if (fs::exists(snap_path)) {
    const auto snaps = CsvTable::read(snap_path.string());
    // Stochastic runs re-project v.s after the noise kick; alpha is still the
    // initial value, so the same check applies.
    const auto a = check_agents(snaps, v, true);
    add(r, "snapshots: | |v_i| - v | / v", a.speed, c.integration.speed_tol);
    add(r, "snapshots: |v_i.s_i - alpha_i| / v^2", a.vs, c.integration.vs_tol);

    // Energy recomputed from the stored states with the run's kernel.
    Rng rng(c.integration.seed.value_or(0));
    const KernelSpec kernel = make_kernel(c, rng);
    const std::size_t ix = snaps.column("x1"), iv = snaps.column("v1"), is = snaps.column("s1");
    std::vector<double> alpha0;
    double worst = 0.0;
    for (const auto& g : by_time(snaps)) {
      std::vector<AgentState> agents;
      for (const auto* row : g) agents.push_back({row_vec(*row, ix), row_vec(*row, iv), row_vec(*row, is)});
      Ensemble e = Ensemble::make(c.params, kernel, std::move(agents));
      if (alpha0.empty()) alpha0 = e.alpha;
      e.alpha = alpha0;
      const double t = (*g.front())[snaps.column("t")];
      auto found = energy_at.find(t);
      if (found == energy_at.end()) throw Error("diagnostics.csv has no row for snapshot time " + format_double(t));
      worst = std::max(worst, std::abs(total_energy(e) - found->second) / std::max(1.0, std::abs(found->second)));
    }
    add(r, "energy from snapshots matches diagnostics.csv", worst, 1e-9);
  }

  // The energy identities hold for kernels that ignore positions.
  const bool free_kernel = !c.kernel.uses_profile();
  if (c.model != ModelKind::Stochastic && diag.rows.size() > 1) {
    if (free_kernel && c.params.eta > 0.0) {
      double inc = -INFINITY;
      for (std::size_t k = 1; k < diag.rows.size(); ++k) inc = std::max(inc, diag.rows[k][iE] - diag.rows[k - 1][iE]);
      add(r, "energy nonincreasing between snapshots", inc, 1e-9);
    } else if (free_kernel) {
      const double E0 = diag.rows.front()[iE];
      double d = 0.0;
      for (const auto& row : diag.rows) d = std::max(d, std::abs(row[iE] - E0) / std::max(std::abs(E0), 1e-300));
      add(r, "energy conserved (relative)", d, 1e-6);
    }
    const bool symmetric = c.kernel.type == KernelSpec::Kind::Constant ||
                           c.kernel.type == KernelSpec::Kind::Multiplicative ||
                           (c.kernel.type == KernelSpec::Kind::Distance && c.kernel.q == 0.0);
    if (c.params.eta == 0.0 && symmetric) {
      const Vec3 s0 = row_vec(diag.rows.front(), isp);
      double d = 0.0;
      for (const auto& row : diag.rows) d = std::max(d, norm(row_vec(row, isp) - s0));
      add(r, "total spin conserved", d, 1e-7 * std::max(1.0, static_cast<double>(c.params.N)));
    }
  }
}

void verify_field1d(const ScenarioConfig& c, const fs::path& dir, VerifyReport& r) {
  const auto t = CsvTable::read((dir / "field.csv").string());
  const std::size_t irho = t.column("rho"), iu = t.column("u1");
  const double dx = c.continuum.length / static_cast<double>(c.continuum.cells);
  double m0 = NAN, mass = 0.0, speed = 0.0;
  for (const auto& g : by_time(t)) {
    double m = 0.0;
    for (const auto* row : g) {
      m += (*row)[irho] * dx;
      speed = std::max(speed, std::abs(norm(row_vec(*row, iu)) - c.continuum.v) / c.continuum.v);
    }
    if (std::isnan(m0)) m0 = m;
    mass = std::max(mass, std::abs(m - m0) / m0);
  }
  add(r, "field: mass conserved (relative)", mass, 1e-12);
  add(r, "field: | |u| - v | / v", speed, 1e-12);
}

void verify_chain(const fs::path& dir, double v, VerifyReport& r) {
  const auto snaps = CsvTable::read((dir / "snapshots.csv").string());
  const auto a = check_agents(snaps, v, false);
  add(r, "chain: | |v| - v | / v", a.speed, 1e-12);
  add(r, "chain: |v.s| / v^2", a.vs, 1e-10);
}

void verify_scan(const fs::path& dir, VerifyReport& r) {
  const auto t = CsvTable::read((dir / "bifurcation.csv").string());
  const std::size_t ib = t.column("beta_J"), ix = t.column("xi"), ig = t.column("gamma");
  double residual = 0.0, decrease = 0.0;
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    const auto& row = t.rows[k];
    const double xi = row[ix];
    residual = std::max(residual, std::abs(xi - row[ib] * meanfield::h(xi)) / std::max(1.0, xi));
    residual = std::max(residual, std::abs(xi - row[ib] * row[ig]) / std::max(1.0, xi));
    if (k > 0) decrease = std::max(decrease, t.rows[k - 1][ig] - row[ig]);
  }
  add(r, "bifurcation: rows solve xi = beta_J h(xi)", residual, 1e-9);
  add(r, "bifurcation: gamma nondecreasing", decrease, 0.0);
}

void verify_polar(const ScenarioConfig& c, const json& summary, VerifyReport& r) {
  const auto f = init_polar(c);
  const auto res = mono::polar_residual(f, c.continuum.core_fraction);
  const double recorded = summary.at("residual").at("max").get<double>();
  add(r, "polar: residual reproduces", std::abs(res.max - recorded), 1e-12 * std::max(1.0, recorded));
}

}  // namespace

VerifyReport verify_outputs(const std::string& summary_path) {
  std::ifstream in(summary_path, std::ios::binary);
  if (!in) throw Error("cannot open '" + summary_path + "'");
  json summary;
  try {
    in >> summary;
  } catch (const json::exception& e) {
    throw Error(summary_path + ": not valid JSON (" + e.what() + ")");
  }
  if (!summary.contains("config")) throw Error(summary_path + ": missing config echo");
  const ScenarioConfig c = parse_config(summary.at("config").get<std::string>());
  const fs::path dir = fs::path(summary_path).parent_path();

  VerifyReport r;
  switch (c.model) {
    case ModelKind::Deterministic:
    case ModelKind::FreeSpace:
    case ModelKind::Stochastic:
      verify_particles(c, summary, dir, r);
      break;
    case ModelKind::Monokinetic1D:
      verify_field1d(c, dir, r);
      break;
    case ModelKind::LineChain:
      verify_chain(dir, c.continuum.v, r);
      break;
    case ModelKind::EquilibriumScan:
      verify_scan(dir, r);
      break;
    case ModelKind::Polar2D:
      verify_polar(c, summary, r);
      break;
  }
  return r;
}

}  // namespace ism
