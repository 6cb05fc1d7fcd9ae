#include "ism/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "ism/csv.hpp"
#include "ism/error.hpp"

namespace ism {

const char* model_name(ModelKind m) {
  switch (m) {
    case ModelKind::Deterministic:
      return "deterministic";
    case ModelKind::FreeSpace:
      return "free_space";
    case ModelKind::Stochastic:
      return "stochastic";
    case ModelKind::Monokinetic1D:
      return "monokinetic_1d";
    case ModelKind::Polar2D:
      return "polar_2d";
    case ModelKind::LineChain:
      return "line_chain";
    case ModelKind::EquilibriumScan:
      return "equilibrium_scan";
  }
  return "?";
}

bool is_particle_model(ModelKind m) {
  return m == ModelKind::Deterministic || m == ModelKind::FreeSpace || m == ModelKind::Stochastic;
}

RadialProfile KernelConfig::make_profile() const {
  switch (profile) {
    case RadialProfile::Kind::Indicator:
      return RadialProfile::indicator(radius);
    case RadialProfile::Kind::SmoothBump:
      return RadialProfile::smooth_bump(radius);
    case RadialProfile::Kind::Table:
      return RadialProfile::table(table);
  }
  return {};
}

bool ScenarioConfig::operator==(const ScenarioConfig& o) const {
  const auto& a = params;
  const auto& b = o.params;
  return model == o.model && a.v_speed == b.v_speed && a.J == b.J && a.eta == b.eta && a.nu == b.nu &&
         a.N == b.N && kernel == o.kernel && integration == o.integration && init == o.init &&
         continuum == o.continuum && scan == o.scan && output == o.output;
}

std::vector<std::string> initializers_for(ModelKind m) {
  switch (m) {
    case ModelKind::Deterministic:
    case ModelKind::FreeSpace:
    case ModelKind::Stochastic:
      return {"uniform_sphere", "aligned_perturbed", "two_groups", "equilibrium"};
    case ModelKind::Monokinetic1D:
      return {"uniform_field_perturbed"};
    case ModelKind::Polar2D:
      return {"rotating_ring"};
    case ModelKind::LineChain:
      return {"helix_chain", "circle_chain"};
    case ModelKind::EquilibriumScan:
      return {};
  }
  return {};
}

std::vector<std::string> initializer_params(const std::string& name) {
  if (name == "uniform_sphere") return {"box", "spin_scale"};
  if (name == "aligned_perturbed") return {"delta", "box"};
  if (name == "two_groups") return {"fraction", "delta", "box"};
  if (name == "equilibrium") return {"beta_J"};
  if (name == "uniform_field_perturbed") return {"k", "amplitude"};
  if (name == "rotating_ring") return {"radius", "width"};
  if (name == "circle_chain") return {"R"};
  if (name == "helix_chain") return {"kappa", "tau"};
  return {};
}

namespace {

using Diags = std::vector<ConfigError::Diagnostic>;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(trim(cur));
  return out;
}

bool to_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* b = s.data();
  const char* e = b + s.size();
  if (*b == '+') ++b;
  auto r = std::from_chars(b, e, out);
  return r.ec == std::errc() && r.ptr == e && std::isfinite(out);
}

bool to_uint(const std::string& s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto r = std::from_chars(s.data(), s.data() + s.size(), out);
  return r.ec == std::errc() && r.ptr == s.data() + s.size();
}

struct Entry {
  std::string value;
  int line = 0;
};

// section -> key -> entry; "" is the top level.
using Document = std::map<std::string, std::map<std::string, Entry>>;

const std::set<std::string>& known_sections() {
  static const std::set<std::string> s{"params", "kernel", "integration", "init", "continuum", "scan", "output"};
  return s;
}

std::set<std::string> sections_for(ModelKind m) {
  switch (m) {
    case ModelKind::Deterministic:
    case ModelKind::FreeSpace:
    case ModelKind::Stochastic:
      return {"params", "kernel", "integration", "init", "output"};
    case ModelKind::Monokinetic1D:
    case ModelKind::LineChain:
      return {"continuum", "integration", "init", "output"};
    case ModelKind::Polar2D:
      return {"continuum", "init", "output"};
    case ModelKind::EquilibriumScan:
      return {"scan", "output"};
  }
  return {};
}

std::set<std::string> kernel_keys(KernelSpec::Kind k) {
  switch (k) {
    case KernelSpec::Kind::Constant:
      return {"type", "c"};
    case KernelSpec::Kind::Multiplicative:
      return {"type", "weights", "weights_min", "weights_max"};
    case KernelSpec::Kind::Distance:
      return {"type", "profile", "radius", "table", "q", "include_self"};
    case KernelSpec::Kind::Rank:
      return {"type", "profile", "radius", "table", "include_self"};
  }
  return {};
}

const std::map<std::string, std::set<std::string>>& section_keys() {
  static const std::map<std::string, std::set<std::string>> m{
      {"", {"model"}},
      {"params", {"v", "J", "eta", "nu", "N"}},
      {"kernel",
       {"type", "c", "weights", "weights_min", "weights_max", "profile", "radius", "table", "q", "include_self"}},
      {"integration", {"dt", "t_end", "stride", "seed", "scheme", "position", "cfl", "speed_tol", "vs_tol"}},
      {"init", {}},  // name + initializer-specific keys, checked separately
      {"continuum",
       {"cells", "length", "rho0", "v", "j", "q", "lambda", "gamma", "half_width", "core_fraction"}},
      {"scan", {"beta_J_min", "beta_J_max", "steps"}},
      {"output", {"directory", "csv", "json", "snapshots"}},
  };
  return m;
}

Document read_document(const std::string& text, Diags& diags, std::map<std::string, int>& section_lines) {
  Document doc;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']') {
        diags.push_back({line, "malformed section header '" + s + "'"});
        continue;
      }
      section = trim(s.substr(1, s.size() - 2));
      if (!known_sections().count(section)) diags.push_back({line, "unknown section [" + section + "]"});
      if (!section_lines.count(section)) section_lines[section] = line;
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      diags.push_back({line, "expected 'key = value', got '" + s + "'"});
      continue;
    }
    const std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    const auto hash = value.find('#');
    if (hash != std::string::npos) value = trim(value.substr(0, hash));
    if (key.empty()) {
      diags.push_back({line, "missing key before '='"});
      continue;
    }
    auto& slot = doc[section];
    auto it = slot.find(key);
    if (it != slot.end()) {
      const std::string where = section.empty() ? "" : " in [" + section + "]";
      diags.push_back({line, "duplicate key '" + key + "'" + where + " (first set on line " +
                                 std::to_string(it->second.line) + ", again on line " + std::to_string(line) + ")"});
      continue;
    }
    slot[key] = {value, line};
  }
  return doc;
}

// Typed accessors that record diagnostics instead of throwing.
class Reader {
 public:
  Reader(const Document& doc, Diags& diags) : doc_(doc), diags_(diags) {}

  const Entry* find(const std::string& sec, const std::string& key) const {
    auto s = doc_.find(sec);
    if (s == doc_.end()) return nullptr;
    auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  }
  int line(const std::string& sec, const std::string& key) const {
    const Entry* e = find(sec, key);
    return e ? e->line : 0;
  }

  void number(const std::string& sec, const std::string& key, double& out) {
    if (const Entry* e = find(sec, key))
      if (!to_double(e->value, out)) type_error(*e, key, "a finite number");
  }
  template <class U>
  void count(const std::string& sec, const std::string& key, U& out) {
    if (const Entry* e = find(sec, key)) {
      std::uint64_t u = 0;
      if (!to_uint(e->value, u))
        type_error(*e, key, "a nonnegative integer");
      else
        out = static_cast<U>(u);
    }
  }
  void boolean(const std::string& sec, const std::string& key, bool& out) {
    if (const Entry* e = find(sec, key)) {
      if (e->value == "true")
        out = true;
      else if (e->value == "false")
        out = false;
      else
        type_error(*e, key, "true or false");
    }
  }
  void text(const std::string& sec, const std::string& key, std::string& out) {
    if (const Entry* e = find(sec, key)) {
      if (e->value.empty())
        type_error(*e, key, "a nonempty string");
      else
        out = e->value;
    }
  }
  template <class E>
  void choice(const std::string& sec, const std::string& key, E& out,
              const std::vector<std::pair<std::string, E>>& options) {
    const Entry* e = find(sec, key);
    if (!e) return;
    std::string names;
    for (const auto& [name, val] : options) {
      if (e->value == name) {
        out = val;
        return;
      }
      names += (names.empty() ? "" : ", ") + name;
    }
    type_error(*e, key, "one of " + names);
  }
  void number_list(const std::string& sec, const std::string& key, std::vector<double>& out) {
    const Entry* e = find(sec, key);
    if (!e) return;
    out.clear();
    for (const auto& tok : split_list(e->value)) {
      double x = 0.0;
      if (!to_double(tok, x)) {
        type_error(*e, key, "a comma-separated list of numbers");
        out.clear();
        return;
      }
      out.push_back(x);
    }
  }
  void knot_list(const std::string& sec, const std::string& key, std::vector<std::pair<double, double>>& out) {
    const Entry* e = find(sec, key);
    if (!e) return;
    out.clear();
    for (const auto& tok : split_list(e->value)) {
      const auto colon = tok.find(':');
      double r = 0.0, v = 0.0;
      if (colon == std::string::npos || !to_double(trim(tok.substr(0, colon)), r) ||
          !to_double(trim(tok.substr(colon + 1)), v)) {
        type_error(*e, key, "a comma-separated list of r:value knots");
        out.clear();
        return;
      }
      out.emplace_back(r, v);
    }
  }

  void range(const std::string& sec, const std::string& key, bool ok, const std::string& what) {
    if (!ok) diags_.push_back({line(sec, key), "[" + sec + "] " + key + " " + what});
  }

 private:
  void type_error(const Entry& e, const std::string& key, const std::string& expected) {
    diags_.push_back({e.line, "'" + key + "' expects " + expected + ", got '" + e.value + "'"});
  }

  const Document& doc_;
  Diags& diags_;
};

const std::vector<std::pair<std::string, ModelKind>> kModels{
    {"deterministic", ModelKind::Deterministic}, {"free_space", ModelKind::FreeSpace},
    {"stochastic", ModelKind::Stochastic},       {"monokinetic_1d", ModelKind::Monokinetic1D},
    {"polar_2d", ModelKind::Polar2D},            {"line_chain", ModelKind::LineChain},
    {"equilibrium_scan", ModelKind::EquilibriumScan}};
const std::vector<std::pair<std::string, KernelSpec::Kind>> kKernels{
    {"constant", KernelSpec::Kind::Constant},
    {"multiplicative", KernelSpec::Kind::Multiplicative},
    {"distance", KernelSpec::Kind::Distance},
    {"rank", KernelSpec::Kind::Rank}};
const std::vector<std::pair<std::string, RadialProfile::Kind>> kProfiles{
    {"indicator", RadialProfile::Kind::Indicator},
    {"smooth_bump", RadialProfile::Kind::SmoothBump},
    {"table", RadialProfile::Kind::Table}};
const std::vector<std::pair<std::string, Scheme>> kSchemes{{"strang", Scheme::Strang},
                                                           {"yoshida4", Scheme::Yoshida4}};
const std::vector<std::pair<std::string, PositionUpdate>> kPositions{{"chord", PositionUpdate::Chord},
                                                                     {"arc", PositionUpdate::Arc}};

template <class E>
std::string name_of(E v, const std::vector<std::pair<std::string, E>>& options) {
  for (const auto& [n, x] : options)
    if (x == v) return n;
  return "?";
}

void check_init_params(const std::string& name, const std::map<std::string, double>& p, Reader& r,
                       const ScenarioConfig& c) {
  auto has = [&](const char* k) { return p.count(k) > 0; };
  auto get = [&](const char* k) { return p.at(k); };
  if (has("box")) r.range("init", "box", get("box") > 0.0, "must be > 0");
  if (has("spin_scale")) r.range("init", "spin_scale", get("spin_scale") >= 0.0, "must be >= 0");
  if (has("delta")) r.range("init", "delta", get("delta") >= 0.0, "must be >= 0");
  if (has("fraction"))
    r.range("init", "fraction", get("fraction") >= 0.0 && get("fraction") <= 1.0, "must lie in [0, 1]");
  if (has("beta_J")) r.range("init", "beta_J", get("beta_J") > 0.0, "must be > 0");
  if (has("k")) {
    const double k = get("k");
    r.range("init", "k", k >= 1.0 && k == std::floor(k), "must be a positive integer mode number");
  }
  if (has("amplitude")) r.range("init", "amplitude", get("amplitude") >= 0.0, "must be >= 0");
  if (has("radius")) r.range("init", "radius", get("radius") > 0.0, "must be > 0");
  if (has("width")) r.range("init", "width", get("width") > 0.0, "must be > 0");
  if (has("R")) r.range("init", "R", get("R") > 0.0, "must be > 0");
  if (has("kappa")) r.range("init", "kappa", get("kappa") > 0.0, "must be > 0");
  if (name == "equilibrium") {
    r.range("params", "J", c.params.J > 0.0, "must be > 0 for the equilibrium initializer");
    if (!has("beta_J"))
      r.range("init", "name", c.params.eta > 0.0 && c.params.nu > 0.0,
              "equilibrium needs beta_J or eta > 0 and nu > 0 (beta = eta / nu)");
  }
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
  Diags diags;
  std::map<std::string, int> section_lines;
  const Document doc = read_document(text, diags, section_lines);
  Reader r(doc, diags);
  ScenarioConfig c;

  // Unknown keys.
  for (const auto& [sec, keys] : doc) {
    if (sec == "init" || !section_keys().count(sec)) continue;
    const auto& allowed = section_keys().at(sec);
    for (const auto& [key, e] : keys)
      if (!allowed.count(key))
        diags.push_back({e.line, "unknown key '" + key + "'" + (sec.empty() ? "" : " in [" + sec + "]")});
  }

  if (!r.find("", "model")) {
    diags.push_back({0, "missing key 'model'"});
    throw ConfigError(diags);
  }
  r.choice("", "model", c.model, kModels);

  const auto relevant = sections_for(c.model);
  for (const auto& [sec, line] : section_lines)
    if (known_sections().count(sec) && !relevant.count(sec))
      diags.push_back({line, "section [" + sec + "] is not used by model " + model_name(c.model)});

  // [params]
  r.number("params", "v", c.params.v_speed);
  r.number("params", "J", c.params.J);
  r.number("params", "eta", c.params.eta);
  r.number("params", "nu", c.params.nu);
  r.count("params", "N", c.params.N);
  r.range("params", "v", c.params.v_speed > 0.0, "must be > 0");
  r.range("params", "J", c.params.J >= 0.0, "must be >= 0");
  r.range("params", "eta", c.params.eta >= 0.0, "must be >= 0");
  r.range("params", "nu", c.params.nu >= 0.0, "must be >= 0");
  r.range("params", "N", c.params.N >= 1, "must be >= 1");
  if (c.model == ModelKind::Deterministic || c.model == ModelKind::FreeSpace)
    r.range("params", "nu", c.params.nu == 0.0, "must be 0 unless model = stochastic");

  // [kernel]
  auto& k = c.kernel;
  r.choice("kernel", "type", k.type, kKernels);
  r.number("kernel", "c", k.c);
  r.number_list("kernel", "weights", k.weights);
  r.number("kernel", "weights_min", k.weights_min);
  r.number("kernel", "weights_max", k.weights_max);
  r.choice("kernel", "profile", k.profile, kProfiles);
  r.number("kernel", "radius", k.radius);
  r.knot_list("kernel", "table", k.table);
  r.number("kernel", "q", k.q);
  r.boolean("kernel", "include_self", k.include_self);
  if (auto it = doc.find("kernel"); it != doc.end()) {
    const auto allowed = kernel_keys(k.type);
    for (const auto& [key, e] : it->second)
      if (!allowed.count(key) && section_keys().at("kernel").count(key))
        diags.push_back({e.line, "key '" + key + "' does not apply to kernel type " + name_of(k.type, kKernels)});
    const bool table = k.profile == RadialProfile::Kind::Table;
    if (k.uses_profile()) {
      if (table && !r.find("kernel", "table"))
        diags.push_back({r.line("kernel", "profile"), "profile = table needs a 'table' key"});
      if (table && r.find("kernel", "radius"))
        diags.push_back({r.line("kernel", "radius"), "'radius' does not apply to profile = table"});
      if (!table && r.find("kernel", "table"))
        diags.push_back({r.line("kernel", "table"), "'table' requires profile = table"});
    }
  }
  if (is_particle_model(c.model)) {
    if (k.type == KernelSpec::Kind::Multiplicative) {
      if (!k.weights.empty()) {
        r.range("kernel", "weights", k.weights.size() == c.params.N,
                "must list exactly N = " + std::to_string(c.params.N) + " values");
        r.range("kernel", "weights", std::all_of(k.weights.begin(), k.weights.end(), [](double x) { return x > 0.0; }),
                "must be > 0");
        if (r.find("kernel", "weights_min") || r.find("kernel", "weights_max"))
          diags.push_back({r.line("kernel", "weights"), "give either 'weights' or 'weights_min'/'weights_max'"});
      }
      r.range("kernel", "weights_min", k.weights_min > 0.0, "must be > 0");
      r.range("kernel", "weights_max", k.weights_max >= k.weights_min, "must be >= weights_min");
    }
    if (c.model == ModelKind::FreeSpace)
      r.range("kernel", "type",
              k.type == KernelSpec::Kind::Constant || k.type == KernelSpec::Kind::Multiplicative,
              "must be constant or multiplicative for model free_space");
    try {
      KernelSpec spec;
      spec.kind = k.type;
      spec.c = k.c;
      spec.n = k.type == KernelSpec::Kind::Multiplicative ? std::vector<double>(c.params.N, 1.0) : std::vector<double>{};
      if (k.uses_profile()) spec.profile = k.make_profile();
      spec.q = k.q;
      spec.include_self = k.include_self;
      spec.validate();
    } catch (const ConfigError& e) {
      const char* key = k.type == KernelSpec::Kind::Distance && !(k.q >= 0.0 && k.q <= 1.0) ? "q"
                        : k.uses_profile() && k.profile == RadialProfile::Kind::Table ? "table"
                        : k.uses_profile() ? "radius"
                                                      : "type";
      const int line = r.line("kernel", key) ? r.line("kernel", key) : section_lines.count("kernel") ? section_lines["kernel"] : 0;
      diags.push_back({line, std::string("[kernel] ") + e.what()});
    }
  }

  // [integration]
  auto& in = c.integration;
  r.number("integration", "dt", in.dt);
  r.number("integration", "t_end", in.t_end);
  r.count("integration", "stride", in.stride);
  if (r.find("integration", "seed")) {
    std::uint64_t s = 0;
    const Entry* e = r.find("integration", "seed");
    if (to_uint(e->value, s))
      in.seed = s;
    else
      diags.push_back({e->line, "'seed' expects a nonnegative integer, got '" + e->value + "'"});
  }
  r.choice("integration", "scheme", in.scheme, kSchemes);
  r.choice("integration", "position", in.position, kPositions);
  r.number("integration", "cfl", in.cfl);
  r.number("integration", "speed_tol", in.speed_tol);
  r.number("integration", "vs_tol", in.vs_tol);
  r.range("integration", "dt", in.dt > 0.0, "must be > 0");
  r.range("integration", "t_end", in.t_end >= 0.0, "must be >= 0");
  r.range("integration", "stride", in.stride >= 1, "must be >= 1");
  r.range("integration", "cfl", in.cfl > 0.0 && in.cfl <= 1.0, "must lie in (0, 1]");
  r.range("integration", "speed_tol", in.speed_tol > 0.0, "must be > 0");
  r.range("integration", "vs_tol", in.vs_tol > 0.0, "must be > 0");
  if (c.model == ModelKind::Stochastic && !in.seed)
    diags.push_back({section_lines.count("integration") ? section_lines["integration"] : 0,
                     "model stochastic requires [integration] seed (no implicit entropy source)"});

  // [init]
  const auto inits = initializers_for(c.model);
  if (!inits.empty()) {
    c.init.name = inits.front();
    r.text("init", "name", c.init.name);
    if (std::find(inits.begin(), inits.end(), c.init.name) == inits.end()) {
      std::string list;
      for (const auto& n : inits) list += (list.empty() ? "" : ", ") + n;
      diags.push_back({r.line("init", "name"),
                       "initializer '" + c.init.name + "' is not available for model " + model_name(c.model) +
                           " (expected " + list + ")"});
    } else if (auto it = doc.find("init"); it != doc.end()) {
      const auto allowed = initializer_params(c.init.name);
      for (const auto& [key, e] : it->second) {
        if (key == "name") continue;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
          diags.push_back({e.line, "unknown key '" + key + "' for initializer " + c.init.name});
          continue;
        }
        double x = 0.0;
        if (!to_double(e.value, x))
          diags.push_back({e.line, "'" + key + "' expects a finite number, got '" + e.value + "'"});
        else
          c.init.params[key] = x;
      }
      check_init_params(c.init.name, c.init.params, r, c);
    } else {
      check_init_params(c.init.name, c.init.params, r, c);
    }
  }

  // [continuum]
  auto& co = c.continuum;
  r.count("continuum", "cells", co.cells);
  r.number("continuum", "length", co.length);
  r.number("continuum", "rho0", co.rho0);
  r.number("continuum", "v", co.v);
  r.number("continuum", "j", co.j);
  r.number("continuum", "q", co.q);
  r.number("continuum", "lambda", co.lambda);
  r.number("continuum", "gamma", co.gamma);
  r.number("continuum", "half_width", co.half_width);
  r.number("continuum", "core_fraction", co.core_fraction);
  r.range("continuum", "cells", co.cells >= 8, "must be >= 8");
  r.range("continuum", "length", co.length > 0.0, "must be > 0");
  r.range("continuum", "rho0", co.rho0 > 0.0, "must be > 0");
  r.range("continuum", "v", co.v > 0.0, "must be > 0");
  r.range("continuum", "j", co.j > 0.0, "must be > 0");
  r.range("continuum", "q", co.q >= 0.0, "must be >= 0");
  r.range("continuum", "lambda", co.lambda > 0.0, "must be > 0");
  r.range("continuum", "gamma", co.gamma > 0.0, "must be > 0");
  r.range("continuum", "half_width", co.half_width > 0.0, "must be > 0");
  r.range("continuum", "core_fraction", co.core_fraction > 0.0 && co.core_fraction < 1.0, "must lie in (0, 1)");

  // [scan]
  auto& sc = c.scan;
  r.number("scan", "beta_J_min", sc.beta_J_min);
  r.number("scan", "beta_J_max", sc.beta_J_max);
  r.count("scan", "steps", sc.steps);
  r.range("scan", "beta_J_min", sc.beta_J_min >= 0.0, "must be >= 0");
  r.range("scan", "beta_J_max", sc.beta_J_max > sc.beta_J_min, "must exceed beta_J_min");
  r.range("scan", "steps", sc.steps >= 2, "must be >= 2");

  // [output]
  r.text("output", "directory", c.output.directory);
  r.boolean("output", "csv", c.output.csv);
  r.boolean("output", "json", c.output.json);
  r.boolean("output", "snapshots", c.output.snapshots);

  if (!diags.empty()) {
    std::stable_sort(diags.begin(), diags.end(), [](const auto& a, const auto& b) { return a.line < b.line; });
    throw ConfigError(diags);
  }
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string print_config(const ScenarioConfig& c) {
  std::ostringstream o;
  auto num = [](double x) { return format_double(x); };
  const auto relevant = sections_for(c.model);
  o << "model = " << model_name(c.model) << "\n";

  if (relevant.count("params")) {
    const auto& p = c.params;
    o << "\n[params]\nv = " << num(p.v_speed) << "\nJ = " << num(p.J) << "\neta = " << num(p.eta)
      << "\nnu = " << num(p.nu) << "\nN = " << p.N << "\n";
  }
  if (relevant.count("kernel")) {
    const auto& k = c.kernel;
    o << "\n[kernel]\ntype = " << name_of(k.type, kKernels) << "\n";
    switch (k.type) {
      case KernelSpec::Kind::Constant:
        o << "c = " << num(k.c) << "\n";
        break;
      case KernelSpec::Kind::Multiplicative:
        if (!k.weights.empty()) {
          o << "weights = ";
          for (std::size_t i = 0; i < k.weights.size(); ++i) o << (i ? ", " : "") << num(k.weights[i]);
          o << "\n";
        } else {
          o << "weights_min = " << num(k.weights_min) << "\nweights_max = " << num(k.weights_max) << "\n";
        }
        break;
      case KernelSpec::Kind::Distance:
      case KernelSpec::Kind::Rank:
        o << "profile = " << name_of(k.profile, kProfiles) << "\n";
        if (k.profile == RadialProfile::Kind::Table) {
          o << "table = ";
          for (std::size_t i = 0; i < k.table.size(); ++i)
            o << (i ? ", " : "") << num(k.table[i].first) << ":" << num(k.table[i].second);
          o << "\n";
        } else {
          o << "radius = " << num(k.radius) << "\n";
        }
        if (k.type == KernelSpec::Kind::Distance) o << "q = " << num(k.q) << "\n";
        o << "include_self = " << (k.include_self ? "true" : "false") << "\n";
        break;
    }
  }
  if (relevant.count("integration")) {
    const auto& in = c.integration;
    o << "\n[integration]\ndt = " << num(in.dt) << "\nt_end = " << num(in.t_end) << "\nstride = " << in.stride
      << "\n";
    if (in.seed) o << "seed = " << *in.seed << "\n";
    o << "scheme = " << name_of(in.scheme, kSchemes) << "\nposition = " << name_of(in.position, kPositions)
      << "\ncfl = " << num(in.cfl) << "\nspeed_tol = " << num(in.speed_tol) << "\nvs_tol = " << num(in.vs_tol)
      << "\n";
  }
  if (relevant.count("init")) {
    o << "\n[init]\nname = " << c.init.name << "\n";
    for (const auto& [key, val] : c.init.params) o << key << " = " << num(val) << "\n";
  }
  if (relevant.count("continuum")) {
    const auto& co = c.continuum;
    o << "\n[continuum]\ncells = " << co.cells << "\nlength = " << num(co.length) << "\nrho0 = " << num(co.rho0)
      << "\nv = " << num(co.v) << "\nj = " << num(co.j) << "\nq = " << num(co.q) << "\nlambda = " << num(co.lambda)
      << "\ngamma = " << num(co.gamma) << "\nhalf_width = " << num(co.half_width)
      << "\ncore_fraction = " << num(co.core_fraction) << "\n";
  }
  if (relevant.count("scan")) {
    const auto& sc = c.scan;
    o << "\n[scan]\nbeta_J_min = " << num(sc.beta_J_min) << "\nbeta_J_max = " << num(sc.beta_J_max)
      << "\nsteps = " << sc.steps << "\n";
  }
  o << "\n[output]\ndirectory = " << c.output.directory << "\ncsv = " << (c.output.csv ? "true" : "false")
    << "\njson = " << (c.output.json ? "true" : "false")
    << "\nsnapshots = " << (c.output.snapshots ? "true" : "false") << "\n";
  return o.str();
}

}  // namespace ism
