#include "support/fixtures.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace ism::support {

Ensemble random_ensemble(std::size_t N, const KernelSpec& k, double box, double spin_scale, std::uint64_t seed,
                         double v, double J) {
  Rng rng(seed);
  std::vector<AgentState> agents(N);
  for (auto& a : agents) {
    a.x = {box * rng.uniform(), box * rng.uniform(), box * rng.uniform()};
    a.v = v * rng.unit_vector();
    const Vec3 g = spin_scale * rng.normal3();
    a.s = g - (dot(g, a.v) / (v * v)) * a.v;
  }
  ModelParams p;
  p.v_speed = v;
  p.J = J;
  return Ensemble::make(p, k, std::move(agents));
}

Ensemble lattice_ensemble(std::size_t side, const KernelSpec& k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<AgentState> agents;
  for (std::size_t a = 0; a < side; ++a)
    for (std::size_t b = 0; b < side; ++b)
      for (std::size_t c = 0; c < side; ++c) {
        AgentState s;
        s.x = {static_cast<double>(a), static_cast<double>(b), static_cast<double>(c)};
        s.v = rng.unit_vector();
        agents.push_back(s);
      }
  ModelParams p;
  p.J = 1.0;
  return Ensemble::make(p, k, std::move(agents));
}

std::string temp_dir(const std::string& tag) {
  namespace fs = std::filesystem;
  static int counter = 0;
  const fs::path p = fs::temp_directory_path() / ("ism_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
                                                  std::to_string(counter++));
  fs::remove_all(p);
  fs::create_directories(p);
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace ism::support
