#include "support/brute_force.hpp"

#include <cmath>

namespace ism::support {

std::vector<Vec3> brute_distance(const Ensemble& e, const RadialProfile& k, double q, bool include_self) {
  const std::size_t n = e.size();
  const double N = static_cast<double>(n);
  std::vector<Vec3> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec3 num;
    double den = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double kij = k(distance(e.agents[i].x, e.agents[j].x));
      if (kij == 0.0) continue;
      if (j != i) den += kij;
      if (j != i || include_self) num += kij * e.agents[j].v;
    }
    w[i] = q == 0.0 ? num / N : (num / N) / std::pow(den / N, q);
  }
  return w;
}

std::vector<Vec3> brute_rank(const Ensemble& e, const RadialProfile& t, bool include_self) {
  const std::size_t n = e.size();
  const double N = static_cast<double>(n);
  std::vector<Vec3> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec3 num;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i && !include_self) continue;
      double m = 0.0;
      if (j != i) {
        const double dij = distance(e.agents[i].x, e.agents[j].x);
        std::size_t count = 0;
        for (std::size_t k = 0; k < n; ++k) {
          const double dik = k == i ? 0.0 : distance(e.agents[i].x, e.agents[k].x);
          if (dik < dij) ++count;
        }
        m = static_cast<double>(count) / N;
      }
      num += t(m) * e.agents[j].v;
    }
    w[i] = num / N;
  }
  return w;
}

double brute_potential(const Ensemble& e) {
  const auto n = energy_weights(e);
  const double v2 = e.params.v_speed * e.params.v_speed;
  double s = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) s += n[i] * n[j] * norm2(e.agents[i].v - e.agents[j].v);
  return e.params.J * s / (4.0 * static_cast<double>(e.size()) * v2);
}

}  // namespace ism::support
