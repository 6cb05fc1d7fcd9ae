#include "ism/interactions.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>

#include "ism/error.hpp"
#include "ism/parallel.hpp"
#include "ism/spatial_index.hpp"

namespace ism {

std::vector<Vec3> w_constant(const Ensemble& e, double c) {
  const std::size_t n = e.size();
  Vec3 sum;
  for (std::size_t j = 0; j < n; ++j) sum += e.agents[j].v;
  const Vec3 w = c * (sum / static_cast<double>(n));
  return std::vector<Vec3>(n, w);
}

std::vector<Vec3> w_multiplicative(const Ensemble& e, const std::vector<double>& nw) {
  const std::size_t n = e.size();
  if (nw.size() != n) throw DomainError("w_multiplicative: weight count does not match N");
  Vec3 sum;
  for (std::size_t j = 0; j < n; ++j) {
    if (!(nw[j] > 0.0))
      throw DomainError("w_multiplicative: n_" + std::to_string(j) + " must be positive");
    sum += nw[j] * e.agents[j].v;
  }
  const Vec3 mean = sum / static_cast<double>(n);
  std::vector<Vec3> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = nw[i] * mean;
  return w;
}

std::vector<Vec3> w_distance(const Ensemble& e, const RadialProfile& k, double q, bool include_self,
                             std::size_t* evaluations) {
  const std::size_t n = e.size();
  const double N = static_cast<double>(n);
  std::vector<Vec3> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[i] = e.agents[i].x;
  const SpatialIndex index(pos, k.support());

  std::vector<Vec3> w(n);
  std::atomic<std::size_t> evals{0};
  parallel_for(n, [&](std::size_t b, std::size_t end) {
    std::vector<std::size_t> nb;
    std::size_t local = 0;
    for (std::size_t i = b; i < end; ++i) {
      index.query(pos[i], k.support(), nb);
      Vec3 num;
      double den = 0.0;
      for (std::size_t j : nb) {
        const double kij = k(distance(pos[i], pos[j]));
        ++local;
        if (j != i) {
          den += kij;
          num += kij * e.agents[j].v;
        } else if (include_self) {
          num += kij * e.agents[j].v;
        }
      }
      if (q == 0.0) {
        w[i] = num / N;
      } else {
        if (!(den > 0.0))
          throw NumericalError("isolated agent under q-normalization: agent " + std::to_string(i));
        w[i] = (num / N) / std::pow(den / N, q);
      }
    }
    evals += local;
  });
  if (evaluations) *evaluations += evals.load();
  return w;
}

std::vector<Vec3> w_rank(const Ensemble& e, const RadialProfile& t, bool include_self,
                         std::size_t* evaluations) {
  const std::size_t n = e.size();
  const double N = static_cast<double>(n);
  std::vector<Vec3> w(n);
  parallel_for(
      n,
      [&](std::size_t b, std::size_t end) {
        std::vector<double> d(n), sorted(n);
        for (std::size_t i = b; i < end; ++i) {
          const Vec3& xi = e.agents[i].x;
          for (std::size_t j = 0; j < n; ++j) d[j] = j == i ? 0.0 : distance(xi, e.agents[j].x);
          sorted = d;
          std::sort(sorted.begin(), sorted.end());
          Vec3 num;
          for (std::size_t j = 0; j < n; ++j) {
            if (j == i && !include_self) continue;
            double m = 0.0;
            if (j != i) {
              const auto cnt = std::lower_bound(sorted.begin(), sorted.end(), d[j]) - sorted.begin();
              m = static_cast<double>(cnt) / N;
            }
            num += t(m) * e.agents[j].v;
          }
          w[i] = num / N;
        }
      },
      8);
  if (evaluations) *evaluations += n * n;
  return w;
}

std::vector<Vec3> interaction_field(const Ensemble& e, std::size_t* evaluations) {
  const KernelSpec& k = e.kernel;
  switch (k.kind) {
    case KernelSpec::Kind::Constant:
      if (evaluations) *evaluations += e.size();
      return w_constant(e, k.c);
    case KernelSpec::Kind::Multiplicative:
      if (evaluations) *evaluations += e.size();
      return w_multiplicative(e, k.n);
    case KernelSpec::Kind::Distance:
      return w_distance(e, k.profile, k.q, k.include_self, evaluations);
    case KernelSpec::Kind::Rank:
      return w_rank(e, k.profile, k.include_self, evaluations);
  }
  return {};
}

Vec3 continuum_w(const std::vector<ContinuumSample>& samples, const Vec3& y, const KernelSpec& kernel) {
  switch (kernel.kind) {
    case KernelSpec::Kind::Constant: {
      Vec3 s;
      for (const auto& p : samples) s += p.mass * p.u;
      return kernel.c * s;
    }
    case KernelSpec::Kind::Multiplicative:
      throw DomainError("continuum_w: multiplicative weights have no continuum form");
    case KernelSpec::Kind::Distance: {
      Vec3 num;
      double den = 0.0;
      for (const auto& p : samples) {
        const double kk = kernel.profile(distance(y, p.x));
        if (kk == 0.0) continue;
        num += (p.mass * kk) * p.u;
        den += p.mass * kk;
      }
      if (kernel.q == 0.0) return num;
      if (!(den > 0.0)) throw DomainError("continuum_w: zero local density under q-normalization");
      return num / std::pow(den, kernel.q);
    }
    case KernelSpec::Kind::Rank: {
      const std::size_t n = samples.size();
      std::vector<std::size_t> order(n);
      std::vector<double> d(n);
      for (std::size_t k = 0; k < n; ++k) {
        order[k] = k;
        d[k] = distance(y, samples[k].x);
      }
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
      // Mass strictly closer than each sample: equal distances share the same M.
      Vec3 w;
      double before = 0.0;
      std::size_t k = 0;
      while (k < n) {
        std::size_t g = k;
        double shell = 0.0;
        while (g < n && d[order[g]] == d[order[k]]) shell += samples[order[g++]].mass;
        const double tm = kernel.profile(before);
        for (std::size_t l = k; l < g; ++l) w += (samples[order[l]].mass * tm) * samples[order[l]].u;
        before += shell;
        k = g;
      }
      return w;
    }
  }
  return {};
}

}  // namespace ism
