#pragma once

#include <cstddef>
#include <vector>

#include "ism/geometry.hpp"
#include "ism/kernel.hpp"
#include "ism/model.hpp"

namespace ism {

// Per-agent interaction fields w_i. Every evaluator sums over j in ascending
// agent order with the arithmetic spelled out below, so results do not depend
// on the thread count and can be compared to a brute-force loop with ==.

// w_i = c * (sum_j v_j) / N.
std::vector<Vec3> w_constant(const Ensemble& e, double c);

// w_i = n_i * (sum_j n_j v_j) / N. Throws DomainError for n_i <= 0.
std::vector<Vec3> w_multiplicative(const Ensemble& e, const std::vector<double>& n);

// num_i = sum_j K(|x_i - x_j|) v_j  (j == i only if include_self),
// den_i = sum_{j != i} K(|x_i - x_j|),
// w_i   = (num_i / N) / (den_i / N)^q.
// Neighbors come from a SpatialIndex with cell size = support(K). For q > 0 an
// agent with den_i == 0 raises NumericalError naming the agent.
std::vector<Vec3> w_distance(const Ensemble& e, const RadialProfile& k, double q,
                             bool include_self = true, std::size_t* evaluations = nullptr);

// M_ij = #{k : |x_k - x_i| < |x_j - x_i|} / N for j != i, M_ii = 0;
// w_i = (sum_j T(M_ij) v_j) / N  (j == i only if include_self).
// Ranks come from one sort of the distances per agent.
std::vector<Vec3> w_rank(const Ensemble& e, const RadialProfile& t, bool include_self = true,
                         std::size_t* evaluations = nullptr);

// Dispatch on e.kernel.
std::vector<Vec3> interaction_field(const Ensemble& e, std::size_t* evaluations = nullptr);

// A discretized spatial measure: point masses (rho * cell volume) carrying a
// velocity.
struct ContinuumSample {
  Vec3 x;
  double mass = 0.0;
  Vec3 u;
};

// Quadrature form of the continuum interaction at point y:
//   Constant:  c sum_k m_k u_k
//   Distance:  sum_k m_k K(|y - x_k|) u_k / (sum_k m_k K(|y - x_k|))^q
//   Rank:      sum_k m_k T(M_y(|y - x_k|)) u_k,  M_y(R) = sum_{|y - x_l| < R} m_l
// Throws DomainError for a zero denominator with q > 0 or a multiplicative kernel.
Vec3 continuum_w(const std::vector<ContinuumSample>& samples, const Vec3& y, const KernelSpec& kernel);

}  // namespace ism
