#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fpkit/fixed_point_data.hpp"

namespace fpkit {

// Fixed-point data of the standard linear action together with the weights
// of the hyperplane bundle H at the fixed points.
struct LinearModel {
  FixedPointData data;
  BundleWeights bundle;
};

// P^n with the action z . [z_1 : ... : z_{n+1}] = [z^{-a_1} z_1 : ...]:
// point i has weights {a_i - a_j : j != i} and H has weight a_i there.
// Throws PreconditionError on repeated a_i or fewer than two entries.
LinearModel linear_pn(const std::vector<Weight>& a);

// The invariant hyperplane z_{n+1} = 0 of P^n, i.e. P^{n-1} with fixed
// points P_1..P_n. `a` holds a_1..a_n; bundle weights are those of H
// restricted to the hyperplane.
LinearModel hyperplane_model(const std::vector<Weight>& a);

struct RestrictedPoint {
  std::size_t d_index = 0;
  std::size_t m_index = 0;
  std::string label;
  bool submultiset = false;
  // The complementary weight in T_P M, i.e. the normal weight, when the
  // D-weights embed.
  std::optional<Weight> normal_weight;
  // D-weights that do not occur in T_P M (empty when submultiset).
  std::vector<Weight> offending;
  // Sum of D-weights plus the normal weight equals lambda_i(M).
  bool weight_sum_exact = false;
  // Set for linear pairs: normal weight equals a_i - a_excluded.
  std::optional<bool> linear_normal_matches;
};

struct PairRestrictionReport {
  bool passes = false;
  std::vector<RestrictedPoint> points;
  // M-point not hit by the embedding, when M has exactly one more point.
  std::optional<std::size_t> excluded_point;
  // Condition C on D with k0 = dim D + 1, using the bundle
  // weights restricted along the embedding; present when M carries bundle
  // weights.
  std::optional<bool> d_condition_c;
  std::optional<BigInt> d_condition_c_a;
};

// embedding[d] is the index in M of the d-th fixed point of D.
// Throws PreconditionError unless dim D = dim M - 1 and the embedding is
// injective, in range and covers every point of D.
PairRestrictionReport pair_restriction_check(const FixedPointData& m, const FixedPointData& d,
                                             const std::vector<std::size_t>& embedding,
                                             const BundleWeights* m_bundle = nullptr);

// Embedding by matching labels of D to labels of M.
std::vector<std::size_t> embedding_by_label(const FixedPointData& m, const FixedPointData& d);

}  // namespace fpkit
