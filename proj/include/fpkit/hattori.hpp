#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fpkit/fixed_point_data.hpp"
#include "fpkit/rational.hpp"

namespace fpkit {

// Witness for lambda_i = k0 * a_i + a at every fixed point.
struct ConditionCCertificate {
  BigInt k0;
  BigInt a;
  BundleWeights bundle;
};

struct ConditionCResult {
  std::optional<ConditionCCertificate> certificate;
  // First point at which the affine relation breaks, when it does.
  std::optional<std::size_t> violating_index;

  bool holds() const { return certificate.has_value(); }
};

// Finds the unique a with lambda_i = k0 * a_i + a for all i, if any.
// Throws PreconditionError for negative k0 and ValidationError for
// misaligned weights.
ConditionCResult check_condition_c(const FixedPointData& data, const BundleWeights& bundle,
                                   const BigInt& k0);

// Bundle weights with a_1 = 0 satisfying Condition C for k0 = n+1, or
// nullopt when some lambda_i - lambda_1 is not divisible by n+1.
// Throws PreconditionError unless there are exactly n+1 points.
std::optional<BundleWeights> try_derive_bundle_weights(const FixedPointData& data);

// As above but throws InconsistentDataError on indivisibility.
BundleWeights derive_bundle_weights(const FixedPointData& data);

// Pairwise distinct weights and nonvanishing c_1^n(L).
bool check_quasi_ample(const FixedPointData& data, const BundleWeights& bundle);

struct DistinctnessReport {
  enum class Verdict { distinct, grouped };

  Verdict verdict = Verdict::distinct;
  // Distinct lambda values in increasing order, and the point indices
  // sharing each value.
  std::vector<BigInt> lambda_values;
  std::vector<std::vector<std::size_t>> groups;
  // mu_g = sum over the group of 1/e_i, computed directly.
  std::vector<Rational> group_mu;
  // The same mu recovered from the Vandermonde system
  // sum_g lambda_g^r mu_g = residue_sum(r), r < t.
  std::vector<Rational> solved_mu;
  // Fewer groups than n + 1, so the residue constraints pin all mu to zero.
  bool vandermonde_applies = false;
  bool all_mu_zero = false;
  Rational c1_power;
  // Every lambda value is shared by at least two points.
  bool every_group_shared = false;
};

// Throws PreconditionError unless residue_constraints_hold(data).
DistinctnessReport distinctness_analysis(const FixedPointData& data);

// Solves sum_g nodes_g^r x_g = rhs_r for r = 0..t-1 with pairwise distinct
// nodes, by the Bjorck-Pereyra elimination.
std::vector<Rational> solve_vandermonde(const std::vector<BigInt>& nodes, std::vector<Rational> rhs);

struct FirstChernCandidate {
  Rational value;
  bool admissible = false;
  std::string reason;  // empty when admissible
};

// Roots of 2c^2 - 3(n+1)c + (n+1)^2 = 0, largest first, each flagged by
// integrality and the Stiefel-Whitney parity filter c = n+1 (mod 2).
std::vector<FirstChernCandidate> first_chern_candidates(int n);

struct PointMismatch {
  std::size_t index = 0;
  std::string label;
  std::vector<Weight> expected;
  std::vector<Weight> actual;
  std::vector<Weight> missing;     // expected but absent
  std::vector<Weight> unexpected;  // present but not expected
};

struct RigidityVerdict {
  bool passes = false;
  // a_i with a_1 = 0 of the linear model that best explains the weights;
  // equals the derived bundle weights whenever the verdict passes.
  std::vector<Weight> normalized_a;
  std::vector<PointMismatch> mismatches;

  // Hypotheses, in pipeline order.
  bool bundle_derivable = false;
  std::optional<BundleWeights> bundle;  // derived, a_1 = 0
  bool condition_c = false;
  bool quasi_ample = false;
  std::optional<Rational> bundle_power;  // c_1^n(L)
  std::optional<BigInt> condition_c_a;
};

// Derives L, checks quasi-ampleness, Condition C with k0 = n+1,
// c_1^n(L) = 1 and that each weight multiset equals {a_i - a_j : j != i}.
// Throws PreconditionError unless there are exactly n+1 points.
RigidityVerdict hattori_verdict(const FixedPointData& data);

// {a_i - a_j : j != i}, ascending.
std::vector<Weight> linear_weights_at(const std::vector<Weight>& a, std::size_t i);

}  // namespace fpkit
