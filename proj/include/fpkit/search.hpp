#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpkit/fixed_point_data.hpp"
#include "fpkit/rational.hpp"

namespace fpkit {

inline constexpr std::uint64_t kDefaultMaxLeaves = 100'000'000;

// Exhaustive search over weight data with m = n+1 fixed points and weights
// in [-bound, bound] \ {0}.
struct SearchSpec {
  int n = 1;
  int bound = 1;
  bool require_projective_profile = false;
  bool require_condition_c = false;
  // Condition C multiplier; defaults to n+1 when unset.
  std::optional<std::int64_t> k0;
  std::uint64_t max_leaves = kDefaultMaxLeaves;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;

  std::int64_t effective_k0() const { return k0.value_or(n + 1); }
};

struct SearchStats {
  BigInt raw_leaves;  // unordered point tuples before pruning
  std::uint64_t leaves_visited = 0;
  std::uint64_t pruned_branches = 0;
};

struct SearchResult {
  std::vector<FixedPointData> survivors;
  SearchStats stats;
};

// Number of multisets of m = n+1 points drawn from the weight multisets.
BigInt raw_leaf_count(const SearchSpec& spec);

// Every survivor, canonically ordered: points sorted by (lambda, e, weights)
// and labelled P1..Pm, survivors in lexicographic order of their points.
// Throws PreconditionError for an invalid spec and SearchSpaceTooLarge when
// raw_leaf_count exceeds spec.max_leaves.
SearchResult enumerate(const SearchSpec& spec);

// Condition C for some integer bundle weights: all lambda_i congruent
// modulo k0 (all equal when k0 = 0).
bool condition_c_satisfiable(const FixedPointData& data, std::int64_t k0);

struct SurvivorMatch {
  std::size_t survivor = 0;
  std::vector<Weight> normalized_a;
};

struct HalfChernHunt {
  bool applicable = false;  // (n+1)/2 is an integer
  // (n+1)/2 = n+1 (mod 2), i.e. n = 3 (mod 4).
  bool parity_admissible = false;
  std::string reason;
  std::optional<std::int64_t> k0;
  // Survivors carrying a quasi-ample bundle with Condition C for k0 = (n+1)/2.
  std::vector<std::size_t> candidates;
};

struct RigidityExperiment {
  SearchSpec spec;
  SearchResult search;

  // Hypotheses of the rigidity theorem hold and the weights are linear.
  std::vector<SurvivorMatch> matches;
  // Hypotheses hold but the weights are not linear. Must stay empty.
  std::vector<std::size_t> counterexamples;
  std::vector<std::size_t> fails_hypotheses;

  // Distinctness dichotomy for the weight sums.
  std::size_t lambda_distinct = 0;
  std::size_t lambda_all_shared = 0;
  std::size_t lambda_mixed = 0;
  // Survivors with c_1^n != 0 whose weight sums are not pairwise distinct.
  std::vector<std::size_t> distinctness_violations;

  HalfChernHunt half_chern;
};

RigidityExperiment rigidity_experiment(const SearchSpec& spec);

}  // namespace fpkit
