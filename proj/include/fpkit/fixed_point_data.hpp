#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpkit/laurent_poly.hpp"
#include "fpkit/rational.hpp"

namespace fpkit {

using Weight = std::int64_t;

// One isolated fixed point: its label and the multiset of n nonzero tangent
// weights, stored ascending.
struct FixedPointDatum {
  std::string label;
  std::vector<Weight> weights;

  friend bool operator==(const FixedPointDatum&, const FixedPointDatum&) = default;
};

// Weight data of a circle action with isolated fixed points. Instances are
// only produced by validation, so every invariant holds for the lifetime of
// the object: n >= 1, at least one point, n nonzero weights per point,
// unique labels.
class FixedPointData {
 public:
  // Validates and canonicalizes (sorts each weight multiset).
  // Throws ValidationError.
  FixedPointData(int n, std::vector<FixedPointDatum> points);

  int n() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<FixedPointDatum>& points() const { return points_; }
  const FixedPointDatum& operator[](std::size_t i) const { return points_[i]; }

  std::optional<std::size_t> index_of(const std::string& label) const;

  friend bool operator==(const FixedPointData&, const FixedPointData&) = default;

 private:
  int n_;
  std::vector<FixedPointDatum> points_;
};

// Weights a_i of an equivariant line bundle at the fixed points, aligned with
// FixedPointData::points(). Only meaningful up to a simultaneous shift.
class BundleWeights {
 public:
  BundleWeights() = default;
  explicit BundleWeights(std::vector<Weight> values) : values_(std::move(values)) {}

  const std::vector<Weight>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  Weight operator[](std::size_t i) const { return values_[i]; }

  BundleWeights shifted(Weight offset) const;
  BundleWeights negated() const;
  // Representative with a_1 = 0.
  BundleWeights normalized() const;
  bool pairwise_distinct() const;
  bool equivalent_to(const BundleWeights& other) const;

  friend bool operator==(const BundleWeights&, const BundleWeights&) = default;

 private:
  std::vector<Weight> values_;
};

// Fixed-point data plus optional line-bundle weights, as carried by one
// interchange document.
struct DataPackage {
  FixedPointData data;
  std::optional<BundleWeights> bundle;
};

// Unvalidated contents of an interchange document.
struct RawFixedPoint {
  std::string label;
  std::vector<Weight> weights;
};

struct RawDocument {
  int n = 0;
  std::vector<RawFixedPoint> fixed_points;
  std::optional<std::vector<Weight>> bundle_weights;
};

// Throws ValidationError naming the offending point and index.
DataPackage validate(const RawDocument& raw);

// Throws ValidationError when the lengths disagree.
void check_aligned(const FixedPointData& data, const BundleWeights& bundle);

struct DerivedPointInvariants {
  BigInt lambda;  // sum of weights
  BigInt e;       // product of weights, never zero
  int d = 0;      // number of negative weights

  friend bool operator==(const DerivedPointInvariants&, const DerivedPointInvariants&) = default;
};

DerivedPointInvariants derive_invariants(std::span<const Weight> weights);
std::vector<DerivedPointInvariants> derive_invariants(const FixedPointData& data);

// b_0, b_2, ..., b_2n read off from negative-weight counts.
std::vector<int> betti_numbers(const FixedPointData& data);

// True iff there are n+1 points whose negative-weight counts are a
// permutation of 0..n, i.e. the Betti numbers of P^n.
bool projective_profile(const FixedPointData& data);

// The tangent representation sum_j t^{k_j} in Z[t, t^-1].
LaurentPoly tangent_character(const FixedPointDatum& point);

// P1, P2, ...
std::string default_label(std::size_t index);

}  // namespace fpkit
