#include "fpkit/fixed_point_data.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <set>
#include <unordered_set>

#include "fpkit/errors.hpp"

namespace fpkit {

FixedPointData::FixedPointData(int n, std::vector<FixedPointDatum> points)
    : n_(n), points_(std::move(points)) {
  if (n_ < 1) {
    throw ValidationError("dimension n must be >= 1, got " + std::to_string(n_));
  }
  if (points_.empty()) {
    throw ValidationError("fixed point set is empty");
  }
  std::unordered_set<std::string> labels;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    auto& point = points_[i];
    const std::string where = "fixed point " + std::to_string(i) + " ('" + point.label + "')";
    if (point.label.empty()) {
      throw ValidationError(where + ": empty label");
    }
    if (!labels.insert(point.label).second) {
      throw ValidationError(where + ": duplicate label");
    }
    if (point.weights.size() != static_cast<std::size_t>(n_)) {
      throw ValidationError(where + ": expected " + std::to_string(n_) + " weights, got " +
                            std::to_string(point.weights.size()));
    }
    for (std::size_t j = 0; j < point.weights.size(); ++j) {
      if (point.weights[j] == 0) {
        throw ValidationError(where + ": zero weight at index " + std::to_string(j) +
                              " (fixed point would not be isolated)");
      }
    }
    std::sort(point.weights.begin(), point.weights.end());
  }
}

std::optional<std::size_t> FixedPointData::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].label == label) {
      return i;
    }
  }
  return std::nullopt;
}

BundleWeights BundleWeights::shifted(Weight offset) const {
  std::vector<Weight> out = values_;
  for (auto& v : out) {
    v += offset;
  }
  return BundleWeights(std::move(out));
}

BundleWeights BundleWeights::negated() const {
  std::vector<Weight> out = values_;
  for (auto& v : out) {
    v = -v;
  }
  return BundleWeights(std::move(out));
}

BundleWeights BundleWeights::normalized() const {
  return values_.empty() ? *this : shifted(-values_.front());
}

bool BundleWeights::pairwise_distinct() const {
  std::set<Weight> seen(values_.begin(), values_.end());
  return seen.size() == values_.size();
}

bool BundleWeights::equivalent_to(const BundleWeights& other) const {
  return size() == other.size() && normalized() == other.normalized();
}

DataPackage validate(const RawDocument& raw) {
  std::vector<FixedPointDatum> points;
  points.reserve(raw.fixed_points.size());
  for (const auto& p : raw.fixed_points) {
    points.push_back({p.label, p.weights});
  }
  DataPackage package{FixedPointData(raw.n, std::move(points)), std::nullopt};
  if (raw.bundle_weights) {
    BundleWeights bundle(*raw.bundle_weights);
    check_aligned(package.data, bundle);
    package.bundle = std::move(bundle);
  }
  return package;
}

void check_aligned(const FixedPointData& data, const BundleWeights& bundle) {
  if (bundle.size() != data.size()) {
    throw ValidationError("bundle weight count " + std::to_string(bundle.size()) +
                          " does not match fixed point count " + std::to_string(data.size()));
  }
}

DerivedPointInvariants derive_invariants(std::span<const Weight> weights) {
  DerivedPointInvariants out{0, 1, 0};
  for (Weight w : weights) {
    out.lambda += w;
    out.e *= w;
    out.d += w < 0 ? 1 : 0;
  }
  return out;
}

std::vector<DerivedPointInvariants> derive_invariants(const FixedPointData& data) {
  std::vector<DerivedPointInvariants> out;
  out.reserve(data.size());
  for (const auto& point : data.points()) {
    out.push_back(derive_invariants(point.weights));
  }
  return out;
}

std::vector<int> betti_numbers(const FixedPointData& data) {
  std::vector<int> betti(static_cast<std::size_t>(data.n()) + 1, 0);
  for (const auto& point : data.points()) {
    ++betti[static_cast<std::size_t>(derive_invariants(point.weights).d)];
  }
  return betti;
}

bool projective_profile(const FixedPointData& data) {
  if (data.size() != static_cast<std::size_t>(data.n()) + 1) {
    return false;
  }
  const auto betti = betti_numbers(data);
  return std::all_of(betti.begin(), betti.end(), [](int b) { return b == 1; });
}

LaurentPoly tangent_character(const FixedPointDatum& point) {
  LaurentPoly character;
  for (Weight w : point.weights) {
    if (w > std::numeric_limits<int>::max() || w < std::numeric_limits<int>::min()) {
      throw std::overflow_error("weight " + std::to_string(w) + " exceeds the exponent range");
    }
    character.add_term(static_cast<int>(w), 1);
  }
  return character;
}

std::string default_label(std::size_t index) { return "P" + std::to_string(index + 1); }

}  // namespace fpkit
