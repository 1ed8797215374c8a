#include "fpkit/models.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "fpkit/errors.hpp"
#include "fpkit/hattori.hpp"

namespace fpkit {

namespace {

void require_distinct(const std::vector<Weight>& a) {
  std::set<Weight> seen(a.begin(), a.end());
  if (seen.size() != a.size()) {
    throw PreconditionError("linear model weights a_i must be pairwise distinct");
  }
}

LinearModel build_linear(const std::vector<Weight>& a) {
  std::vector<FixedPointDatum> points;
  points.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    points.push_back({default_label(i), linear_weights_at(a, i)});
  }
  return {FixedPointData(static_cast<int>(a.size()) - 1, std::move(points)), BundleWeights(a)};
}

}  // namespace

LinearModel linear_pn(const std::vector<Weight>& a) {
  if (a.size() < 2) {
    throw PreconditionError("dimension must be >= 1: need at least two weights a_i");
  }
  require_distinct(a);
  return build_linear(a);
}

LinearModel hyperplane_model(const std::vector<Weight>& a) {
  if (a.size() < 2) {
    throw PreconditionError("dimension must be >= 1: the hyperplane needs at least two fixed points");
  }
  require_distinct(a);
  return build_linear(a);
}

std::vector<std::size_t> embedding_by_label(const FixedPointData& m, const FixedPointData& d) {
  std::vector<std::size_t> embedding;
  for (const auto& point : d.points()) {
    auto index = m.index_of(point.label);
    if (!index) {
      throw PreconditionError("fixed point '" + point.label + "' of D has no counterpart in M");
    }
    embedding.push_back(*index);
  }
  return embedding;
}

PairRestrictionReport pair_restriction_check(const FixedPointData& m, const FixedPointData& d,
                                             const std::vector<std::size_t>& embedding,
                                             const BundleWeights* m_bundle) {
  if (d.n() != m.n() - 1) {
    throw PreconditionError("dimension mismatch: D has dimension " + std::to_string(d.n()) +
                            ", expected " + std::to_string(m.n() - 1));
  }
  if (embedding.size() != d.size()) {
    throw PreconditionError("embedding must map each of the " + std::to_string(d.size()) +
                            " fixed points of D");
  }
  std::set<std::size_t> image;
  for (std::size_t target : embedding) {
    if (target >= m.size()) {
      throw PreconditionError("embedding target " + std::to_string(target) + " out of range");
    }
    if (!image.insert(target).second) {
      throw PreconditionError("embedding is not injective");
    }
  }
  if (m_bundle != nullptr) {
    check_aligned(m, *m_bundle);
  }

  PairRestrictionReport report;
  if (m.size() == d.size() + 1) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!image.contains(i)) {
        report.excluded_point = i;
      }
    }
  }

  report.passes = true;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const auto& m_weights = m[embedding[k]].weights;
    const auto& d_weights = d[k].weights;
    RestrictedPoint point;
    point.d_index = k;
    point.m_index = embedding[k];
    point.label = d[k].label;
    std::set_difference(d_weights.begin(), d_weights.end(), m_weights.begin(), m_weights.end(),
                        std::back_inserter(point.offending));
    point.submultiset = point.offending.empty();
    if (point.submultiset) {
      std::vector<Weight> complement;
      std::set_difference(m_weights.begin(), m_weights.end(), d_weights.begin(), d_weights.end(),
                          std::back_inserter(complement));
      point.normal_weight = complement.front();
      BigInt d_sum = 0;
      for (Weight w : d_weights) {
        d_sum += w;
      }
      point.weight_sum_exact = d_sum + *point.normal_weight == derive_invariants(m_weights).lambda;
      if (m_bundle != nullptr && report.excluded_point) {
        point.linear_normal_matches =
            *point.normal_weight == (*m_bundle)[embedding[k]] - (*m_bundle)[*report.excluded_point];
      }
    }
    const bool ok = point.submultiset && point.weight_sum_exact && point.linear_normal_matches.value_or(true);
    report.passes = report.passes && ok;
    report.points.push_back(std::move(point));
  }

  if (m_bundle != nullptr) {
    std::vector<Weight> restricted;
    for (std::size_t target : embedding) {
      restricted.push_back((*m_bundle)[target]);
    }
    const auto cert = check_condition_c(d, BundleWeights(std::move(restricted)), BigInt(d.n() + 1));
    report.d_condition_c = cert.holds();
    if (cert.holds()) {
      report.d_condition_c_a = cert.certificate->a;
    }
  }
  return report;
}

}  // namespace fpkit
