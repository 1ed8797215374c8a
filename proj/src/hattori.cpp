#include "fpkit/hattori.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>

#include "fpkit/errors.hpp"
#include "fpkit/localization.hpp"

namespace fpkit {

namespace {

void require_projective_count(const FixedPointData& data) {
  if (data.size() != static_cast<std::size_t>(data.n()) + 1) {
    throw PreconditionError("expected n+1 = " + std::to_string(data.n() + 1) +
                            " fixed points, got " + std::to_string(data.size()));
  }
}

std::vector<Weight> multiset_difference(const std::vector<Weight>& a, const std::vector<Weight>& b) {
  std::vector<Weight> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// The linear model generated by the weights at `reference`: the values
// a_j - a_ref are minus those weights. Every other point is matched to the
// value whose difference set reproduces its weights; unmatched points take
// the leftover values in lambda order. Returns nullopt when the reference
// weights repeat, since no linear model has repeated weights.
std::optional<std::vector<Weight>> fit_from_reference(const FixedPointData& data,
                                                      const std::vector<DerivedPointInvariants>& inv,
                                                      std::size_t reference) {
  const std::size_t m = data.size();
  std::vector<Weight> values{0};
  for (Weight w : data[reference].weights) {
    values.push_back(-w);
  }
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    return std::nullopt;
  }

  std::map<Weight, std::vector<Weight>> pattern;
  for (std::size_t k = 0; k < values.size(); ++k) {
    pattern[values[k]] = linear_weights_at(values, k);
  }

  std::vector<std::optional<Weight>> a(m);
  std::set<Weight> used{0};
  a[reference] = 0;
  for (std::size_t q = 0; q < m; ++q) {
    if (q == reference) {
      continue;
    }
    for (Weight v : values) {
      if (!used.contains(v) && pattern[v] == data[q].weights) {
        a[q] = v;
        used.insert(v);
        break;
      }
    }
  }

  std::vector<Weight> leftover;
  for (Weight v : values) {
    if (!used.contains(v)) {
      leftover.push_back(v);
    }
  }
  std::vector<std::size_t> unmatched;
  for (std::size_t q = 0; q < m; ++q) {
    if (!a[q]) {
      unmatched.push_back(q);
    }
  }
  std::stable_sort(unmatched.begin(), unmatched.end(),
                   [&](std::size_t x, std::size_t y) { return inv[x].lambda < inv[y].lambda; });
  for (std::size_t k = 0; k < unmatched.size(); ++k) {
    a[unmatched[k]] = leftover[k];
  }

  std::vector<Weight> out(m);
  for (std::size_t q = 0; q < m; ++q) {
    out[q] = *a[q] - *a[0];
  }
  return out;
}

std::size_t consistent_points(const FixedPointData& data, const std::vector<Weight>& a) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    count += data[i].weights == linear_weights_at(a, i) ? 1 : 0;
  }
  return count;
}

}  // namespace

std::vector<Weight> linear_weights_at(const std::vector<Weight>& a, std::size_t i) {
  std::vector<Weight> out;
  out.reserve(a.size() - 1);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j != i) {
      out.push_back(a[i] - a[j]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConditionCResult check_condition_c(const FixedPointData& data, const BundleWeights& bundle,
                                   const BigInt& k0) {
  if (k0 < 0) {
    throw PreconditionError("k0 must be nonnegative");
  }
  check_aligned(data, bundle);
  const auto inv = derive_invariants(data);
  const BigInt a = inv[0].lambda - k0 * bundle[0];
  for (std::size_t i = 1; i < inv.size(); ++i) {
    if (inv[i].lambda != k0 * bundle[i] + a) {
      return {std::nullopt, i};
    }
  }
  return {ConditionCCertificate{k0, a, bundle}, std::nullopt};
}

std::optional<BundleWeights> try_derive_bundle_weights(const FixedPointData& data) {
  require_projective_count(data);
  const auto inv = derive_invariants(data);
  const BigInt k0 = data.n() + 1;
  std::vector<Weight> a;
  a.reserve(inv.size());
  for (const auto& p : inv) {
    const BigInt diff = p.lambda - inv[0].lambda;
    if (diff % k0 != 0) {
      return std::nullopt;
    }
    a.push_back(to_int64(diff / k0));
  }
  return BundleWeights(std::move(a));
}

BundleWeights derive_bundle_weights(const FixedPointData& data) {
  auto bundle = try_derive_bundle_weights(data);
  if (!bundle) {
    throw InconsistentDataError("weight sums are not congruent modulo n+1 = " +
                                std::to_string(data.n() + 1) +
                                "; no line bundle satisfies Condition C with k0 = n+1");
  }
  return *bundle;
}

bool check_quasi_ample(const FixedPointData& data, const BundleWeights& bundle) {
  check_aligned(data, bundle);
  return bundle.pairwise_distinct() && line_bundle_power(data, bundle) != 0;
}

std::vector<Rational> solve_vandermonde(const std::vector<BigInt>& nodes, std::vector<Rational> rhs) {
  if (nodes.size() != rhs.size()) {
    throw PreconditionError("Vandermonde system is not square");
  }
  const std::size_t t = nodes.size();
  if (t == 0) {
    return rhs;
  }
  const std::size_t last = t - 1;
  for (std::size_t k = 0; k < last; ++k) {
    for (std::size_t i = last; i > k; --i) {
      rhs[i] -= Rational(nodes[k]) * rhs[i - 1];
    }
  }
  for (std::size_t k = last; k-- > 0;) {
    for (std::size_t i = k + 1; i <= last; ++i) {
      const BigInt gap = nodes[i] - nodes[i - k - 1];
      if (gap == 0) {
        throw PreconditionError("Vandermonde nodes are not pairwise distinct");
      }
      rhs[i] /= Rational(gap);
    }
    for (std::size_t i = k; i < last; ++i) {
      rhs[i] -= rhs[i + 1];
    }
  }
  return rhs;
}

DistinctnessReport distinctness_analysis(const FixedPointData& data) {
  if (!residue_constraints_hold(data)) {
    throw PreconditionError("distinctness analysis needs data satisfying the residue constraints");
  }
  const auto inv = derive_invariants(data);
  std::map<BigInt, std::vector<std::size_t>> by_lambda;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    by_lambda[inv[i].lambda].push_back(i);
  }

  DistinctnessReport report;
  for (auto& [lambda, members] : by_lambda) {
    Rational mu = 0;
    for (std::size_t i : members) {
      mu += make_rational(1, inv[i].e);
    }
    report.lambda_values.push_back(lambda);
    report.groups.push_back(members);
    report.group_mu.push_back(mu);
  }
  const std::size_t t = report.groups.size();

  std::vector<Rational> rhs;
  for (std::size_t r = 0; r < t; ++r) {
    rhs.push_back(residue_sum(data, static_cast<unsigned>(r)));
  }
  report.solved_mu = solve_vandermonde(report.lambda_values, std::move(rhs));
  if (report.solved_mu != report.group_mu) {
    throw std::logic_error("Vandermonde solution disagrees with the directly grouped sums");
  }

  report.verdict = t == data.size() ? DistinctnessReport::Verdict::distinct
                                    : DistinctnessReport::Verdict::grouped;
  report.vandermonde_applies = t <= static_cast<std::size_t>(data.n());
  report.all_mu_zero = std::all_of(report.group_mu.begin(), report.group_mu.end(),
                                   [](const Rational& mu) { return mu == 0; });
  report.c1_power = c1_power(data);
  report.every_group_shared = std::all_of(report.groups.begin(), report.groups.end(),
                                          [](const auto& g) { return g.size() >= 2; });
  return report;
}

std::vector<FirstChernCandidate> first_chern_candidates(int n) {
  if (n < 1) {
    throw PreconditionError("dimension must be >= 1");
  }
  // 2c^2 - 3(n+1)c + (n+1)^2 = 0
  const BigInt n1 = n + 1;
  const BigInt qa = 2;
  const BigInt qb = -3 * n1;
  const BigInt qc = n1 * n1;
  const BigInt discriminant = qb * qb - 4 * qa * qc;
  const BigInt root = boost::multiprecision::sqrt(discriminant);
  if (root * root != discriminant) {
    throw std::logic_error("first Chern class quadratic has irrational roots");
  }

  std::vector<Rational> roots{make_rational(-qb + root, 2 * qa)};
  if (root != 0) {
    roots.push_back(make_rational(-qb - root, 2 * qa));
  }

  std::vector<FirstChernCandidate> out;
  for (const auto& c : roots) {
    FirstChernCandidate candidate{c, true, {}};
    if (!is_integer(c)) {
      candidate.admissible = false;
      candidate.reason = "non-integral";
    } else if ((numerator_of(c) - n1) % 2 != 0) {
      candidate.admissible = false;
      candidate.reason = "parity: c = " + to_string(c) + " and n+1 = " + n1.str() +
                         " differ modulo 2";
    }
    out.push_back(std::move(candidate));
  }
  return out;
}

RigidityVerdict hattori_verdict(const FixedPointData& data) {
  require_projective_count(data);
  const auto inv = derive_invariants(data);
  const std::size_t m = data.size();

  RigidityVerdict verdict;
  verdict.bundle = try_derive_bundle_weights(data);
  verdict.bundle_derivable = verdict.bundle.has_value();
  if (verdict.bundle) {
    const auto cert = check_condition_c(data, *verdict.bundle, BigInt(data.n() + 1));
    verdict.condition_c = cert.holds();
    if (cert.holds()) {
      verdict.condition_c_a = cert.certificate->a;
    }
    verdict.quasi_ample = check_quasi_ample(data, *verdict.bundle);
    verdict.bundle_power = line_bundle_power(data, *verdict.bundle);
  }

  std::optional<std::vector<Weight>> best;
  std::size_t best_score = 0;
  for (std::size_t r = 0; r < m; ++r) {
    auto fit = fit_from_reference(data, inv, r);
    if (!fit) {
      continue;
    }
    const std::size_t score = consistent_points(data, *fit);
    if (!best || score > best_score) {
      best = std::move(fit);
      best_score = score;
    }
  }
  if (!best && verdict.bundle) {
    best = verdict.bundle->values();
  }
  verdict.normalized_a = best.value_or(std::vector<Weight>{});

  for (std::size_t i = 0; i < m; ++i) {
    const auto expected =
        verdict.normalized_a.empty() ? std::vector<Weight>{} : linear_weights_at(verdict.normalized_a, i);
    if (expected == data[i].weights) {
      continue;
    }
    PointMismatch mismatch;
    mismatch.index = i;
    mismatch.label = data[i].label;
    mismatch.expected = expected;
    mismatch.actual = data[i].weights;
    mismatch.missing = multiset_difference(expected, data[i].weights);
    mismatch.unexpected = multiset_difference(data[i].weights, expected);
    verdict.mismatches.push_back(std::move(mismatch));
  }

  verdict.passes = verdict.bundle_derivable && verdict.condition_c && verdict.quasi_ample &&
                   verdict.bundle_power == Rational(1) && verdict.mismatches.empty();
  return verdict;
}

}  // namespace fpkit
