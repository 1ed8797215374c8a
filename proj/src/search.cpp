#include "fpkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>
#include <tuple>

#include "fpkit/errors.hpp"
#include "fpkit/hattori.hpp"
#include "fpkit/localization.hpp"

namespace fpkit {

namespace {

struct Candidate {
  std::vector<Weight> weights;
  BigInt lambda;
  BigInt e;
  int d = 0;
  // lambda^r / e for r = 0..n-1
  std::vector<Rational> residue_terms;
};

std::vector<Candidate> weight_multisets(int n, int bound) {
  std::vector<Weight> values;
  for (Weight w = -bound; w <= bound; ++w) {
    if (w != 0) {
      values.push_back(w);
    }
  }
  std::vector<Candidate> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  // Nondecreasing index tuples enumerate the sorted multisets.
  while (true) {
    Candidate c;
    for (std::size_t k : pick) {
      c.weights.push_back(values[k]);
    }
    const auto inv = derive_invariants(c.weights);
    c.lambda = inv.lambda;
    c.e = inv.e;
    c.d = inv.d;
    for (int r = 0; r < n; ++r) {
      c.residue_terms.push_back(make_rational(ipow(c.lambda, static_cast<unsigned>(r)), c.e));
    }
    out.push_back(std::move(c));

    std::size_t pos = pick.size();
    while (pos > 0 && pick[pos - 1] == values.size() - 1) {
      --pos;
    }
    if (pos == 0) {
      break;
    }
    const std::size_t next = pick[pos - 1] + 1;
    for (std::size_t k = pos - 1; k < pick.size(); ++k) {
      pick[k] = next;
    }
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.lambda, a.e, a.weights) < std::tie(b.lambda, b.e, b.weights);
  });
  return out;
}

class Enumerator {
 public:
  Enumerator(const SearchSpec& spec, std::vector<Candidate> candidates)
      : spec_(spec), m_(static_cast<std::size_t>(spec.n) + 1), candidates_(std::move(candidates)) {
    const std::size_t count = candidates_.size();
    suffix_min_.resize(count);
    suffix_max_.resize(count);
    for (std::size_t k = count; k-- > 0;) {
      const Rational& v = candidates_[k].residue_terms[0];
      suffix_min_[k] = k + 1 < count ? std::min(v, suffix_min_[k + 1]) : v;
      suffix_max_[k] = k + 1 < count ? std::max(v, suffix_max_[k + 1]) : v;
    }
  }

  std::size_t work_items() const { return candidates_.size(); }

  struct ItemResult {
    std::vector<std::vector<std::size_t>> survivors;
    std::uint64_t leaves = 0;
    std::uint64_t pruned = 0;
  };

  ItemResult run_item(std::size_t first) const {
    ItemResult result;
    std::vector<std::size_t> chosen(m_);
    chosen[0] = first;
    descend(result, chosen, 1, first, candidates_[first].residue_terms[0]);
    return result;
  }

  FixedPointData build(const std::vector<std::size_t>& chosen) const {
    std::vector<FixedPointDatum> points;
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      points.push_back({default_label(k), candidates_[chosen[k]].weights});
    }
    return FixedPointData(spec_.n, std::move(points));
  }

 private:
  void descend(ItemResult& result, std::vector<std::size_t>& chosen, std::size_t depth,
               std::size_t start, const Rational& partial) const {
    if (depth == m_) {
      ++result.leaves;
      if (partial == 0 && accept(chosen)) {
        result.survivors.push_back(chosen);
      }
      return;
    }
    const std::size_t remaining_after = m_ - depth - 1;
    for (std::size_t k = start; k < candidates_.size(); ++k) {
      Rational next = partial + candidates_[k].residue_terms[0];
      // Later points come from indices >= k, so their inverse Euler classes
      // lie within the suffix extremes.
      if (remaining_after > 0) {
        const Rational lo = next + Rational(remaining_after) * suffix_min_[k];
        const Rational hi = next + Rational(remaining_after) * suffix_max_[k];
        if (lo > 0 || hi < 0) {
          ++result.pruned;
          continue;
        }
      } else if (next != 0) {
        ++result.leaves;
        continue;
      }
      chosen[depth] = k;
      descend(result, chosen, depth + 1, k, next);
    }
  }

  bool accept(const std::vector<std::size_t>& chosen) const {
    for (int r = 1; r < spec_.n; ++r) {
      Rational total = 0;
      for (std::size_t k : chosen) {
        total += candidates_[k].residue_terms[static_cast<std::size_t>(r)];
      }
      if (total != 0) {
        return false;
      }
    }
    if (spec_.require_projective_profile) {
      std::set<int> profile;
      for (std::size_t k : chosen) {
        profile.insert(candidates_[k].d);
      }
      if (profile.size() != m_) {
        return false;
      }
    }
    if (spec_.require_condition_c) {
      const BigInt k0 = spec_.effective_k0();
      const BigInt& base = candidates_[chosen[0]].lambda;
      for (std::size_t k : chosen) {
        const BigInt diff = candidates_[k].lambda - base;
        if (k0 == 0 ? diff != 0 : diff % k0 != 0) {
          return false;
        }
      }
    }
    return true;
  }

  const SearchSpec& spec_;
  std::size_t m_;
  std::vector<Candidate> candidates_;
  std::vector<Rational> suffix_min_;
  std::vector<Rational> suffix_max_;
};

void validate_spec(const SearchSpec& spec) {
  if (spec.n < 1) {
    throw PreconditionError("search dimension n must be >= 1");
  }
  if (spec.bound < 1) {
    throw PreconditionError("search bound must be >= 1");
  }
  if (spec.effective_k0() < 0) {
    throw PreconditionError("k0 must be nonnegative");
  }
}

}  // namespace

BigInt raw_leaf_count(const SearchSpec& spec) {
  validate_spec(spec);
  const BigInt multisets = binomial(static_cast<unsigned>(2 * spec.bound + spec.n - 1),
                                    static_cast<unsigned>(spec.n));
  const unsigned m = static_cast<unsigned>(spec.n) + 1;
  // multichoose(K, m) = C(K + m - 1, m)
  BigInt count = 1;
  for (unsigned i = 1; i <= m; ++i) {
    count *= multisets + (i - 1);
    count /= i;
  }
  return count;
}

SearchResult enumerate(const SearchSpec& spec) {
  validate_spec(spec);
  SearchResult result;
  result.stats.raw_leaves = raw_leaf_count(spec);
  if (result.stats.raw_leaves > spec.max_leaves) {
    throw SearchSpaceTooLarge("search space of " + result.stats.raw_leaves.str() +
                              " raw leaves exceeds the limit of " + std::to_string(spec.max_leaves));
  }

  const Enumerator enumerator(spec, weight_multisets(spec.n, spec.bound));
  const std::size_t items = enumerator.work_items();
  std::vector<Enumerator::ItemResult> per_item(items);

  unsigned threads = spec.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : spec.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(items, 1)));
  std::atomic<std::size_t> next_item{0};
  auto worker = [&] {
    for (std::size_t item = next_item++; item < items; item = next_item++) {
      per_item[item] = enumerator.run_item(item);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }

  std::vector<std::vector<std::size_t>> chosen;
  for (auto& item : per_item) {
    result.stats.leaves_visited += item.leaves;
    result.stats.pruned_branches += item.pruned;
    for (auto& s : item.survivors) {
      chosen.push_back(std::move(s));
    }
  }
  std::sort(chosen.begin(), chosen.end());
  result.survivors.reserve(chosen.size());
  for (const auto& c : chosen) {
    result.survivors.push_back(enumerator.build(c));
  }
  return result;
}

bool condition_c_satisfiable(const FixedPointData& data, std::int64_t k0) {
  if (k0 < 0) {
    throw PreconditionError("k0 must be nonnegative");
  }
  const auto inv = derive_invariants(data);
  for (const auto& p : inv) {
    const BigInt diff = p.lambda - inv[0].lambda;
    if (k0 == 0 ? diff != 0 : diff % k0 != 0) {
      return false;
    }
  }
  return true;
}

RigidityExperiment rigidity_experiment(const SearchSpec& spec) {
  RigidityExperiment report;
  report.spec = spec;
  report.search = enumerate(spec);
  const auto& survivors = report.search.survivors;

  for (std::size_t s = 0; s < survivors.size(); ++s) {
    const FixedPointData& data = survivors[s];

    const auto bundle = try_derive_bundle_weights(data);
    const bool hypotheses = bundle && check_quasi_ample(data, *bundle);
    if (hypotheses) {
      const auto verdict = hattori_verdict(data);
      if (verdict.passes) {
        report.matches.push_back({s, verdict.normalized_a});
      } else {
        report.counterexamples.push_back(s);
      }
    } else {
      report.fails_hypotheses.push_back(s);
    }

    std::map<BigInt, std::size_t> lambda_counts;
    for (const auto& p : derive_invariants(data)) {
      ++lambda_counts[p.lambda];
    }
    const bool distinct = lambda_counts.size() == data.size();
    const bool all_shared = std::all_of(lambda_counts.begin(), lambda_counts.end(),
                                        [](const auto& kv) { return kv.second >= 2; });
    if (distinct) {
      ++report.lambda_distinct;
    } else if (all_shared) {
      ++report.lambda_all_shared;
    } else {
      ++report.lambda_mixed;
    }
    if (c1_power(data) != 0 &&
        distinctness_analysis(data).verdict != DistinctnessReport::Verdict::distinct) {
      report.distinctness_violations.push_back(s);
    }
  }

  auto& hunt = report.half_chern;
  if ((spec.n + 1) % 2 != 0) {
    hunt.reason = "(n+1)/2 is not an integer";
    return report;
  }
  hunt.applicable = true;
  const std::int64_t k0 = (spec.n + 1) / 2;
  hunt.k0 = k0;
  hunt.parity_admissible = spec.n % 4 == 3;
  if (!hunt.parity_admissible) {
    hunt.reason = "(n+1)/2 and n+1 differ modulo 2; listed for completeness";
  }
  for (std::size_t s = 0; s < survivors.size(); ++s) {
    const FixedPointData& data = survivors[s];
    if (!condition_c_satisfiable(data, k0)) {
      continue;
    }
    const auto inv = derive_invariants(data);
    std::vector<Weight> a;
    for (const auto& p : inv) {
      a.push_back(to_int64((p.lambda - inv[0].lambda) / k0));
    }
    if (check_quasi_ample(data, BundleWeights(std::move(a)))) {
      hunt.candidates.push_back(s);
    }
  }
  return report;
}

}  // namespace fpkit
