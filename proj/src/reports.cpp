#include "fpkit/reports.hpp"

#include <limits>

#include "fpkit/errors.hpp"
#include "fpkit/localization.hpp"

namespace fpkit::reports {

namespace {

// Chern number tables grow with the partition count of n.
constexpr int kMaxChernTableDimension = 12;

Json weights_json(const std::vector<Weight>& w) { return Json(w); }

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) {
    out.push_back(rational(v));
  }
  return out;
}

Json header() {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  return doc;
}

}  // namespace

Json rational(const Rational& value) { return to_string(value); }

Json integer(const BigInt& value) {
  if (value <= std::numeric_limits<std::int64_t>::max() && value >= std::numeric_limits<std::int64_t>::min()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Json polynomial(const LaurentPoly& p, std::string_view variable) {
  Json coefficients = Json::object();
  for (const auto& [exponent, c] : p.terms()) {
    coefficients[std::to_string(exponent)] = integer(c);
  }
  Json out;
  out["coefficients"] = std::move(coefficients);
  out["string"] = p.to_string(variable);
  return out;
}

Json data_report(const DataPackage& package) {
  const FixedPointData& data = package.data;
  const int n = data.n();
  Json doc = header();
  doc["n"] = n;
  doc["m"] = data.size();
  doc["betti"] = betti_numbers(data);
  doc["projective_profile"] = projective_profile(data);

  Json points = Json::array();
  const auto inv = derive_invariants(data);
  for (std::size_t i = 0; i < data.size(); ++i) {
    Json p;
    p["label"] = data[i].label;
    p["weights"] = weights_json(data[i].weights);
    p["lambda"] = integer(inv[i].lambda);
    p["e"] = integer(inv[i].e);
    p["d"] = inv[i].d;
    points.push_back(std::move(p));
  }
  doc["points"] = std::move(points);

  std::vector<Rational> sums;
  for (int r = 0; r <= n; ++r) {
    sums.push_back(residue_sum(data, static_cast<unsigned>(r)));
  }
  doc["residue_sums"] = rationals(sums);
  const bool constraints = residue_constraints_hold(data);
  doc["residue_constraints_hold"] = constraints;
  doc["c1_power"] = rational(sums.back());

  const LaurentPoly chi = chi_y_from_data(data);
  doc["chi_y"] = polynomial(chi);
  const KCoefficients k = k_coefficients(chi, n);
  doc["k_coefficients"] = rationals(k.values);
  try {
    doc["c1cn1"] = rational(c1cn1_from_k2(k[2], BigInt(data.size()), n));
  } catch (const InconsistentDataError& e) {
    doc["c1cn1"] = nullptr;
    doc["c1cn1_error"] = e.what();
  }

  if (n <= kMaxChernTableDimension) {
    Json chern = Json::object();
    for (const auto& mono : all_chern_monomials(n)) {
      chern[mono.to_string()] = rational(chern_monomial(data, mono));
    }
    doc["chern_numbers"] = std::move(chern);
  }

  if (constraints) {
    doc["distinctness"] = distinctness(distinctness_analysis(data));
  }

  if (package.bundle) {
    const BundleWeights& bundle = *package.bundle;
    Json b;
    b["weights"] = weights_json(bundle.values());
    b["c1n"] = rational(line_bundle_power(data, bundle));
    b["pairwise_distinct"] = bundle.pairwise_distinct();
    b["quasi_ample"] = check_quasi_ample(data, bundle);
    const auto cert = check_condition_c(data, bundle, BigInt(n + 1));
    Json c;
    c["k0"] = n + 1;
    c["holds"] = cert.holds();
    if (cert.holds()) {
      c["a"] = integer(cert.certificate->a);
    } else {
      c["violating_index"] = *cert.violating_index;
    }
    b["condition_c"] = std::move(c);
    doc["bundle"] = std::move(b);
  }
  return doc;
}

Json verdict(const FixedPointData& data, const RigidityVerdict& v) {
  Json doc = header();
  doc["passes"] = v.passes;
  doc["n"] = data.n();
  doc["normalized_a"] = weights_json(v.normalized_a);

  Json hyp;
  hyp["bundle_derivable"] = v.bundle_derivable;
  hyp["bundle_weights"] = v.bundle ? weights_json(v.bundle->values()) : Json(nullptr);
  hyp["condition_c"] = v.condition_c;
  hyp["condition_c_k0"] = data.n() + 1;
  hyp["condition_c_a"] = v.condition_c_a ? integer(*v.condition_c_a) : Json(nullptr);
  hyp["quasi_ample"] = v.quasi_ample;
  hyp["c1n_bundle"] = v.bundle_power ? rational(*v.bundle_power) : Json(nullptr);
  doc["hypotheses"] = std::move(hyp);

  Json mismatches = Json::array();
  for (const auto& mm : v.mismatches) {
    Json entry;
    entry["index"] = mm.index;
    entry["label"] = mm.label;
    entry["expected"] = weights_json(mm.expected);
    entry["actual"] = weights_json(mm.actual);
    entry["missing"] = weights_json(mm.missing);
    entry["unexpected"] = weights_json(mm.unexpected);
    mismatches.push_back(std::move(entry));
  }
  doc["mismatches"] = std::move(mismatches);
  return doc;
}

Json distinctness(const DistinctnessReport& r) {
  Json doc;
  doc["verdict"] = r.verdict == DistinctnessReport::Verdict::distinct ? "distinct" : "grouped";
  Json lambdas = Json::array();
  for (const auto& l : r.lambda_values) {
    lambdas.push_back(integer(l));
  }
  doc["lambda_values"] = std::move(lambdas);
  doc["groups"] = r.groups;
  doc["group_mu"] = rationals(r.group_mu);
  doc["solved_mu"] = rationals(r.solved_mu);
  doc["vandermonde_applies"] = r.vandermonde_applies;
  doc["all_mu_zero"] = r.all_mu_zero;
  doc["every_group_shared"] = r.every_group_shared;
  doc["c1_power"] = rational(r.c1_power);
  return doc;
}

Json pair(const FixedPointData& m, const FixedPointData& d, const PairRestrictionReport& r) {
  Json doc = header();
  doc["passes"] = r.passes;
  doc["n"] = m.n();
  doc["excluded_point"] = r.excluded_point ? Json(m[*r.excluded_point].label) : Json(nullptr);
  Json points = Json::array();
  for (const auto& p : r.points) {
    Json entry;
    entry["label"] = p.label;
    entry["m_label"] = m[p.m_index].label;
    entry["d_weights"] = weights_json(d[p.d_index].weights);
    entry["m_weights"] = weights_json(m[p.m_index].weights);
    entry["submultiset"] = p.submultiset;
    entry["normal_weight"] = p.normal_weight ? Json(*p.normal_weight) : Json(nullptr);
    entry["offending"] = weights_json(p.offending);
    entry["weight_sum_exact"] = p.weight_sum_exact;
    entry["linear_normal_matches"] = p.linear_normal_matches ? Json(*p.linear_normal_matches) : Json(nullptr);
    points.push_back(std::move(entry));
  }
  doc["points"] = std::move(points);
  doc["d_condition_c"] = r.d_condition_c ? Json(*r.d_condition_c) : Json(nullptr);
  doc["d_condition_c_a"] = r.d_condition_c_a ? integer(*r.d_condition_c_a) : Json(nullptr);
  return doc;
}

Json first_chern(int n, const std::vector<FirstChernCandidate>& candidates) {
  Json doc = header();
  doc["n"] = n;
  Json rows = Json::array();
  Json admissible = Json::array();
  for (const auto& c : candidates) {
    Json row;
    row["c1"] = rational(c.value);
    row["admissible"] = c.admissible;
    row["reason"] = c.reason.empty() ? Json(nullptr) : Json(c.reason);
    rows.push_back(std::move(row));
    if (c.admissible) {
      admissible.push_back(rational(c.value));
    }
  }
  doc["candidates"] = std::move(rows);
  doc["admissible"] = std::move(admissible);
  return doc;
}

Json experiment(const RigidityExperiment& e) {
  Json doc = header();
  Json spec;
  spec["n"] = e.spec.n;
  spec["bound"] = e.spec.bound;
  spec["require_projective_profile"] = e.spec.require_projective_profile;
  spec["require_condition_c"] = e.spec.require_condition_c;
  spec["k0"] = e.spec.effective_k0();
  doc["spec"] = std::move(spec);

  Json stats;
  stats["raw_leaves"] = integer(e.search.stats.raw_leaves);
  stats["leaves_visited"] = e.search.stats.leaves_visited;
  stats["pruned_branches"] = e.search.stats.pruned_branches;
  stats["survivors"] = e.search.survivors.size();
  doc["stats"] = std::move(stats);

  const auto& survivors = e.search.survivors;
  auto survivor_json = [&](std::size_t s) {
    Json entry;
    entry["survivor"] = s;
    Json weights = Json::array();
    for (const auto& p : survivors[s].points()) {
      weights.push_back(p.weights);
    }
    entry["weights"] = std::move(weights);
    return entry;
  };

  Json classes;
  Json matches = Json::array();
  for (const auto& m : e.matches) {
    Json entry = survivor_json(m.survivor);
    entry["normalized_a"] = m.normalized_a;
    matches.push_back(std::move(entry));
  }
  Json counter = Json::array();
  for (std::size_t s : e.counterexamples) {
    counter.push_back(survivor_json(s));
  }
  classes["matches_linear_model"] = e.matches.size();
  classes["counterexamples"] = e.counterexamples.size();
  classes["fails_hypotheses"] = e.fails_hypotheses.size();
  doc["classes"] = std::move(classes);
  doc["counterexamples"] = std::move(counter);
  doc["matches"] = std::move(matches);

  Json lambda;
  lambda["distinct"] = e.lambda_distinct;
  lambda["all_shared"] = e.lambda_all_shared;
  lambda["mixed"] = e.lambda_mixed;
  Json violations = Json::array();
  for (std::size_t s : e.distinctness_violations) {
    violations.push_back(survivor_json(s));
  }
  lambda["distinctness_violations"] = std::move(violations);
  doc["lambda_profile"] = std::move(lambda);

  Json hunt;
  hunt["applicable"] = e.half_chern.applicable;
  hunt["k0"] = e.half_chern.k0 ? Json(*e.half_chern.k0) : Json(nullptr);
  hunt["parity_admissible"] = e.half_chern.parity_admissible;
  hunt["reason"] = e.half_chern.reason.empty() ? Json(nullptr) : Json(e.half_chern.reason);
  Json candidates = Json::array();
  for (std::size_t s : e.half_chern.candidates) {
    candidates.push_back(survivor_json(s));
  }
  hunt["candidates"] = std::move(candidates);
  doc["half_first_chern_hunt"] = std::move(hunt);
  return doc;
}

}  // namespace fpkit::reports
