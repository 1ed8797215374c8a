#pragma once

#include <json.hpp>

#include "fpkit/fixed_point_data.hpp"
#include "fpkit/hattori.hpp"
#include "fpkit/laurent_poly.hpp"
#include "fpkit/models.hpp"
#include "fpkit/search.hpp"

namespace fpkit {

// Machine-readable report documents. Every document carries
// "schema_version": "1"; rationals are strings "p/q" (or "p" when integral)
// so no precision is lost.
namespace reports {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json rational(const Rational& value);
Json integer(const BigInt& value);
Json polynomial(const LaurentPoly& p, std::string_view variable = "y");

// Betti numbers, residue table, c_1^n, chi_y, K-coefficients, c_1 c_{n-1},
// all Chern numbers and, when bundle weights are present, the line bundle
// checks.
Json data_report(const DataPackage& package);

Json verdict(const FixedPointData& data, const RigidityVerdict& v);
Json distinctness(const DistinctnessReport& r);
Json pair(const FixedPointData& m, const FixedPointData& d, const PairRestrictionReport& r);
Json first_chern(int n, const std::vector<FirstChernCandidate>& candidates);
Json experiment(const RigidityExperiment& e);

}  // namespace reports
}  // namespace fpkit
