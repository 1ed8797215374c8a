#include "fpkit/interchange.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "fpkit/errors.hpp"

namespace fpkit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Weight as_weight(const json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    throw ValidationError(where + ": expected an integer, got " + value.dump());
  }
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Weight>::max())) {
    throw ValidationError(where + ": integer out of range");
  }
  return value.get<Weight>();
}

std::vector<Weight> as_weight_list(const json& value, const std::string& where) {
  if (!value.is_array()) {
    throw ValidationError(where + ": expected an array of integers");
  }
  std::vector<Weight> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(as_weight(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ordered_json to_document(const FixedPointData& data, const BundleWeights* bundle) {
  ordered_json doc;
  doc["n"] = data.n();
  ordered_json points = ordered_json::array();
  for (const auto& point : data.points()) {
    ordered_json entry;
    entry["label"] = point.label;
    entry["weights"] = point.weights;
    points.push_back(std::move(entry));
  }
  doc["fixed_points"] = std::move(points);
  if (bundle != nullptr) {
    check_aligned(data, *bundle);
    doc["bundle_weights"] = bundle->values();
  }
  return doc;
}

}  // namespace

RawDocument parse_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ValidationError("document must be a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "fixed_points" && key != "bundle_weights") {
      throw ValidationError("unknown field \"" + key + "\"");
    }
  }
  RawDocument raw;
  if (!doc.contains("n")) {
    throw ValidationError("missing field \"n\"");
  }
  const Weight n = as_weight(doc["n"], "field \"n\"");
  if (n < 1 || n > std::numeric_limits<int>::max()) {
    throw ValidationError("field \"n\": dimension must be >= 1, got " + std::to_string(n));
  }
  raw.n = static_cast<int>(n);

  if (!doc.contains("fixed_points")) {
    throw ValidationError("missing field \"fixed_points\"");
  }
  const json& points = doc["fixed_points"];
  if (!points.is_array()) {
    throw ValidationError("field \"fixed_points\" must be an array");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string where = "fixed_points[" + std::to_string(i) + "]";
    const json& p = points[i];
    if (!p.is_object()) {
      throw ValidationError(where + ": expected an object");
    }
    for (const auto& [key, value] : p.items()) {
      if (key != "label" && key != "weights") {
        throw ValidationError(where + ": unknown field \"" + key + "\"");
      }
    }
    if (!p.contains("label") || !p["label"].is_string()) {
      throw ValidationError(where + ": missing string field \"label\"");
    }
    if (!p.contains("weights")) {
      throw ValidationError(where + ": missing field \"weights\"");
    }
    raw.fixed_points.push_back(
        {p["label"].get<std::string>(), as_weight_list(p["weights"], where + ".weights")});
  }
  if (doc.contains("bundle_weights")) {
    raw.bundle_weights = as_weight_list(doc["bundle_weights"], "bundle_weights");
  }
  return raw;
}

DataPackage load_package(std::string_view json_text) { return validate(parse_document(json_text)); }

DataPackage load_package_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_package(buffer.str());
}

std::string serialize(const FixedPointData& data, const BundleWeights* bundle) {
  return to_document(data, bundle).dump(2) + "\n";
}

std::string serialize(const DataPackage& package) {
  return serialize(package.data, package.bundle ? &*package.bundle : nullptr);
}

std::string serialize_compact(const FixedPointData& data, const BundleWeights* bundle) {
  return to_document(data, bundle).dump();
}

std::string canonicalize(std::string_view json_text) { return serialize(load_package(json_text)); }

}  // namespace fpkit
