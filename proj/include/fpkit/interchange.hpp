#pragma once

#include <string>
#include <string_view>

#include "fpkit/fixed_point_data.hpp"

namespace fpkit {

// Interchange format, one UTF-8 JSON document:
//
//   { "n": <int>,
//     "fixed_points": [ { "label": <string>, "weights": [<int>, ...] }, ... ],
//     "bundle_weights": [<int>, ...] }            (optional)
//
// Canonical form: keys in the order above, weights ascending, two-space
// indentation, terminated by a newline.

// Structural parse only; throws ValidationError on malformed input.
RawDocument parse_document(std::string_view json_text);

// parse_document followed by validate().
DataPackage load_package(std::string_view json_text);
DataPackage load_package_file(const std::string& path);

std::string serialize(const FixedPointData& data, const BundleWeights* bundle = nullptr);
std::string serialize(const DataPackage& package);

// Same content as serialize() on a single line, for newline-delimited streams.
std::string serialize_compact(const FixedPointData& data, const BundleWeights* bundle = nullptr);

// serialize(load_package(json_text)).
std::string canonicalize(std::string_view json_text);

}  // namespace fpkit
