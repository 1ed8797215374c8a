#include <doctest.h>

#include <random>

#include "fpkit/errors.hpp"
#include "fpkit/interchange.hpp"
#include "fpkit/models.hpp"
#include "oracles.hpp"

using namespace fpkit;

TEST_CASE("canonical serialization layout") {
  const auto model = linear_pn({0, 1});
  const std::string expected =
      "{\n"
      "  \"n\": 1,\n"
      "  \"fixed_points\": [\n"
      "    {\n"
      "      \"label\": \"P1\",\n"
      "      \"weights\": [\n"
      "        -1\n"
      "      ]\n"
      "    },\n"
      "    {\n"
      "      \"label\": \"P2\",\n"
      "      \"weights\": [\n"
      "        1\n"
      "      ]\n"
      "    }\n"
      "  ],\n"
      "  \"bundle_weights\": [\n"
      "    0,\n"
      "    1\n"
      "  ]\n"
      "}\n";
  CHECK(serialize(model.data, &model.bundle) == expected);
  CHECK(serialize_compact(model.data) ==
        R"({"n":1,"fixed_points":[{"label":"P1","weights":[-1]},{"label":"P2","weights":[1]}]})");
}

TEST_CASE("canonicalize sorts weights and orders keys") {
  const std::string messy =
      R"({"fixed_points":[{"weights":[3,-2],"label":"X"},{"label":"Y","weights":[2,-3]}],"n":2})";
  const auto canonical = canonicalize(messy);
  CHECK(canonical.find("\"n\": 2") < canonical.find("\"fixed_points\""));
  const auto reloaded = load_package(canonical);
  CHECK(reloaded.data[0].weights == std::vector<Weight>{-2, 3});
  CHECK(reloaded.data[0].label == "X");
  CHECK(canonicalize(canonical) == canonical);
}

TEST_CASE("round trip: serialize(validate(x)) == canonicalize(x)") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<Weight> weight(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = dim(rng);
    std::string text = "{\"n\": " + std::to_string(n) + ", \"fixed_points\": [";
    for (int p = 0; p <= n; ++p) {
      text += std::string(p ? "," : "") + "{\"label\": \"Q" + std::to_string(p) + "\", \"weights\": [";
      for (int k = 0; k < n; ++k) {
        Weight w = 0;
        while (w == 0) {
          w = weight(rng);
        }
        text += std::string(k ? "," : "") + std::to_string(w);
      }
      text += "]}";
    }
    text += "]}";
    const auto package = load_package(text);
    CHECK(serialize(package) == canonicalize(text));
    CHECK(load_package(serialize(package)).data == package.data);
  }
}

TEST_CASE("parse errors are validation errors") {
  CHECK_THROWS_AS(load_package("not json"), ValidationError);
  CHECK_THROWS_AS(load_package("[]"), ValidationError);
  CHECK_THROWS_AS(load_package(R"({"fixed_points": []})"), ValidationError);
  CHECK_THROWS_AS(load_package(R"({"n": 1.5, "fixed_points": []})"), ValidationError);
  CHECK_THROWS_AS(load_package(R"({"n": 1, "fixed_points": [{"label": "P", "weights": [0.5]}]})"),
                  ValidationError);
  CHECK_THROWS_AS(load_package(R"({"n": 1, "fixed_points": [{"label": "P", "weights": [1]}], "x": 0})"),
                  ValidationError);
  CHECK_THROWS_AS(load_package(R"({"n": 1, "fixed_points": [{"weights": [1]}]})"), ValidationError);
  CHECK_THROWS_AS(load_package(R"({"n": 1, "fixed_points": [{"label": "P", "weights": [0]}]})"),
                  ValidationError);
  CHECK_THROWS_AS(load_package_file("/nonexistent/fpkit.json"), ValidationError);
}

TEST_CASE("bundle weights survive a round trip") {
  const auto text =
      R"({"n": 1, "fixed_points": [{"label": "A", "weights": [-2]}, {"label": "B", "weights": [2]}],)"
      R"( "bundle_weights": [5, 7]})";
  const auto package = load_package(text);
  REQUIRE(package.bundle.has_value());
  CHECK(package.bundle->values() == std::vector<Weight>{5, 7});
  CHECK(load_package(serialize(package)).bundle == package.bundle);
}
