#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "fpkit/cli.hpp"
#include "fpkit/interchange.hpp"
#include "fpkit/models.hpp"

using namespace fpkit;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fpkit");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("fpkit_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& content) const {
    const auto file = path_ / name;
    std::ofstream(file) << content;
    return file.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("validate echoes the canonical form") {
  TempDir dir;
  const auto model = linear_pn({0, 1, 3});
  const auto file = dir.write("m.json", serialize_compact(model.data, &model.bundle));
  const auto r = run_cli({"validate", file});
  CHECK(r.code == 0);
  CHECK(r.out == serialize(model.data, &model.bundle));
  CHECK(r.err.empty());
}

TEST_CASE("validate rejects invalid input with exit 2") {
  TempDir dir;
  const auto zero = dir.write("zero.json", R"({"n": 2, "fixed_points": [{"label": "Q", "weights": [0, 1]}]})");
  auto r = run_cli({"validate", zero});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("Q") != std::string::npos);
  CHECK(r.err.find("index 0") != std::string::npos);

  const auto missing = dir.write("missing.json", R"({"fixed_points": []})");
  CHECK(run_cli({"validate", missing}).code == 2);
  CHECK(run_cli({"validate", dir.path("absent.json")}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
}

TEST_CASE("report on the (0,1,3) model") {
  TempDir dir;
  const auto file = dir.write("m.json", serialize(linear_pn({0, 1, 3}).data));
  const auto r = run_cli({"report", file});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["c1_power"] == "9");
  CHECK(doc["chi_y"]["string"] == "1 - y + y^2");
  CHECK(doc["c1cn1"] == "9");
  CHECK(doc["betti"] == json::array({1, 1, 1}));
}

TEST_CASE("report on inconsistent data still succeeds") {
  TempDir dir;
  const auto file = dir.write("bad.json", R"({"n": 1, "fixed_points": [{"label": "A", "weights": [1]},)"
                                          R"({"label": "B", "weights": [1]}]})");
  const auto r = run_cli({"report", file});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["residue_sums"][0] == "2");
  CHECK(doc["residue_constraints_hold"] == false);
}

TEST_CASE("hattori exit codes") {
  TempDir dir;
  const auto good = dir.write("good.json", serialize(linear_pn({0, 1, 3}).data));
  const auto bad = dir.write("bad.json", R"({"n": 2, "fixed_points": [{"label": "P1", "weights": [-1, -3]},)"
                                         R"({"label": "P2", "weights": [1, -2]},)"
                                         R"({"label": "P3", "weights": [3, 1]}]})");
  const auto pass = run_cli({"hattori", good});
  CHECK(pass.code == 0);
  CHECK(json::parse(pass.out)["passes"] == true);
  const auto fail = run_cli({"hattori", bad});
  CHECK(fail.code == 1);
  CHECK(json::parse(fail.out)["passes"] == false);
}

TEST_CASE("model command") {
  const auto r = run_cli({"model", "--n", "2", "--weights", "0,1,3"});
  REQUIRE(r.code == 0);
  const auto model = linear_pn({0, 1, 3});
  CHECK(r.out == serialize(model.data, &model.bundle));

  const auto h = run_cli({"model", "--weights", "0,1,3", "--hyperplane"});
  REQUIRE(h.code == 0);
  CHECK(load_package(h.out).data == hyperplane_model({0, 1}).data);

  CHECK(run_cli({"model", "--n", "3", "--weights", "0,1,3"}).code == 2);
  CHECK(run_cli({"model", "--weights", "0,0,3"}).code == 2);
  CHECK(run_cli({"model", "--weights", "0,x"}).code == 2);
}

TEST_CASE("pair command") {
  TempDir dir;
  const auto m = linear_pn({0, 1, 3});
  const auto d = hyperplane_model({0, 1});
  const auto m_file = dir.write("m.json", serialize(m.data, &m.bundle));
  const auto d_file = dir.write("d.json", serialize(d.data));
  const auto r = run_cli({"pair", m_file, d_file});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["passes"] == true);
  CHECK(run_cli({"pair", m_file, d_file, "--embedding", "P1=P2,P2=P1"}).code == 1);
  CHECK(run_cli({"pair", m_file, d_file, "--embedding", "P1=P9"}).code == 2);
  CHECK(run_cli({"pair", m_file, m_file}).code == 2);
}

TEST_CASE("search command and size guard") {
  TempDir dir;
  const auto out_file = dir.path("survivors.ndjson");
  const auto r = run_cli({"search", "--n", "1", "--bound", "3", "--output", out_file});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["classes"]["counterexamples"] == 0);
  std::ifstream in(out_file);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    CHECK(load_package(line).data.size() == 2);
    ++lines;
  }
  CHECK(lines == 3);

  ::setenv("FPKIT_MAX_LEAVES", "5", 1);
  CHECK(run_cli({"search", "--n", "1", "--bound", "3"}).code == 2);
  ::setenv("FPKIT_MAX_LEAVES", "many", 1);
  CHECK(run_cli({"search", "--n", "1", "--bound", "3"}).code == 2);
  ::unsetenv("FPKIT_MAX_LEAVES");
  CHECK(run_cli({"search", "--n", "1", "--bound", "3"}).code == 0);
}

TEST_CASE("c1candidates command") {
  const auto r = run_cli({"c1candidates", "--n", "7"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["admissible"] == json::array({"8", "4"}));
  CHECK(run_cli({"c1candidates", "--n", "0"}).code == 2);
}

TEST_CASE("--output redirects the document") {
  TempDir dir;
  const auto file = dir.path("c1.json");
  const auto r = run_cli({"c1candidates", "--n", "3", "--output", file});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(file);
  const auto doc = json::parse(in);
  CHECK(doc["admissible"] == json::array({"4", "2"}));
}
