#include "fpkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fpkit/errors.hpp"
#include "fpkit/hattori.hpp"
#include "fpkit/interchange.hpp"
#include "fpkit/models.hpp"
#include "fpkit/reports.hpp"
#include "fpkit/search.hpp"

namespace fpkit::cli {

namespace {

struct Options {
  std::string path;
  std::string path_d;
  std::string output;
  std::string embedding;
  std::optional<int> n;
  std::vector<Weight> weights;
  bool hyperplane = false;
  int bound = 0;
  bool require_profile = false;
  bool require_condition_c = false;
  std::optional<std::int64_t> k0;
  unsigned threads = 0;
};

void emit(const std::string& text, const Options& opt, std::ostream& out) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) {
    throw ValidationError("cannot write '" + opt.output + "'");
  }
  file << text;
}

std::string document(const reports::Json& doc) { return doc.dump(2) + "\n"; }

std::vector<std::size_t> parse_embedding(const std::string& spec, const FixedPointData& m,
                                         const FixedPointData& d) {
  if (spec.empty()) {
    return embedding_by_label(m, d);
  }
  std::vector<std::optional<std::size_t>> mapping(d.size());
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("embedding entry '" + item + "' must look like D_LABEL=M_LABEL");
    }
    const auto from = d.index_of(item.substr(0, eq));
    const auto to = m.index_of(item.substr(eq + 1));
    if (!from || !to) {
      throw ValidationError("embedding entry '" + item + "' names an unknown fixed point");
    }
    mapping[*from] = *to;
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < mapping.size(); ++k) {
    if (!mapping[k]) {
      throw ValidationError("embedding does not map fixed point '" + d[k].label + "'");
    }
    out.push_back(*mapping[k]);
  }
  return out;
}

std::uint64_t max_leaves_from_env() {
  const char* raw = std::getenv("FPKIT_MAX_LEAVES");
  if (raw == nullptr || *raw == '\0') {
    return kDefaultMaxLeaves;
  }
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (used != std::string(raw).size()) {
      throw std::invalid_argument("trailing characters");
    }
    return value;
  } catch (const std::exception&) {
    throw ValidationError(std::string("FPKIT_MAX_LEAVES must be a nonnegative integer, got '") + raw + "'");
  }
}

int cmd_validate(const Options& opt, std::ostream& out) {
  emit(serialize(load_package_file(opt.path)), opt, out);
  return kSuccess;
}

int cmd_report(const Options& opt, std::ostream& out) {
  emit(document(reports::data_report(load_package_file(opt.path))), opt, out);
  return kSuccess;
}

int cmd_hattori(const Options& opt, std::ostream& out) {
  const auto package = load_package_file(opt.path);
  const auto v = hattori_verdict(package.data);
  emit(document(reports::verdict(package.data, v)), opt, out);
  return v.passes ? kSuccess : kSemanticFailure;
}

int cmd_model(const Options& opt, std::ostream& out) {
  const std::size_t expected = opt.n ? static_cast<std::size_t>(*opt.n) + 1 : opt.weights.size();
  if (opt.weights.size() != expected) {
    throw ValidationError("--n " + std::to_string(*opt.n) + " needs " + std::to_string(expected) +
                          " weights, got " + std::to_string(opt.weights.size()));
  }
  LinearModel model = [&] {
    if (opt.hyperplane) {
      // The hyperplane z_{n+1} = 0 keeps the first n fixed points.
      std::vector<Weight> head(opt.weights.begin(), opt.weights.end() - 1);
      return hyperplane_model(head);
    }
    return linear_pn(opt.weights);
  }();
  emit(serialize(model.data, &model.bundle), opt, out);
  return kSuccess;
}

int cmd_pair(const Options& opt, std::ostream& out) {
  const auto m = load_package_file(opt.path);
  const auto d = load_package_file(opt.path_d);
  const auto embedding = parse_embedding(opt.embedding, m.data, d.data);
  const auto report =
      pair_restriction_check(m.data, d.data, embedding, m.bundle ? &*m.bundle : nullptr);
  emit(document(reports::pair(m.data, d.data, report)), opt, out);
  return report.passes ? kSuccess : kSemanticFailure;
}

int cmd_search(const Options& opt, std::ostream& out) {
  SearchSpec spec;
  spec.n = opt.n.value_or(0);
  spec.bound = opt.bound;
  spec.require_projective_profile = opt.require_profile;
  spec.require_condition_c = opt.require_condition_c;
  spec.k0 = opt.k0;
  spec.threads = opt.threads;
  spec.max_leaves = max_leaves_from_env();

  const auto experiment = rigidity_experiment(spec);
  if (!opt.output.empty()) {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) {
      throw ValidationError("cannot write '" + opt.output + "'");
    }
    for (const auto& s : experiment.search.survivors) {
      file << serialize_compact(s) << "\n";
    }
  }
  out << document(reports::experiment(experiment));
  return experiment.counterexamples.empty() ? kSuccess : kSemanticFailure;
}

int cmd_c1candidates(const Options& opt, std::ostream& out) {
  const int n = opt.n.value_or(0);
  emit(document(reports::first_chern(n, first_chern_candidates(n))), opt, out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed-point data toolkit for circle actions with isolated fixed points", "fpkit"};
  app.require_subcommand(1);
  Options opt;

  auto* validate = app.add_subcommand("validate", "Validate a data file and echo its canonical form");
  validate->add_option("path", opt.path, "Interchange document")->required();
  validate->add_option("--output", opt.output, "Write to this file instead of stdout");

  auto* report = app.add_subcommand("report", "Betti numbers, residue sums, chi_y and Chern numbers");
  report->add_option("path", opt.path, "Interchange document")->required();
  report->add_option("--output", opt.output, "Write to this file instead of stdout");

  auto* hattori = app.add_subcommand("hattori", "Check the rigidity hypotheses and conclusion");
  hattori->add_option("path", opt.path, "Interchange document")->required();
  hattori->add_option("--output", opt.output, "Write to this file instead of stdout");

  auto* model = app.add_subcommand("model", "Emit the linear P^n model (or its hyperplane)");
  model->add_option("--n", opt.n, "Complex dimension of P^n");
  model->add_option("--weights", opt.weights, "Pairwise distinct a_1,...,a_{n+1}")
      ->required()
      ->delimiter(',')
      ->allow_extra_args(false);
  model->add_flag("--hyperplane", opt.hyperplane, "Emit the invariant hyperplane z_{n+1} = 0");
  model->add_option("--output", opt.output, "Write to this file instead of stdout");

  auto* pair = app.add_subcommand("pair", "Check restriction of weights from M to a hypersurface D");
  pair->add_option("m_path", opt.path, "Data of M")->required();
  pair->add_option("d_path", opt.path_d, "Data of D")->required();
  pair->add_option("--embedding", opt.embedding, "D_LABEL=M_LABEL,... (default: match labels)");
  pair->add_option("--output", opt.output, "Write to this file instead of stdout");

  auto* search = app.add_subcommand("search", "Exhaustive rigidity experiment over small weights");
  search->add_option("--n", opt.n, "Complex dimension")->required();
  search->add_option("--bound", opt.bound, "Weights range over [-B, B] without 0")->required();
  search->add_flag("--require-profile", opt.require_profile, "Keep only Betti numbers of P^n");
  search->add_flag("--require-condition-c", opt.require_condition_c, "Keep only Condition C data");
  search->add_option("--k0", opt.k0, "Condition C multiplier (default n+1)");
  search->add_option("--threads", opt.threads, "Worker threads (0 = hardware)");
  search->add_option("--output", opt.output, "Write survivors as newline-delimited documents");

  auto* c1 = app.add_subcommand("c1candidates", "First Chern class candidates for homotopy P^n");
  c1->add_option("--n", opt.n, "Complex dimension")->required();
  c1->add_option("--output", opt.output, "Write to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "fpkit: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt, out);
    if (report->parsed()) return cmd_report(opt, out);
    if (hattori->parsed()) return cmd_hattori(opt, out);
    if (model->parsed()) return cmd_model(opt, out);
    if (pair->parsed()) return cmd_pair(opt, out);
    if (search->parsed()) return cmd_search(opt, out);
    if (c1->parsed()) return cmd_c1candidates(opt, out);
  } catch (const ValidationError& e) {
    err << "fpkit: invalid input: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "fpkit: " << e.what() << "\n";
  } catch (const SearchSpaceTooLarge& e) {
    err << "fpkit: " << e.what() << " (raise FPKIT_MAX_LEAVES to override)\n";
  } catch (const std::exception& e) {
    err << "fpkit: error: " << e.what() << "\n";
  }
  return kInvalidInput;
}

}  // namespace fpkit::cli
