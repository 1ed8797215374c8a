#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fpkit/errors.hpp"
#include "fpkit/hattori.hpp"
#include "fpkit/interchange.hpp"
#include "fpkit/localization.hpp"
#include "fpkit/models.hpp"
#include "fpkit/reports.hpp"
#include "fpkit/search.hpp"

namespace py = pybind11;
using namespace fpkit;

namespace {

py::object fraction(const Rational& value) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(value));
}

py::object integer(const BigInt& value) { return py::int_(py::str(value.str())); }

py::dict polynomial(const LaurentPoly& p) {
  py::dict out;
  for (const auto& [exponent, c] : p.terms()) {
    out[py::int_(exponent)] = integer(c);
  }
  return out;
}

// Reports cross the boundary as JSON text; the package decodes them.
std::string dump(const reports::Json& doc) { return doc.dump(); }

std::string model_document(const LinearModel& m) { return serialize(m.data, &m.bundle); }

FixedPointData data_of(const std::string& text) { return load_package(text).data; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact localization tools for circle actions with isolated fixed points";

  static py::exception<ValidationError> validation_error(m, "ValidationError", PyExc_ValueError);
  static py::exception<PreconditionError> precondition_error(m, "PreconditionError", PyExc_ValueError);
  static py::exception<InconsistentDataError> inconsistent_error(m, "InconsistentDataError",
                                                                 PyExc_ValueError);
  static py::exception<SearchSpaceTooLarge> too_large(m, "SearchSpaceTooLarge", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (const ValidationError& e) {
      validation_error(e.what());
    } catch (const PreconditionError& e) {
      precondition_error(e.what());
    } catch (const InconsistentDataError& e) {
      inconsistent_error(e.what());
    } catch (const SearchSpaceTooLarge& e) {
      too_large(e.what());
    }
  });

  m.def("canonicalize", [](const std::string& text) { return canonicalize(text); },
        "Validate an interchange document and return its canonical form.", py::arg("document"));

  m.def("linear_pn", [](const std::vector<Weight>& a) { return model_document(linear_pn(a)); },
        "Linear model on P^n for weights a_1..a_{n+1}, as a document.", py::arg("a"));
  m.def("hyperplane_model",
        [](const std::vector<Weight>& a) { return model_document(hyperplane_model(a)); },
        "Invariant hyperplane model for a_1..a_n, as a document.", py::arg("a"));

  m.def("residue_sum", [](const std::string& doc, unsigned r) { return fraction(residue_sum(data_of(doc), r)); },
        py::arg("document"), py::arg("r"));
  m.def("residue_constraints_hold",
        [](const std::string& doc) { return residue_constraints_hold(data_of(doc)); }, py::arg("document"));
  m.def("c1_power", [](const std::string& doc) { return fraction(c1_power(data_of(doc))); },
        py::arg("document"));
  m.def(
      "chern_monomial",
      [](const std::string& doc, std::vector<int> indices) {
        const auto data = data_of(doc);
        return fraction(chern_monomial(data, ChernMonomial(data.n(), std::move(indices))));
      },
      py::arg("document"), py::arg("indices"));
  m.def(
      "line_bundle_power",
      [](const std::string& doc, std::optional<std::vector<Weight>> bundle) {
        const auto package = load_package(doc);
        if (!bundle && !package.bundle) {
          throw PreconditionError("no bundle weights given or stored in the document");
        }
        const BundleWeights bw = bundle ? BundleWeights(*bundle) : *package.bundle;
        check_aligned(package.data, bw);
        return fraction(line_bundle_power(package.data, bw));
      },
      py::arg("document"), py::arg("bundle_weights") = py::none());

  m.def("chi_y_from_data", [](const std::string& doc) { return polynomial(chi_y_from_data(data_of(doc))); },
        "chi_y as {exponent: coefficient}.", py::arg("document"));
  m.def("chi_y_hrr_projective", [](int n) { return polynomial(chi_y_hrr_projective(n)); }, py::arg("n"));
  m.def(
      "k_coefficients",
      [](const std::string& doc) {
        const auto data = data_of(doc);
        py::list out;
        for (const auto& k : k_coefficients(chi_y_from_data(data), data.n()).values) {
          out.append(fraction(k));
        }
        return out;
      },
      py::arg("document"));

  m.def("_report", [](const std::string& doc) { return dump(reports::data_report(load_package(doc))); });
  m.def("_hattori", [](const std::string& doc) {
    const auto data = data_of(doc);
    return dump(reports::verdict(data, hattori_verdict(data)));
  });
  m.def("_distinctness", [](const std::string& doc) {
    return dump(reports::distinctness(distinctness_analysis(data_of(doc))));
  });
  m.def("_first_chern", [](int n) { return dump(reports::first_chern(n, first_chern_candidates(n))); });
  m.def("_pair", [](const std::string& m_doc, const std::string& d_doc,
                    std::optional<std::vector<std::size_t>> embedding) {
    const auto mp = load_package(m_doc);
    const auto dp = load_package(d_doc);
    const auto e = embedding ? *embedding : embedding_by_label(mp.data, dp.data);
    const auto r = pair_restriction_check(mp.data, dp.data, e, mp.bundle ? &*mp.bundle : nullptr);
    return dump(reports::pair(mp.data, dp.data, r));
  });
  m.def(
      "_search",
      [](int n, int bound, bool require_profile, bool require_condition_c, std::optional<std::int64_t> k0,
         std::uint64_t max_leaves, unsigned threads) {
        SearchSpec spec;
        spec.n = n;
        spec.bound = bound;
        spec.require_projective_profile = require_profile;
        spec.require_condition_c = require_condition_c;
        spec.k0 = k0;
        spec.max_leaves = max_leaves;
        spec.threads = threads;
        RigidityExperiment e;
        {
          py::gil_scoped_release release;
          e = rigidity_experiment(spec);
        }
        std::vector<std::string> survivors;
        for (const auto& s : e.search.survivors) {
          survivors.push_back(serialize(s));
        }
        return py::make_tuple(dump(reports::experiment(e)), survivors);
      });
  m.attr("DEFAULT_MAX_LEAVES") = kDefaultMaxLeaves;
}
