// pybind11 surface: thin wrappers returning plain dicts/lists with exact
// values rendered as strings, so python callers never see rounded numbers.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "acbm/curvature.hpp"
#include "acbm/gradient.hpp"
#include "acbm/manifold.hpp"
#include "acbm/oracle.hpp"
#include "acbm/soliton.hpp"
#include "acbm/structure.hpp"

namespace py = pybind11;
using namespace acbm;

namespace {

py::list checks_to_py(const CheckList& checks) {
  py::list out;
  for (const auto& e : checks.entries) {
    py::dict d;
    d["name"] = e.name;
    d["pass"] = e.pass;
    d["detail"] = e.detail;
    out.append(d);
  }
  return out;
}

py::dict fit_to_py(const FitResult& fit) {
  py::dict d;
  d["status"] = std::string(to_string(fit.status));
  if (fit.exact()) {
    py::list coeffs;
    for (const auto& c : fit.coeffs) coeffs.append(c.to_string());
    d["coefficients"] = coeffs;
  } else {
    d["coefficients"] = py::none();
  }
  if (fit.witness) {
    py::dict w;
    w["i"] = fit.witness->i;
    w["j"] = fit.witness->j;
    w["monomial"] = fit.witness->monomial;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  if (fit.status == FitStatus::RankDeficient)
    d["solution_space_dim"] = fit.solution_space_dim;
  return d;
}

py::dict tensor_components(const FrameTensor& t) {
  py::dict out;
  for (int flat = 0; flat < t.size(); ++flat) {
    const ScalarExpr& c = t.flat_at(flat);
    if (c.is_zero()) continue;
    std::vector<int> idx = t.unflatten(flat);
    py::tuple key(idx.size());
    for (size_t k = 0; k < idx.size(); ++k) key[k] = idx[k] + 1;
    out[key] = c.to_string();
  }
  return out;
}

// Manifest plus lazily-computed curvature, the unit the python API works on.
class Manifold {
 public:
  explicit Manifold(ManifoldSpec spec) : spec_(std::move(spec)) {}

  static Manifold load(const std::string& path) { return Manifold(parse_manifest_file(path)); }
  static Manifold loads(const std::string& text) { return Manifold(parse_manifest(text)); }

  int dim() const { return spec_.dim; }
  int n() const { return spec_.n; }
  std::string serialize() const { return serialize_manifest(spec_); }

  py::list validate() const { return checks_to_py(validate_structure(spec_)); }
  bool is_valid() const { return validate_structure(spec_).all_pass(); }

  py::dict classify() {
    const CurvatureBundle& b = bundle();
    StructureReport structure = sasaki_like_test(spec_, b);
    FitResult einstein = einstein_like_fit(spec_, b);
    py::dict d;
    d["sasaki_like"] = structure.is_sasaki_like;
    d["einstein_like_fit"] = fit_to_py(einstein);
    d["einstein"] = einstein.exact() && fit_is_einstein(einstein);
    d["eta_einstein"] = einstein.exact() && fit_is_eta_einstein(einstein);
    d["tau"] = b.tau.to_string();
    d["tau_star"] = b.tau_star.to_string();
    d["tau_tilde"] = b.tau_tilde.to_string();
    return d;
  }

  py::dict curvature() {
    const CurvatureBundle& b = bundle();
    py::dict d;
    d["R"] = tensor_components(b.r04);
    d["ricci"] = tensor_components(b.ricci);
    d["ricci_star"] = tensor_components(b.ricci_star);
    d["tau"] = b.tau.to_string();
    d["tau_star"] = b.tau_star.to_string();
    d["tau_tilde"] = b.tau_tilde.to_string();
    return d;
  }

  py::list sections() {
    py::list out;
    for (const auto& s : special_sections_report(spec_, bundle())) {
      py::dict d;
      d["kind"] = s.kind;
      d["basis"] = s.basis;
      d["degenerate"] = s.degenerate;
      d["k"] = s.degenerate ? py::object(py::none()) : py::object(py::str(s.k.to_string()));
      out.append(d);
    }
    return out;
  }

  py::dict soliton_fit(const std::string& potential) {
    const CurvatureBundle& b = bundle();
    FrameTensor v = potential == "xi" && !spec_.vector_fields.count("xi")
                        ? spec_.xi_as_field()
                        : spec_.vector_field_tensor(potential);
    FitResult fit = acbm::soliton_fit(spec_, b, v);
    py::dict d = fit_to_py(fit);
    if (fit.status == FitStatus::ExactConstantFit &&
        sasaki_like_test(spec_, b).is_sasaki_like) {
      CheckList suite = theorem_3_suite(spec_, b, v, fit);
      d["identity_checks"] = checks_to_py(suite);
      d["identities_pass"] = suite.all_pass();
    }
    return d;
  }

  py::dict grad_soliton(const std::string& function) {
    auto it = spec_.functions.find(function);
    if (it == spec_.functions.end())
      throw py::value_error("unknown function: " + function);
    GradientSolitonReport report = gradient_soliton_check(spec_, bundle(), it->second);
    py::dict d;
    d["fit"] = fit_to_py(report.fit);
    d["grad"] = tensor_components(report.grad);
    d["hess"] = tensor_components(report.hess);
    d["laplacian"] = report.lap.to_string();
    d["checks"] = checks_to_py(report.checks);
    d["pass"] = report.checks.all_pass();
    return d;
  }

  py::dict check_theorems() {
    const CurvatureBundle& b = bundle();
    StructureReport structure = sasaki_like_test(spec_, b);
    CheckList checks = structure.checks;
    if (structure.is_sasaki_like) {
      checks.merge(sasaki_consequence_suite(spec_, b));
      FitResult einstein = einstein_like_fit(spec_, b);
      FitResult xi_fit = acbm::soliton_fit(spec_, b, spec_.xi_as_field());
      if (einstein.status == FitStatus::ExactConstantFit &&
          xi_fit.status == FitStatus::ExactConstantFit)
        checks.merge(theorem_2_1_bridge(einstein, xi_fit, spec_.n));
    }
    py::dict d;
    d["sasaki_like"] = structure.is_sasaki_like;
    d["checks"] = checks_to_py(checks);
    d["pass"] = checks.all_pass();
    return d;
  }

  py::dict oracle(int points, double step, double tolerance) {
    OracleResult r = oracle_compare(spec_, bundle(), oracle_default_points(spec_, points), step);
    py::dict d;
    d["points_checked"] = r.points_checked;
    d["max_abs_diff"] = r.max_abs_diff;
    d["pass"] = r.max_abs_diff <= tolerance;
    return d;
  }

 private:
  const CurvatureBundle& bundle() {
    if (!bundle_) bundle_ = curvature_bundle(spec_);
    return *bundle_;
  }

  ManifoldSpec spec_;
  std::optional<CurvatureBundle> bundle_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact curvature and Ricci-like soliton computations for almost contact "
            "B-metric manifolds presented by frames";

  py::class_<Manifold>(m, "Manifold")
      .def_static("load", &Manifold::load, py::arg("path"))
      .def_static("loads", &Manifold::loads, py::arg("json_text"))
      .def_property_readonly("dim", &Manifold::dim)
      .def_property_readonly("n", &Manifold::n)
      .def("serialize", &Manifold::serialize)
      .def("validate", &Manifold::validate)
      .def("is_valid", &Manifold::is_valid)
      .def("classify", &Manifold::classify)
      .def("curvature", &Manifold::curvature)
      .def("sections", &Manifold::sections)
      .def("soliton_fit", &Manifold::soliton_fit, py::arg("potential"))
      .def("grad_soliton", &Manifold::grad_soliton, py::arg("function"))
      .def("check_theorems", &Manifold::check_theorems)
      .def("oracle", &Manifold::oracle, py::arg("points") = 5,
           py::arg("step") = kOracleDefaultStep, py::arg("tolerance") = kOracleDefaultTolerance);
}
