// acbmgeo: exact curvature and soliton reports for almost contact B-metric
// manifolds presented by frame manifests.
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "acbm/curvature.hpp"
#include "acbm/expr_parser.hpp"
#include "acbm/gradient.hpp"
#include "acbm/manifold.hpp"
#include "acbm/oracle.hpp"
#include "acbm/soliton.hpp"
#include "acbm/structure.hpp"

namespace {

using namespace acbm;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

struct Context {
  std::string manifest_path;
  std::string report_format = "text";
  std::string numeric_point;
  std::string potential;
  std::string function;
};

struct RunReport {
  std::string command;
  std::string manifest;
  std::vector<std::pair<std::string, std::string>> values;
  CheckList checks;

  void add_value(std::string name, std::string value) {
    values.emplace_back(std::move(name), std::move(value));
  }
};

std::optional<std::vector<double>> parse_numeric_point(const Context& ctx,
                                                       const ManifoldSpec& spec) {
  if (ctx.numeric_point.empty()) return std::nullopt;
  std::vector<double> point;
  std::stringstream ss(ctx.numeric_point);
  std::string item;
  while (std::getline(ss, item, ',')) point.push_back(std::stod(item));
  if (static_cast<int>(point.size()) != spec.table->coordinate_count())
    throw std::invalid_argument("--numeric expects " +
                                std::to_string(spec.table->coordinate_count()) +
                                " comma-separated coordinates");
  return point;
}

void add_scalar(RunReport& report, const std::optional<std::vector<double>>& point,
                const std::string& name, const ScalarExpr& value) {
  report.add_value(name, value.to_string());
  if (point) {
    std::ostringstream out;
    out.precision(12);
    out << value.evaluate(*point);
    report.add_value(name + " @ numeric point", out.str());
  }
}

std::string triple_string(const FitResult& fit) {
  return "(" + fit.coeffs[0].to_string() + ", " + fit.coeffs[1].to_string() + ", " +
         fit.coeffs[2].to_string() + ")";
}

void add_fit(RunReport& report, const std::string& label, const FitResult& fit) {
  report.add_value(label + " status", to_string(fit.status));
  if (fit.exact()) {
    report.add_value(label + " coefficients", triple_string(fit));
    report.add_value(label + " residual", fit.residual.is_zero() ? "0" : "nonzero");
  }
  if (fit.witness)
    report.add_value(label + " witness", "component (" + std::to_string(fit.witness->i) + "," +
                                             std::to_string(fit.witness->j) + "), monomial " +
                                             fit.witness->monomial);
  if (fit.status == FitStatus::RankDeficient)
    report.add_value(label + " solution space dimension",
                     std::to_string(fit.solution_space_dim));
}

int render(const Context& ctx, const RunReport& report) {
  const bool pass = report.checks.all_pass();
  if (ctx.report_format == "structured") {
    nlohmann::json doc;
    doc["command"] = report.command;
    doc["manifest"] = report.manifest;
    nlohmann::json values = nlohmann::json::array();
    for (const auto& [name, value] : report.values)
      values.push_back({{"name", name}, {"value", value}});
    doc["values"] = values;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& e : report.checks.entries)
      checks.push_back({{"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
    doc["checks"] = checks;
    doc["pass"] = pass;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "== " << report.command << " " << report.manifest << " ==\n";
    for (const auto& [name, value] : report.values) {
      if (value.find('\n') != std::string::npos) {
        std::cout << name << ":\n";
        std::istringstream lines(value);
        std::string line;
        while (std::getline(lines, line)) std::cout << "  " << line << "\n";
      } else {
        std::cout << name << " = " << value << "\n";
      }
    }
    if (!report.checks.entries.empty()) std::cout << render_text(report.checks);
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitPass : kExitCheckFailure;
}

// Parses and validates; on validation failure renders the report and returns
// nullopt so the caller can exit with a check-failure code.
std::optional<ManifoldSpec> load_validated(const Context& ctx, RunReport& report) {
  ManifoldSpec spec = parse_manifest_file(ctx.manifest_path);
  report.checks.merge(validate_structure(spec));
  if (!report.checks.all_pass()) return std::nullopt;
  return spec;
}

FrameTensor gamma_tensor(const ManifoldSpec& spec, const Connection& conn) {
  return FrameTensor::build(spec.table, spec.dim, {Slot::Lower, Slot::Lower, Slot::Upper},
                            [&](std::span<const int> ix) {
                              return conn.Gamma(ix[0], ix[1], ix[2]);
                            });
}

CheckList curvature_invariants(const ManifoldSpec& spec, const CurvatureBundle& bundle) {
  const int d = spec.dim;
  CheckList out;

  FrameTensor dg = covariant_derivative(spec.metric_tensor(), bundle.conn);
  out.add("metric compatibility nab g = 0", dg.is_zero());

  bool torsion_ok = true;
  for (int i = 0; i < d && torsion_ok; ++i)
    for (int j = 0; j < d && torsion_ok; ++j)
      for (int k = 0; k < d && torsion_ok; ++k) {
        ScalarExpr r = bundle.conn.Gamma(i, j, k);
        r -= bundle.conn.Gamma(j, i, k);
        r -= ScalarExpr::constant(spec.table, spec.c(i, j, k));
        if (!r.is_zero()) torsion_ok = false;
      }
  out.add("torsion-free", torsion_ok);

  bool anti12 = true, anti34 = true, pair_sym = true, bianchi = true, ricci_sym = true;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (bundle.ricci.at({i, j}) != bundle.ricci.at({j, i})) ricci_sym = false;
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          const ScalarExpr& r = bundle.r04.at({i, j, k, l});
          ScalarExpr s = bundle.r04.at({j, i, k, l});
          s += r;
          if (!s.is_zero()) anti12 = false;
          ScalarExpr t = bundle.r04.at({i, j, l, k});
          t += r;
          if (!t.is_zero()) anti34 = false;
          if (bundle.r04.at({k, l, i, j}) != r) pair_sym = false;
          ScalarExpr b = r;
          b += bundle.r04.at({j, k, i, l});
          b += bundle.r04.at({k, i, j, l});
          if (!b.is_zero()) bianchi = false;
        }
    }
  out.add("R antisymmetric in (1,2)", anti12);
  out.add("R antisymmetric in (3,4)", anti34);
  out.add("R symmetric under pair exchange", pair_sym);
  out.add("first Bianchi identity", bianchi);
  out.add("rho symmetric", ricci_sym);
  return out;
}

int run_validate(const Context& ctx) {
  RunReport report{"validate", ctx.manifest_path, {}, {}};
  ManifoldSpec spec = parse_manifest_file(ctx.manifest_path);
  report.add_value("dim", std::to_string(spec.dim));
  report.add_value("n", std::to_string(spec.n));
  report.checks.merge(validate_structure(spec));
  return render(ctx, report);
}

int run_classify(const Context& ctx) {
  RunReport report{"classify", ctx.manifest_path, {}, {}};
  auto spec = load_validated(ctx, report);
  if (!spec) return render(ctx, report);
  auto point = parse_numeric_point(ctx, *spec);

  CurvatureBundle bundle = curvature_bundle(*spec);
  StructureReport structure = sasaki_like_test(*spec, bundle);
  report.add_value("sasaki_like", structure.is_sasaki_like ? "true" : "false");

  FitResult einstein = einstein_like_fit(*spec, bundle);
  add_fit(report, "einstein-like fit", einstein);
  if (einstein.exact()) {
    std::string label = "einstein-like";
    if (fit_is_einstein(einstein))
      label = "einstein";
    else if (fit_is_eta_einstein(einstein))
      label = "eta-einstein";
    if (einstein.status == FitStatus::ExactFunctionFit) label = "almost " + label;
    report.add_value("class", label);
  }
  add_scalar(report, point, "tau", bundle.tau);
  add_scalar(report, point, "tau*", bundle.tau_star);
  add_scalar(report, point, "tau~", bundle.tau_tilde);

  report.checks.merge(fundamental_tensor_properties(*spec, structure.f));
  if (structure.is_sasaki_like) report.checks.merge(sasaki_consequence_suite(*spec, bundle));
  return render(ctx, report);
}

int run_curvature(const Context& ctx) {
  RunReport report{"curvature", ctx.manifest_path, {}, {}};
  auto spec = load_validated(ctx, report);
  if (!spec) return render(ctx, report);
  auto point = parse_numeric_point(ctx, *spec);

  CurvatureBundle bundle = curvature_bundle(*spec);
  report.add_value("Gamma", gamma_tensor(*spec, bundle.conn).component_list("Gamma"));
  report.add_value("R", bundle.r04.component_list("R"));
  report.add_value("rho", bundle.ricci.component_list("rho"));
  report.add_value("rho*", bundle.ricci_star.component_list("rho*"));
  add_scalar(report, point, "tau", bundle.tau);
  add_scalar(report, point, "tau*", bundle.tau_star);
  add_scalar(report, point, "tau~", bundle.tau_tilde);

  report.checks.merge(curvature_invariants(*spec, bundle));
  return render(ctx, report);
}

int run_sections(const Context& ctx) {
  RunReport report{"sections", ctx.manifest_path, {}, {}};
  auto spec = load_validated(ctx, report);
  if (!spec) return render(ctx, report);

  CurvatureBundle bundle = curvature_bundle(*spec);
  for (const auto& entry : special_sections_report(*spec, bundle))
    report.add_value("k " + entry.basis + " [" + entry.kind + "]",
                     entry.degenerate ? "degenerate" : entry.k.to_string());
  return render(ctx, report);
}

int run_soliton_fit(const Context& ctx) {
  RunReport report{"soliton-fit", ctx.manifest_path, {}, {}};
  auto spec = load_validated(ctx, report);
  if (!spec) return render(ctx, report);

  CurvatureBundle bundle = curvature_bundle(*spec);
  FrameTensor v = spec->vector_field_tensor(ctx.potential);
  FitResult fit = soliton_fit(*spec, bundle, v);
  report.add_value("potential", ctx.potential);
  add_fit(report, "soliton fit", fit);
  report.checks.add("soliton fit exact", fit.exact(),
                    fit.exact() ? "" : std::string("status ") + to_string(fit.status));

  const bool sasaki = sasaki_like_test(*spec, bundle).is_sasaki_like;
  if (sasaki && fit.status == FitStatus::ExactConstantFit)
    report.checks.merge(theorem_3_suite(*spec, bundle, v, fit));
  return render(ctx, report);
}

int run_grad_soliton(const Context& ctx) {
  RunReport report{"grad-soliton", ctx.manifest_path, {}, {}};
  auto spec = load_validated(ctx, report);
  if (!spec) return render(ctx, report);
  auto point = parse_numeric_point(ctx, *spec);

  auto it = spec->functions.find(ctx.function);
  if (it == spec->functions.end())
    throw std::invalid_argument("unknown function: " + ctx.function);

  CurvatureBundle bundle = curvature_bundle(*spec);
  GradientSolitonReport grad_report = gradient_soliton_check(*spec, bundle, it->second);
  report.add_value("function", ctx.function);
  report.add_value("grad f", grad_report.grad.component_list("grad"));
  report.add_value("Hess f", grad_report.hess.component_list("Hess"));
  add_scalar(report, point, "Delta f", grad_report.lap);
  add_fit(report, "gradient soliton fit", grad_report.fit);
  report.checks.add("gradient soliton fit exact", grad_report.fit.exact(),
                    grad_report.fit.exact()
                        ? ""
                        : std::string("status ") + to_string(grad_report.fit.status));
  report.checks.merge(grad_report.checks);
  return render(ctx, report);
}

int run_check_theorems(const Context& ctx) {
  RunReport report{"check-theorems", ctx.manifest_path, {}, {}};
  auto spec = load_validated(ctx, report);
  if (!spec) return render(ctx, report);

  CurvatureBundle bundle = curvature_bundle(*spec);
  report.checks.merge(curvature_invariants(*spec, bundle));

  StructureReport structure = sasaki_like_test(*spec, bundle);
  report.add_value("sasaki_like", structure.is_sasaki_like ? "true" : "false");
  report.checks.merge(structure.checks);
  if (!structure.is_sasaki_like) return render(ctx, report);

  report.checks.merge(sasaki_consequence_suite(*spec, bundle));

  FitResult einstein = einstein_like_fit(*spec, bundle);
  add_fit(report, "einstein-like fit", einstein);
  FrameTensor xi = spec->xi_as_field();
  FitResult xi_fit = soliton_fit(*spec, bundle, xi);
  add_fit(report, "xi-potential soliton fit", xi_fit);
  if (einstein.status == FitStatus::ExactConstantFit &&
      xi_fit.status == FitStatus::ExactConstantFit)
    report.checks.merge(theorem_2_1_bridge(einstein, xi_fit, spec->n));
  if (xi_fit.status == FitStatus::ExactConstantFit)
    report.checks.merge(theorem_3_suite(*spec, bundle, xi, xi_fit));

  if (!ctx.potential.empty()) {
    FrameTensor v = spec->vector_field_tensor(ctx.potential);
    FitResult fit = soliton_fit(*spec, bundle, v);
    report.add_value("potential", ctx.potential);
    add_fit(report, "soliton fit (" + ctx.potential + ")", fit);
    report.checks.add("soliton fit exact (" + ctx.potential + ")", fit.exact(),
                      fit.exact() ? "" : std::string("status ") + to_string(fit.status));
    if (fit.status == FitStatus::ExactConstantFit)
      report.checks.merge(theorem_3_suite(*spec, bundle, v, fit));
  }

  if (!ctx.function.empty()) {
    auto it = spec->functions.find(ctx.function);
    if (it == spec->functions.end())
      throw std::invalid_argument("unknown function: " + ctx.function);
    GradientSolitonReport grad_report = gradient_soliton_check(*spec, bundle, it->second);
    report.add_value("function", ctx.function);
    add_fit(report, "gradient soliton fit (" + ctx.function + ")", grad_report.fit);
    report.checks.add("gradient soliton fit exact (" + ctx.function + ")",
                      grad_report.fit.exact(),
                      grad_report.fit.exact()
                          ? ""
                          : std::string("status ") + to_string(grad_report.fit.status));
    report.checks.merge(grad_report.checks);
  }
  return render(ctx, report);
}

int run_oracle(const Context& ctx) {
  RunReport report{"oracle", ctx.manifest_path, {}, {}};
  auto spec = load_validated(ctx, report);
  if (!spec) return render(ctx, report);

  CurvatureBundle bundle = curvature_bundle(*spec);
  auto points = oracle_default_points(*spec, 5);
  OracleResult result = oracle_compare(*spec, bundle, points, kOracleDefaultStep);
  std::ostringstream diff;
  diff.precision(6);
  diff << std::scientific << result.max_abs_diff;
  report.add_value("points checked", std::to_string(result.points_checked));
  report.add_value("max |exact - finite difference|", diff.str());
  report.checks.add("curvature matches finite-difference oracle",
                    result.max_abs_diff <= kOracleDefaultTolerance,
                    "tolerance 1e-05, max diff " + diff.str());
  return render(ctx, report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact curvature, classification, and Ricci-like soliton reports for "
               "almost contact B-metric manifolds given by frame manifests"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "1.0.0");

  Context ctx;
  auto add_common = [&ctx](CLI::App* cmd) {
    cmd->add_option("--manifest", ctx.manifest_path, "Manifest JSON file")->required();
    cmd->add_option("--report", ctx.report_format, "Report rendering")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--numeric", ctx.numeric_point,
                    "Comma-separated coordinates; also prints scalar values evaluated there");
  };

  CLI::App* validate = app.add_subcommand("validate", "Parse and check the structure axioms");
  add_common(validate);
  CLI::App* classify =
      app.add_subcommand("classify", "Sasaki-like verdict, Einstein-like fit, scalar curvatures");
  add_common(classify);
  CLI::App* curvature = app.add_subcommand("curvature", "Connection and curvature components");
  add_common(curvature);
  CLI::App* sections =
      app.add_subcommand("sections", "Sectional curvatures of the distinguished 2-planes");
  add_common(sections);
  CLI::App* soliton = app.add_subcommand("soliton-fit", "Fit a Ricci-like soliton for a potential");
  add_common(soliton);
  soliton->add_option("--potential", ctx.potential, "Named vector field")->required();
  CLI::App* grad = app.add_subcommand("grad-soliton", "Gradient soliton report for a function");
  add_common(grad);
  grad->add_option("--function", ctx.function, "Named scalar function")->required();
  CLI::App* theorems =
      app.add_subcommand("check-theorems", "Run every applicable identity suite");
  add_common(theorems);
  theorems->add_option("--potential", ctx.potential, "Named vector field (optional)");
  theorems->add_option("--function", ctx.function, "Named scalar function (optional)");
  CLI::App* oracle =
      app.add_subcommand("oracle", "Finite-difference cross-check of the exact curvature");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (validate->parsed()) return run_validate(ctx);
    if (classify->parsed()) return run_classify(ctx);
    if (curvature->parsed()) return run_curvature(ctx);
    if (sections->parsed()) return run_sections(ctx);
    if (soliton->parsed()) return run_soliton_fit(ctx);
    if (grad->parsed()) return run_grad_soliton(ctx);
    if (theorems->parsed()) return run_check_theorems(ctx);
    if (oracle->parsed()) return run_oracle(ctx);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
