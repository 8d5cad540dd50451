#include "acbm/gradient.hpp"

#include <stdexcept>

#include "acbm/structure.hpp"

namespace acbm {

FrameTensor gradient_field(const ManifoldSpec& spec, const ScalarExpr& f) {
  if (!spec.realization) throw std::domain_error("gradient requires a coordinate realization");
  const int d = spec.dim;
  std::vector<ScalarExpr> df(d, ScalarExpr(spec.table));
  for (int j = 0; j < d; ++j) df[j] = spec.derivation(j, f);
  return FrameTensor::build(spec.table, d, {Slot::Upper}, [&](std::span<const int> ix) {
    ScalarExpr out(spec.table);
    for (int j = 0; j < d; ++j) {
      if (spec.metric.ginv[ix[0]][j] == 0 || df[j].is_zero()) continue;
      ScalarExpr term = df[j];
      term *= spec.metric.ginv[ix[0]][j];
      out += term;
    }
    return out;
  });
}

FrameTensor hessian(const ManifoldSpec& spec, const Connection& conn, const ScalarExpr& f) {
  if (!spec.realization) throw std::domain_error("hessian requires a coordinate realization");
  const int d = spec.dim;
  FrameTensor df = FrameTensor::build(spec.table, d, {Slot::Lower}, [&](std::span<const int> ix) {
    return spec.derivation(ix[0], f);
  });
  FrameTensor hess = covariant_derivative(df, conn);

  // Cross-check against g(nab_x grad f, y); the two defining forms must agree.
  FrameTensor w = covariant_derivative(gradient_field(spec, f), conn);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      ScalarExpr other(spec.table);
      for (int k = 0; k < d; ++k) {
        if (spec.metric.g[k][j] == 0) continue;
        ScalarExpr term = w.at({i, k});
        term *= spec.metric.g[k][j];
        other += term;
      }
      if (other != hess.at({i, j}))
        throw std::logic_error("hessian paths disagree: nab df vs g(nab grad f, .)");
    }
  return hess;
}

ScalarExpr laplacian(const ManifoldSpec& spec, const FrameTensor& hess) {
  const int d = spec.dim;
  ScalarExpr out(spec.table);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (spec.metric.ginv[i][j] == 0) continue;
      const ScalarExpr& comp = hess.at({i, j});
      if (comp.is_zero()) continue;
      ScalarExpr term = comp;
      term *= spec.metric.ginv[i][j];
      out += term;
    }
  return out;
}

GradientSolitonReport gradient_soliton_check(const ManifoldSpec& spec,
                                             const CurvatureBundle& bundle, const ScalarExpr& f) {
  const int d = spec.dim;
  const Rational two_n = 2 * spec.n;

  GradientSolitonReport report;
  report.grad = gradient_field(spec, f);
  report.hess = hessian(spec, bundle.conn, f);
  report.lap = laplacian(spec, report.hess);
  report.trivial = report.grad.is_zero();

  FrameTensor s = -(report.hess + bundle.ricci);
  report.fit = fit_against_structure_basis(s, spec);

  auto check_zero = [&](const std::string& name, const FrameTensor& residual) {
    for (int flat = 0; flat < residual.size(); ++flat) {
      const ScalarExpr& c = residual.flat_at(flat);
      if (c.is_zero()) continue;
      auto idx = residual.unflatten(flat);
      std::string where = "residual at (";
      for (std::size_t k = 0; k < idx.size(); ++k)
        where += (k ? "," : "") + std::to_string(idx[k] + 1);
      report.checks.add(name, false, where + ") = " + c.to_string());
      return;
    }
    report.checks.add(name, true, "");
  };

  report.checks.add("potential is non-trivial", !report.trivial,
                    report.trivial ? "grad f = 0 (trivial soliton, rejected)" : "");

  {
    FrameTensor lvg = lie_derivative_metric(report.grad, bundle.conn, spec.metric);
    FrameTensor residual = lvg.scaled(Rational(1, 2)) - report.hess;
    check_zero("1/2 L_{grad f} g = Hess f", residual);
  }

  const bool sasaki = sasaki_like_test(spec, bundle).is_sasaki_like;
  if (!sasaki)
    report.checks.add("warning: not Sasaki-like", true,
                      "theorem conclusions skipped; only Hessian/Laplacian identities checked");

  if (report.fit.exact()) {
    const ScalarExpr& l = report.fit.coeffs[0];
    const ScalarExpr& m = report.fit.coeffs[1];
    const ScalarExpr& nu = report.fit.coeffs[2];

    {
      ScalarExpr r = report.lap;
      r += bundle.tau;
      ScalarExpr lt = l;
      lt *= Rational(2 * spec.n + 1);
      r += lt;
      r += m;
      r += nu;
      report.checks.add("Delta f + tau + (2n+1)lambda + mu + nu = 0", r.is_zero(),
                        r.is_zero() ? "" : "residual " + r.to_string());
    }

    {
      FrameTensor w = covariant_derivative(report.grad, bundle.conn);
      FrameTensor residual = FrameTensor::build(
          spec.table, d, {Slot::Lower, Slot::Upper}, [&](std::span<const int> ix) {
            const int i = ix[0], k = ix[1];
            ScalarExpr r = w.at({i, k});
            r += bundle.q.at({i, k});
            if (i == k) r += l;
            if (spec.phi[k][i] != 0) {
              ScalarExpr t = m;
              t *= spec.phi[k][i];
              r += t;
            }
            const Rational ex = spec.eta[i] * spec.xi[k];
            if (ex != 0) {
              ScalarExpr t = m;
              t += nu;
              t *= ex;
              r += t;
            }
            return r;
          });
      check_zero("nab_x v = -Qx - lambda x - mu phi x - (mu+nu) eta(x) xi", residual);
    }

    {
      FitResult lie_path = soliton_fit(spec, bundle, report.grad);
      const bool agree = lie_path.status == report.fit.status &&
                         lie_path.coeffs[0] == report.fit.coeffs[0] &&
                         lie_path.coeffs[1] == report.fit.coeffs[1] &&
                         lie_path.coeffs[2] == report.fit.coeffs[2];
      report.checks.add("fit agrees with soliton_fit(grad f)", agree,
                        agree ? "" : std::string("lie path status ") + to_string(lie_path.status));
    }

    if (sasaki) {
      FrameTensor residual = FrameTensor::build(
          spec.table, d, {Slot::Lower, Slot::Lower}, [&](std::span<const int> ix) {
            ScalarExpr r = bundle.ricci.at({ix[0], ix[1]});
            r -= ScalarExpr::constant(spec.table, two_n * spec.eta[ix[0]] * spec.eta[ix[1]]);
            return r;
          });
      check_zero("rho = 2n eta (x) eta", residual);

      ScalarExpr rt = bundle.tau;
      rt -= ScalarExpr::constant(spec.table, two_n);
      report.checks.add("tau = 2n", rt.is_zero(),
                        rt.is_zero() ? "" : "tau = " + bundle.tau.to_string());
      ScalarExpr rtt = bundle.tau_tilde;
      rtt -= ScalarExpr::constant(spec.table, two_n);
      report.checks.add("tau~ = 2n", rtt.is_zero(),
                        rtt.is_zero() ? "" : "tau~ = " + bundle.tau_tilde.to_string());
    }
  } else {
    std::string detail = std::string("status ") + to_string(report.fit.status);
    if (report.fit.witness)
      detail += "; first unreachable component (" + std::to_string(report.fit.witness->i) + "," +
                std::to_string(report.fit.witness->j) + ") monomial " + report.fit.witness->monomial;
    report.checks.add("gradient soliton fit", false, detail);
  }

  return report;
}

}  // namespace acbm
