#include "acbm/curvature.hpp"

#include <stdexcept>

namespace acbm {

FrameTensor curvature_r13(const ManifoldSpec& spec, const Connection& conn) {
  const int d = spec.dim;
  return FrameTensor::build(
      spec.table, d, {Slot::Lower, Slot::Lower, Slot::Lower, Slot::Upper},
      [&](std::span<const int> ix) {
        const int i = ix[0], j = ix[1], k = ix[2], l = ix[3];
        ScalarExpr out = conn.deriv(i, conn.Gamma(j, k, l));
        out -= conn.deriv(j, conn.Gamma(i, k, l));
        for (int m = 0; m < d; ++m) {
          ScalarExpr a = conn.Gamma(j, k, m);
          a *= conn.Gamma(i, m, l);
          out += a;
          ScalarExpr b = conn.Gamma(i, k, m);
          b *= conn.Gamma(j, m, l);
          out -= b;
          if (spec.c(i, j, m) != 0) {
            ScalarExpr g = conn.Gamma(m, k, l);
            g *= spec.c(i, j, m);
            out -= g;
          }
        }
        return out;
      });
}

namespace {

FrameTensor lower_last(const ManifoldSpec& spec, const FrameTensor& r13,
                       const MetricData& metric) {
  const int d = spec.dim;
  return FrameTensor::build(
      spec.table, d, {Slot::Lower, Slot::Lower, Slot::Lower, Slot::Lower},
      [&](std::span<const int> ix) {
        ScalarExpr out(spec.table);
        for (int l = 0; l < d; ++l) {
          const ScalarExpr& comp = r13.at({ix[0], ix[1], ix[2], l});
          if (comp.is_zero() || metric.g[l][ix[3]] == 0) continue;
          ScalarExpr term = comp;
          term *= metric.g[l][ix[3]];
          out += term;
        }
        return out;
      });
}

FrameTensor ricci_from_r04(const ManifoldSpec& spec, const FrameTensor& r04,
                           const MetricData& metric) {
  const int d = spec.dim;
  return FrameTensor::build(spec.table, d, {Slot::Lower, Slot::Lower},
                            [&](std::span<const int> ix) {
                              ScalarExpr out(spec.table);
                              for (int i = 0; i < d; ++i)
                                for (int l = 0; l < d; ++l) {
                                  if (metric.ginv[i][l] == 0) continue;
                                  const ScalarExpr& comp = r04.at({i, ix[0], ix[1], l});
                                  if (comp.is_zero()) continue;
                                  ScalarExpr term = comp;
                                  term *= metric.ginv[i][l];
                                  out += term;
                                }
                              return out;
                            });
}

ScalarExpr trace_with_inverse(const ManifoldSpec& spec, const FrameTensor& t,
                              const MetricData& metric) {
  const int d = spec.dim;
  ScalarExpr out(spec.table);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      if (metric.ginv[j][k] == 0) continue;
      const ScalarExpr& comp = t.at({j, k});
      if (comp.is_zero()) continue;
      ScalarExpr term = comp;
      term *= metric.ginv[j][k];
      out += term;
    }
  return out;
}

}  // namespace

ScalarExpr scalar_curvature_for_metric(const ManifoldSpec& spec, const MetricData& metric) {
  Connection conn = koszul_connection(spec, metric);
  FrameTensor r13 = curvature_r13(spec, conn);
  FrameTensor r04 = lower_last(spec, r13, metric);
  FrameTensor ricci = ricci_from_r04(spec, r04, metric);
  return trace_with_inverse(spec, ricci, metric);
}

CurvatureBundle curvature_bundle(const ManifoldSpec& spec) {
  const int d = spec.dim;
  Connection conn = koszul_connection(spec);
  FrameTensor r13 = curvature_r13(spec, conn);
  FrameTensor r04 = lower_last(spec, r13, spec.metric);
  FrameTensor ricci = ricci_from_r04(spec, r04, spec.metric);

  FrameTensor ricci_star = FrameTensor::build(
      spec.table, d, {Slot::Lower, Slot::Lower}, [&](std::span<const int> ix) {
        ScalarExpr out(spec.table);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            if (spec.metric.ginv[i][j] == 0) continue;
            for (int w = 0; w < d; ++w) {
              if (spec.phi[w][j] == 0) continue;
              const ScalarExpr& comp = r04.at({i, ix[0], ix[1], w});
              if (comp.is_zero()) continue;
              ScalarExpr term = comp;
              term *= spec.metric.ginv[i][j] * spec.phi[w][j];
              out += term;
            }
          }
        return out;
      });

  FrameTensor q = FrameTensor::build(spec.table, d, {Slot::Lower, Slot::Upper},
                                     [&](std::span<const int> ix) {
                                       ScalarExpr out(spec.table);
                                       for (int k = 0; k < d; ++k) {
                                         if (spec.metric.ginv[k][ix[1]] == 0) continue;
                                         const ScalarExpr& comp = ricci.at({ix[0], k});
                                         if (comp.is_zero()) continue;
                                         ScalarExpr term = comp;
                                         term *= spec.metric.ginv[k][ix[1]];
                                         out += term;
                                       }
                                       return out;
                                     });

  ScalarExpr tau = trace_with_inverse(spec, ricci, spec.metric);

  ScalarExpr tau_star(spec.table);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (spec.metric.ginv[i][j] == 0) continue;
      for (int w = 0; w < d; ++w) {
        if (spec.phi[w][j] == 0) continue;
        const ScalarExpr& comp = ricci.at({i, w});
        if (comp.is_zero()) continue;
        ScalarExpr term = comp;
        term *= spec.metric.ginv[i][j] * spec.phi[w][j];
        tau_star += term;
      }
    }

  MetricData assoc = MetricData::from_matrix(associated_metric(spec));
  ScalarExpr tau_tilde = scalar_curvature_for_metric(spec, assoc);

  return CurvatureBundle{std::move(conn),  std::move(r13),      std::move(r04),
                         std::move(ricci), std::move(ricci_star), std::move(q),
                         std::move(tau),   std::move(tau_star), std::move(tau_tilde)};
}

ScalarExpr sectional_curvature(const FrameTensor& r04, const MetricData& metric,
                               const FrameTensor& x, const FrameTensor& y) {
  const int d = r04.dim();
  auto pair_g = [&](const FrameTensor& a, const FrameTensor& b) {
    ScalarExpr out(a.table());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (metric.g[i][j] == 0) continue;
        ScalarExpr term = a.at({i});
        term *= b.at({j});
        term *= metric.g[i][j];
        out += term;
      }
    return out;
  };
  ScalarExpr gxx = pair_g(x, x), gyy = pair_g(y, y), gxy = pair_g(x, y);
  ScalarExpr den = gxx;
  den *= gyy;
  ScalarExpr cross = gxy;
  cross *= gxy;
  den -= cross;
  if (!den.is_constant()) throw std::domain_error("section denominator is not constant");
  const Rational den_value = den.constant_value();
  if (den_value == 0) throw std::domain_error("degenerate section");

  ScalarExpr num(x.table());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          const ScalarExpr& comp = r04.at({i, j, k, l});
          if (comp.is_zero()) continue;
          ScalarExpr term = comp;
          term *= x.at({i});
          term *= y.at({j});
          term *= y.at({k});
          term *= x.at({l});
          num += term;
        }
  num /= den_value;
  return num;
}

std::vector<SectionEntry> special_sections_report(const ManifoldSpec& spec,
                                                  const CurvatureBundle& bundle) {
  const int d = spec.dim;
  auto constant_field = [&](const std::vector<Rational>& comps) {
    return FrameTensor::build(spec.table, d, {Slot::Upper}, [&](std::span<const int> ix) {
      return ScalarExpr::constant(spec.table, comps[ix[0]]);
    });
  };

  std::vector<SectionEntry> out;
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> phi_ei(d), phi2_ei(d);
    for (int a = 0; a < d; ++a) {
      phi_ei[a] = spec.phi[a][i];
      Rational r = 0;
      for (int m = 0; m < d; ++m) r += spec.phi[a][m] * spec.phi[m][i];
      phi2_ei[a] = r;
    }
    SectionEntry entry;
    entry.kind = "phi-holomorphic";
    entry.basis = "span(phi " + spec.frame_names[i] + ", phi^2 " + spec.frame_names[i] + ")";
    try {
      entry.k = sectional_curvature(bundle.r04, spec.metric, constant_field(phi_ei),
                                    constant_field(phi2_ei));
    } catch (const std::domain_error&) {
      entry.degenerate = true;
      entry.k = ScalarExpr(spec.table);
    }
    out.push_back(std::move(entry));
  }
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> ei(d);
    ei[i] = 1;
    SectionEntry entry;
    entry.kind = "xi";
    entry.basis = "span(" + spec.frame_names[i] + ", xi)";
    try {
      entry.k = sectional_curvature(bundle.r04, spec.metric, constant_field(ei),
                                    constant_field(spec.xi));
    } catch (const std::domain_error&) {
      entry.degenerate = true;
      entry.k = ScalarExpr(spec.table);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace acbm
