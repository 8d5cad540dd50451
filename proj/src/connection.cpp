#include "acbm/connection.hpp"

namespace acbm {

Connection koszul_connection(const ManifoldSpec& spec, const MetricData& metric) {
  const int d = spec.dim;
  Connection conn;
  conn.table = spec.table;
  conn.dim = d;
  conn.deriv = spec.derivation;
  conn.gamma.assign(d * d * d, ScalarExpr(spec.table));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      // 2 g(nab_{e_i} e_j, e_k) with constant metric components.
      std::vector<Rational> rhs(d);
      for (int k = 0; k < d; ++k) {
        Rational r = 0;
        for (int m = 0; m < d; ++m)
          r += spec.c(i, j, m) * metric.g[m][k] - spec.c(j, k, m) * metric.g[m][i] +
               spec.c(k, i, m) * metric.g[m][j];
        rhs[k] = r;
      }
      for (int l = 0; l < d; ++l) {
        Rational r = 0;
        for (int k = 0; k < d; ++k) r += metric.ginv[k][l] * rhs[k];
        r /= 2;
        conn.Gamma(i, j, l) = ScalarExpr::constant(spec.table, r);
      }
    }
  return conn;
}

Connection koszul_connection(const ManifoldSpec& spec) {
  return koszul_connection(spec, spec.metric);
}

FrameTensor covariant_derivative(const FrameTensor& t, const Connection& conn) {
  const int d = conn.dim;
  std::vector<Slot> slots;
  slots.push_back(Slot::Lower);
  for (Slot s : t.slots()) slots.push_back(s);
  return FrameTensor::build(t.table(), d, slots, [&](std::span<const int> ix) {
    const int i = ix[0];
    std::vector<int> rest(ix.begin() + 1, ix.end());
    ScalarExpr out = conn.deriv(i, t.at(std::span<const int>(rest)));
    for (int s = 0; s < t.rank(); ++s) {
      const int a = rest[s];
      for (int m = 0; m < d; ++m) {
        std::vector<int> jump = rest;
        jump[s] = m;
        const ScalarExpr& comp = t.at(std::span<const int>(jump));
        if (comp.is_zero()) continue;
        ScalarExpr term = comp;
        if (t.slots()[s] == Slot::Upper) {
          term *= conn.Gamma(i, m, a);
          out += term;
        } else {
          term *= conn.Gamma(i, a, m);
          out -= term;
        }
      }
    }
    return out;
  });
}

FrameTensor lie_derivative_metric(const FrameTensor& v, const Connection& conn,
                                  const MetricData& metric) {
  const int d = conn.dim;
  FrameTensor w = covariant_derivative(v, conn);
  return FrameTensor::build(v.table(), d, {Slot::Lower, Slot::Lower},
                            [&](std::span<const int> ix) {
                              const int i = ix[0], j = ix[1];
                              ScalarExpr out(v.table());
                              for (int k = 0; k < d; ++k) {
                                ScalarExpr a = w.at({i, k});
                                a *= metric.g[k][j];
                                out += a;
                                ScalarExpr b = w.at({j, k});
                                b *= metric.g[k][i];
                                out += b;
                              }
                              return out;
                            });
}

FrameTensor lie_derivative_sym2(const FrameTensor& t, const FrameTensor& v,
                                const Connection& conn) {
  const int d = conn.dim;
  FrameTensor w = covariant_derivative(v, conn);
  FrameTensor dt = covariant_derivative(t, conn);
  return FrameTensor::build(t.table(), d, {Slot::Lower, Slot::Lower},
                            [&](std::span<const int> ix) {
                              const int i = ix[0], j = ix[1];
                              ScalarExpr out(t.table());
                              for (int k = 0; k < d; ++k) {
                                ScalarExpr a = dt.at({k, i, j});
                                a *= v.at({k});
                                out += a;
                                ScalarExpr b = t.at({k, j});
                                b *= w.at({i, k});
                                out += b;
                                ScalarExpr c = t.at({i, k});
                                c *= w.at({j, k});
                                out += c;
                              }
                              return out;
                            });
}

FrameTensor lie_derivative_connection(const FrameTensor& v, const Connection& conn,
                                      const FrameTensor& r13) {
  const int d = conn.dim;
  FrameTensor w = covariant_derivative(v, conn);
  FrameTensor dw = covariant_derivative(w, conn);
  return FrameTensor::build(v.table(), d, {Slot::Lower, Slot::Lower, Slot::Upper},
                            [&](std::span<const int> ix) {
                              const int i = ix[0], j = ix[1], k = ix[2];
                              ScalarExpr out = dw.at({i, j, k});
                              for (int m = 0; m < d; ++m) {
                                const ScalarExpr& r = r13.at({m, i, j, k});
                                if (r.is_zero()) continue;
                                ScalarExpr term = r;
                                term *= v.at({m});
                                out += term;
                              }
                              return out;
                            });
}

}  // namespace acbm
