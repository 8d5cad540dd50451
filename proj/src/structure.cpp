#include "acbm/structure.hpp"

#include <stdexcept>

namespace acbm {

namespace {

// Reports the first nonzero component of a residual tensor, if any.
void check_zero(CheckList& out, const std::string& name, const FrameTensor& residual) {
  for (int flat = 0; flat < residual.size(); ++flat) {
    const ScalarExpr& c = residual.flat_at(flat);
    if (c.is_zero()) continue;
    auto idx = residual.unflatten(flat);
    std::string where = "residual at (";
    for (std::size_t k = 0; k < idx.size(); ++k)
      where += (k ? "," : "") + std::to_string(idx[k] + 1);
    where += ") = " + c.to_string();
    out.add(name, false, where);
    return;
  }
  out.add(name, true, "");
}

void check_zero_scalar(CheckList& out, const std::string& name, const ScalarExpr& residual) {
  out.add(name, residual.is_zero(), residual.is_zero() ? "" : "residual " + residual.to_string());
}

}  // namespace

FrameTensor fundamental_tensor(const ManifoldSpec& spec, const Connection& conn) {
  const int d = spec.dim;
  FrameTensor dphi = covariant_derivative(spec.phi_tensor(), conn);
  return FrameTensor::build(spec.table, d, {Slot::Lower, Slot::Lower, Slot::Lower},
                            [&](std::span<const int> ix) {
                              ScalarExpr out(spec.table);
                              for (int k = 0; k < d; ++k) {
                                if (spec.metric.g[k][ix[2]] == 0) continue;
                                const ScalarExpr& comp = dphi.at({ix[0], ix[1], k});
                                if (comp.is_zero()) continue;
                                ScalarExpr term = comp;
                                term *= spec.metric.g[k][ix[2]];
                                out += term;
                              }
                              return out;
                            });
}

CheckList fundamental_tensor_properties(const ManifoldSpec& spec, const FrameTensor& f) {
  const int d = spec.dim;
  CheckList out;

  FrameTensor sym = FrameTensor::build(
      spec.table, d, {Slot::Lower, Slot::Lower, Slot::Lower}, [&](std::span<const int> ix) {
        ScalarExpr r = f.at({ix[0], ix[1], ix[2]});
        r -= f.at({ix[0], ix[2], ix[1]});
        return r;
      });
  check_zero(out, "F(x,y,z) = F(x,z,y)", sym);

  FrameTensor phi_split = FrameTensor::build(
      spec.table, d, {Slot::Lower, Slot::Lower, Slot::Lower}, [&](std::span<const int> ix) {
        const int x = ix[0], y = ix[1], z = ix[2];
        ScalarExpr r = f.at({x, y, z});
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) {
            const Rational coeff = spec.phi[a][y] * spec.phi[b][z];
            if (coeff == 0) continue;
            ScalarExpr term = f.at({x, a, b});
            term *= coeff;
            r -= term;
          }
        for (int a = 0; a < d; ++a) {
          const Rational cy = spec.eta[y] * spec.xi[a];
          if (cy != 0) {
            ScalarExpr term = f.at({x, a, z});
            term *= cy;
            r -= term;
          }
          const Rational cz = spec.eta[z] * spec.xi[a];
          if (cz != 0) {
            ScalarExpr term = f.at({x, y, a});
            term *= cz;
            r -= term;
          }
        }
        return r;
      });
  check_zero(out, "F(x,y,z) = F(x,phi y,phi z) + eta(y)F(x,xi,z) + eta(z)F(x,y,xi)", phi_split);

  return out;
}

StructureReport sasaki_like_test(const ManifoldSpec& spec, const CurvatureBundle& bundle) {
  const int d = spec.dim;
  const Rational two_n = 2 * spec.n;

  StructureReport report;
  report.f = fundamental_tensor(spec, bundle.conn);
  report.checks = fundamental_tensor_properties(spec, report.f);

  FrameTensor dphi = covariant_derivative(spec.phi_tensor(), bundle.conn);
  FrameTensor dxi = covariant_derivative(spec.xi_tensor(), bundle.conn);

  // General identity F(x, phi y, xi) = g(nab_x xi, y), independent of class.
  {
    FrameTensor residual = FrameTensor::build(
        spec.table, d, {Slot::Lower, Slot::Lower}, [&](std::span<const int> ix) {
          const int x = ix[0], y = ix[1];
          ScalarExpr r(spec.table);
          for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
              const Rational coeff = spec.phi[a][y] * spec.xi[b];
              if (coeff == 0) continue;
              ScalarExpr term = report.f.at({x, a, b});
              term *= coeff;
              r += term;
            }
          for (int k = 0; k < d; ++k) {
            if (spec.metric.g[k][y] == 0) continue;
            ScalarExpr term = dxi.at({x, k});
            term *= spec.metric.g[k][y];
            r -= term;
          }
          return r;
        });
    check_zero(report.checks, "F(x,phi y,xi) = g(nab_x xi, y)", residual);
  }

  report.residual = FrameTensor::build(
      spec.table, d, {Slot::Lower, Slot::Lower, Slot::Upper}, [&](std::span<const int> ix) {
        const int i = ix[0], j = ix[1], k = ix[2];
        ScalarExpr r = dphi.at({i, j, k});
        Rational rhs = -spec.metric.g[i][j] * spec.xi[k] + 2 * spec.eta[i] * spec.eta[j] * spec.xi[k];
        if (i == k) rhs -= spec.eta[j];
        r -= ScalarExpr::constant(spec.table, rhs);
        return r;
      });
  report.is_sasaki_like = report.residual.is_zero();
  check_zero(report.checks, "(nab_x phi)y = -g(x,y)xi - eta(y)x + 2eta(x)eta(y)xi",
             report.residual);

  if (!report.is_sasaki_like) return report;

  {
    FrameTensor residual = FrameTensor::build(spec.table, d, {Slot::Lower, Slot::Upper},
                                              [&](std::span<const int> ix) {
                                                ScalarExpr r = dxi.at({ix[0], ix[1]});
                                                r += ScalarExpr::constant(
                                                    spec.table, spec.phi[ix[1]][ix[0]]);
                                                return r;
                                              });
    check_zero(report.checks, "nab_x xi = -phi x", residual);
  }

  {
    FrameTensor deta = covariant_derivative(spec.eta_tensor(), bundle.conn);
    FrameTensor residual = FrameTensor::build(
        spec.table, d, {Slot::Lower, Slot::Lower}, [&](std::span<const int> ix) {
          ScalarExpr r = deta.at({ix[0], ix[1]});
          Rational gphi = 0;
          for (int k = 0; k < d; ++k) gphi += spec.metric.g[ix[0]][k] * spec.phi[k][ix[1]];
          r += ScalarExpr::constant(spec.table, gphi);
          return r;
        });
    check_zero(report.checks, "(nab_x eta)y = -g(x,phi y)", residual);
  }

  {
    FrameTensor residual = FrameTensor::build(
        spec.table, d, {Slot::Lower, Slot::Lower, Slot::Upper}, [&](std::span<const int> ix) {
          const int i = ix[0], j = ix[1], l = ix[2];
          ScalarExpr r(spec.table);
          for (int k = 0; k < d; ++k) {
            if (spec.xi[k] == 0) continue;
            ScalarExpr term = bundle.r13.at({i, j, k, l});
            term *= spec.xi[k];
            r += term;
          }
          Rational rhs = 0;
          if (i == l) rhs += spec.eta[j];
          if (j == l) rhs -= spec.eta[i];
          r -= ScalarExpr::constant(spec.table, rhs);
          return r;
        });
    check_zero(report.checks, "R(x,y)xi = eta(y)x - eta(x)y", residual);
  }

  {
    FrameTensor residual = FrameTensor::build(
        spec.table, d, {Slot::Lower}, [&](std::span<const int> ix) {
          ScalarExpr r(spec.table);
          for (int k = 0; k < d; ++k) {
            if (spec.xi[k] == 0) continue;
            ScalarExpr term = bundle.ricci.at({ix[0], k});
            term *= spec.xi[k];
            r += term;
          }
          r -= ScalarExpr::constant(spec.table, two_n * spec.eta[ix[0]]);
          return r;
        });
    check_zero(report.checks, "rho(x,xi) = 2n eta(x)", residual);
  }

  {
    FrameTensor residual = FrameTensor::build(
        spec.table, d, {Slot::Lower, Slot::Lower, Slot::Upper}, [&](std::span<const int> ix) {
          const int j = ix[0], k = ix[1], l = ix[2];
          ScalarExpr r(spec.table);
          for (int i = 0; i < d; ++i) {
            if (spec.xi[i] == 0) continue;
            ScalarExpr term = bundle.r13.at({i, j, k, l});
            term *= spec.xi[i];
            r += term;
          }
          Rational rhs = spec.metric.g[j][k] * spec.xi[l];
          if (j == l) rhs -= spec.eta[k];
          r -= ScalarExpr::constant(spec.table, rhs);
          return r;
        });
    check_zero(report.checks, "R(xi,y)z = g(y,z)xi - eta(z)y", residual);
  }

  {
    ScalarExpr r(spec.table);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        const Rational coeff = spec.xi[i] * spec.xi[k];
        if (coeff == 0) continue;
        ScalarExpr term = bundle.ricci.at({i, k});
        term *= coeff;
        r += term;
      }
    r -= ScalarExpr::constant(spec.table, two_n);
    check_zero_scalar(report.checks, "rho(xi,xi) = 2n", r);
  }

  return report;
}

CheckList sasaki_consequence_suite(const ManifoldSpec& spec, const CurvatureBundle& bundle) {
  const int d = spec.dim;
  const Rational two_n = 2 * spec.n;

  {
    StructureReport gate = sasaki_like_test(spec, bundle);
    if (!gate.is_sasaki_like)
      throw std::domain_error("sasaki_consequence_suite requires a Sasaki-like manifold");
  }

  CheckList out;

  {
    FrameTensor residual = FrameTensor::build(
        spec.table, d, {Slot::Lower, Slot::Lower}, [&](std::span<const int> ix) {
          const int j = ix[0], k = ix[1];
          ScalarExpr r = bundle.ricci_star.at({j, k});
          for (int m = 0; m < d; ++m) {
            if (spec.phi[m][k] == 0) continue;
            ScalarExpr term = bundle.ricci.at({j, m});
            term *= spec.phi[m][k];
            r -= term;
            r -= ScalarExpr::constant(spec.table,
                                      (two_n - 1) * spec.metric.g[j][m] * spec.phi[m][k]);
          }
          return r;
        });
    check_zero(out, "rho*(y,z) = rho(y,phi z) + (2n-1)g(y,phi z)", residual);
  }

  {
    RationalMatrix gphi(d, std::vector<Rational>(d));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        Rational r = 0;
        for (int m = 0; m < d; ++m) r += spec.metric.g[a][m] * spec.phi[m][b];
        gphi[a][b] = r;
      }
    auto h = [&](int a, int b) { return spec.metric.g[a][b] - 2 * spec.eta[a] * spec.eta[b]; };
    FrameTensor residual = FrameTensor::build(
        spec.table, d, {Slot::Lower, Slot::Lower, Slot::Lower, Slot::Lower},
        [&](std::span<const int> ix) {
          const int x = ix[0], y = ix[1], z = ix[2], w = ix[3];
          ScalarExpr r(spec.table);
          for (int m = 0; m < d; ++m) {
            if (spec.phi[m][z] != 0) {
              ScalarExpr term = bundle.r04.at({x, y, m, w});
              term *= spec.phi[m][z];
              r += term;
            }
            if (spec.phi[m][w] != 0) {
              ScalarExpr term = bundle.r04.at({x, y, z, m});
              term *= spec.phi[m][w];
              r -= term;
            }
          }
          Rational rhs = h(y, z) * gphi[x][w] + h(y, w) * gphi[x][z] - h(x, z) * gphi[y][w] -
                         h(x, w) * gphi[y][z];
          r -= ScalarExpr::constant(spec.table, rhs);
          return r;
        });
    check_zero(out, "R(x,y,phi z,w) - R(x,y,z,phi w) four-term identity", residual);
  }

  {
    ScalarExpr r = bundle.tau_tilde;
    r += bundle.tau_star;
    r -= ScalarExpr::constant(spec.table, two_n);
    check_zero_scalar(out, "tau~ = -tau* + 2n", r);
  }

  {
    FrameTensor residual = FrameTensor::build(
        spec.table, d, {Slot::Lower, Slot::Upper}, [&](std::span<const int> ix) {
          const int j = ix[0], l = ix[1];
          ScalarExpr r(spec.table);
          for (int m = 0; m < d; ++m) {
            if (spec.phi[m][j] != 0) {
              ScalarExpr term = bundle.q.at({m, l});
              term *= spec.phi[m][j];
              r += term;
            }
            if (spec.phi[l][m] != 0) {
              ScalarExpr term = bundle.q.at({j, m});
              term *= spec.phi[l][m];
              r -= term;
            }
          }
          return r;
        });
    check_zero(out, "Q phi = phi Q", residual);
  }

  FrameTensor dq = covariant_derivative(bundle.q, bundle.conn);

  {
    FrameTensor residual = FrameTensor::build(
        spec.table, d, {Slot::Lower, Slot::Upper}, [&](std::span<const int> ix) {
          const int i = ix[0], l = ix[1];
          ScalarExpr r(spec.table);
          for (int j = 0; j < d; ++j) {
            if (spec.xi[j] == 0) continue;
            ScalarExpr term = dq.at({i, j, l});
            term *= spec.xi[j];
            r += term;
          }
          for (int m = 0; m < d; ++m) {
            if (spec.phi[m][i] == 0) continue;
            ScalarExpr term = bundle.q.at({m, l});
            term *= spec.phi[m][i];
            r -= term;
          }
          r += ScalarExpr::constant(spec.table, two_n * spec.phi[l][i]);
          return r;
        });
    check_zero(out, "(nab_x Q)xi = Q phi x - 2n phi x", residual);
  }

  {
    FrameTensor residual = FrameTensor::build(
        spec.table, d, {Slot::Lower, Slot::Upper}, [&](std::span<const int> ix) {
          const int j = ix[0], l = ix[1];
          ScalarExpr r(spec.table);
          for (int i = 0; i < d; ++i) {
            if (spec.xi[i] == 0) continue;
            ScalarExpr term = dq.at({i, j, l});
            term *= spec.xi[i];
            r += term;
          }
          for (int m = 0; m < d; ++m) {
            if (spec.phi[m][j] == 0) continue;
            ScalarExpr term = bundle.q.at({m, l});
            term *= 2 * spec.phi[m][j];
            r -= term;
          }
          return r;
        });
    check_zero(out, "(nab_xi Q)y = 2 Q phi y", residual);
  }

  {
    FrameTensor residual = FrameTensor::build(
        spec.table, d, {Slot::Lower}, [&](std::span<const int> ix) {
          ScalarExpr r(spec.table);
          for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) {
              const Rational coeff = spec.xi[j] * spec.eta[l];
              if (coeff == 0) continue;
              ScalarExpr term = dq.at({ix[0], j, l});
              term *= coeff;
              r += term;
            }
          return r;
        });
    check_zero(out, "eta((nab_x Q)xi) = 0", residual);
  }

  {
    FrameTensor residual = FrameTensor::build(
        spec.table, d, {Slot::Lower}, [&](std::span<const int> ix) {
          ScalarExpr r(spec.table);
          for (int i = 0; i < d; ++i)
            for (int l = 0; l < d; ++l) {
              const Rational coeff = spec.xi[i] * spec.eta[l];
              if (coeff == 0) continue;
              ScalarExpr term = dq.at({i, ix[0], l});
              term *= coeff;
              r += term;
            }
          return r;
        });
    check_zero(out, "eta((nab_xi Q)y) = 0", residual);
  }

  {
    ScalarExpr dtau_xi(spec.table);
    ScalarExpr dtt_xi(spec.table);
    for (int i = 0; i < d; ++i) {
      if (spec.xi[i] == 0) continue;
      ScalarExpr a = bundle.conn.deriv(i, bundle.tau);
      a *= spec.xi[i];
      dtau_xi += a;
      ScalarExpr b = bundle.conn.deriv(i, bundle.tau_tilde);
      b *= spec.xi[i];
      dtt_xi += b;
    }
    ScalarExpr r1 = dtau_xi;
    ScalarExpr rhs1 = bundle.tau_tilde;
    rhs1 -= ScalarExpr::constant(spec.table, two_n);
    rhs1 *= Rational(2);
    r1 -= rhs1;
    check_zero_scalar(out, "d tau(xi) = 2(tau~ - 2n)", r1);

    ScalarExpr r2 = dtt_xi;
    ScalarExpr rhs2 = bundle.tau;
    rhs2 -= ScalarExpr::constant(spec.table, two_n);
    rhs2 *= Rational(-2);
    r2 -= rhs2;
    check_zero_scalar(out, "d tau~(xi) = -2(tau - 2n)", r2);
  }

  return out;
}

}  // namespace acbm
