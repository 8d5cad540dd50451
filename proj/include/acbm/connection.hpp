#pragma once

#include "acbm/manifold.hpp"
#include "acbm/tensor.hpp"

namespace acbm {

// Affine connection in frame components: (nab_{e_i} e_j)^k = Gamma(i,j,k).
struct Connection {
  SymbolTablePtr table;
  int dim = 0;
  std::vector<ScalarExpr> gamma;  // flattened [i][j][k]
  FrameDerivation deriv;

  const ScalarExpr& Gamma(int i, int j, int k) const { return gamma[(i * dim + j) * dim + k]; }
  ScalarExpr& Gamma(int i, int j, int k) { return gamma[(i * dim + j) * dim + k]; }
};

// Levi-Civita connection of a constant frame metric via the Koszul formula;
// with constant metric components the derivative terms drop and
// 2 g(nab_{e_i} e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j).
Connection koszul_connection(const ManifoldSpec& spec);
// Same construction for any constant symmetric invertible metric on the same
// frame (used for the associated metric).
Connection koszul_connection(const ManifoldSpec& spec, const MetricData& metric);

// nab T, rank (r, s+1): the new derivative slot is prepended, so
// (nab T)[i, rest...] = e_i(T[rest]) +/- Gamma corrections per slot.
FrameTensor covariant_derivative(const FrameTensor& t, const Connection& conn);

// (L_v g)(x,y) = g(nab_x v, y) + g(x, nab_y v).
FrameTensor lie_derivative_metric(const FrameTensor& v, const Connection& conn,
                                  const MetricData& metric);

// (L_v T)(x,y) = (nab_v T)(x,y) + T(nab_x v, y) + T(x, nab_y v) for (0,2) T.
FrameTensor lie_derivative_sym2(const FrameTensor& t, const FrameTensor& v,
                                const Connection& conn);

// (L_v nab)(x,y) = nab_x nab_y v - nab_{nab_x y} v + R(v,x)y, symmetric in
// (x,y) for torsion-free nab; r13 is the (1,3) curvature of conn.
FrameTensor lie_derivative_connection(const FrameTensor& v, const Connection& conn,
                                      const FrameTensor& r13);

}  // namespace acbm
