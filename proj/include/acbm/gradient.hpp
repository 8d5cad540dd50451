#pragma once

#include "acbm/soliton.hpp"

namespace acbm {

// (grad f)^i = G^{ij} e_j(f); satisfies g(grad f, x) = x(f) for every frame x.
FrameTensor gradient_field(const ManifoldSpec& spec, const ScalarExpr& f);

// (Hess f)(x,y) = (nab_x df)(y); computed that way and cross-checked against
// g(nab_x grad f, y) internally (both must agree exactly, and be symmetric).
FrameTensor hessian(const ManifoldSpec& spec, const Connection& conn, const ScalarExpr& f);

// Delta f = g^{ij} (Hess f)_{ij}.
ScalarExpr laplacian(const ManifoldSpec& spec, const FrameTensor& hess);

struct GradientSolitonReport {
  FrameTensor grad;    // (1,0)
  FrameTensor hess;    // (0,2)
  ScalarExpr lap;
  bool trivial = false;  // grad f == 0
  FitResult fit;         // Hess f + rho + l g + m g~ + n (eta x eta) = 0
  CheckList checks;
};

// Fits the gradient-soliton equation and asserts the attached identities:
// 1/2 L_{grad f} g = Hess f (independent code paths), the trace identity
// Delta f + tau + (2n+1) l + m + n = 0, the derivative identity
// nab_x v = -Qx - l x - m phi x - (m+n) eta(x) xi, agreement with
// soliton_fit(grad f), and on Sasaki-like specs the forced conclusions
// tau = tau~ = 2n and rho = 2n eta x eta. Non-Sasaki specs run the
// Hessian/Laplacian checks only, with a warning entry.
GradientSolitonReport gradient_soliton_check(const ManifoldSpec& spec,
                                             const CurvatureBundle& bundle,
                                             const ScalarExpr& f);

}  // namespace acbm
