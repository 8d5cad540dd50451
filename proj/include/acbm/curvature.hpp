#pragma once

#include "acbm/connection.hpp"
#include "acbm/manifold.hpp"

namespace acbm {

// Everything downstream of the Levi-Civita connection, in the fixed sign
// convention R(x,y)z = nab_x nab_y z - nab_y nab_x z - nab_{[x,y]} z,
// R(x,y,z,w) = g(R(x,y)z, w), rho(y,z) = g^{ij} R(e_i, y, z, e_j).
struct CurvatureBundle {
  Connection conn;
  FrameTensor r13;         // [x, y, z, value]
  FrameTensor r04;         // (0,4)
  FrameTensor ricci;       // (0,2)
  FrameTensor ricci_star;  // rho*(y,z) = g^{ij} R(e_i, y, z, phi e_j)
  FrameTensor q;           // Ricci operator, slots [Lower, Upper]
  ScalarExpr tau;
  ScalarExpr tau_star;     // g^{ij} rho(e_i, phi e_j)
  ScalarExpr tau_tilde;    // scalar curvature of the associated metric
};

CurvatureBundle curvature_bundle(const ManifoldSpec& spec);

// (1,3) curvature of an arbitrary connection on the spec's frame.
FrameTensor curvature_r13(const ManifoldSpec& spec, const Connection& conn);

// Scalar curvature of any constant symmetric invertible frame metric on the
// same underlying bracket algebra (definitional path used for tau_tilde).
ScalarExpr scalar_curvature_for_metric(const ManifoldSpec& spec, const MetricData& metric);

// k(x,y) = R(x,y,y,x) / (g(x,x) g(y,y) - g(x,y)^2); the denominator must be a
// nonzero constant, otherwise std::domain_error (degenerate section).
ScalarExpr sectional_curvature(const FrameTensor& r04, const MetricData& metric,
                               const FrameTensor& x, const FrameTensor& y);

// Frame-generated distinguished sections: {phi e_i, phi^2 e_i} and {e_i, xi}.
struct SectionEntry {
  std::string kind;         // "phi-holomorphic" or "xi"
  std::string basis;        // human-readable span description
  bool degenerate = false;  // true when the induced metric on the span degenerates
  ScalarExpr k;             // valid when !degenerate
};
std::vector<SectionEntry> special_sections_report(const ManifoldSpec& spec,
                                                  const CurvatureBundle& bundle);

}  // namespace acbm
