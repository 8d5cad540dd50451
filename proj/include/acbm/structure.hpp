#pragma once

#include "acbm/curvature.hpp"

namespace acbm {

// F(x,y,z) = g((nab_x phi) y, z).
FrameTensor fundamental_tensor(const ManifoldSpec& spec, const Connection& conn);

// The symmetry suite of F:
//   F(x,y,z) = F(x,z,y)
//   F(x,y,z) = F(x, phi y, phi z) + eta(y) F(x, xi, z) + eta(z) F(x, y, xi).
CheckList fundamental_tensor_properties(const ManifoldSpec& spec, const FrameTensor& f);

struct StructureReport {
  bool is_sasaki_like = false;
  FrameTensor f;         // fundamental tensor
  FrameTensor residual;  // (nab phi) minus the defining right-hand side, (1,2)-shaped
  CheckList checks;      // residual check + consequence identities when it holds
};

// Tests (nab_x phi) y = -g(x,y) xi - eta(y) x + 2 eta(x) eta(y) xi exactly;
// when it holds, additionally asserts the direct consequences
// (nab xi = -phi, nab eta, R(x,y)xi, rho(x,xi), R(xi,y)z, rho(xi,xi) = 2n).
StructureReport sasaki_like_test(const ManifoldSpec& spec, const CurvatureBundle& bundle);

// Deeper identity suite for a Sasaki-like spec: rho* relation, the four-term
// phi-curvature identity, tau~ = -tau* + 2n (against the definitional tau~),
// Q phi = phi Q, the nab Q identities, and d tau(xi) / d tau~(xi) relations.
CheckList sasaki_consequence_suite(const ManifoldSpec& spec, const CurvatureBundle& bundle);

}  // namespace acbm
