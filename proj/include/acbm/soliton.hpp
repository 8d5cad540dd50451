#pragma once

#include <array>
#include <optional>

#include "acbm/curvature.hpp"

namespace acbm {

enum class FitStatus {
  ExactConstantFit,
  ExactFunctionFit,  // coefficients are circular-free coordinate polynomials
  NoFit,
  RankDeficient,  // consistent but underdetermined: no canonical triple
};

const char* to_string(FitStatus s);

// Result of solving S = c0 * g + c1 * g~ + c2 * (eta x eta) exactly, by
// equating coefficients per (component, monomial). The three basis tensors
// are constant, so the system decouples monomial by monomial; non-constant
// solutions are accepted only when every coefficient is circular-free.
struct FitResult {
  FitStatus status = FitStatus::NoFit;
  std::array<ScalarExpr, 3> coeffs;  // valid for the two exact statuses
  FrameTensor residual;              // S minus the fitted combination (zero when exact)
  // For NoFit: the first (i, j, monomial) the basis cannot reach (1-based
  // indices; monomial printed as an expression term).
  struct Witness {
    int i = 0;
    int j = 0;
    std::string monomial;
  };
  std::optional<Witness> witness;
  int solution_space_dim = 0;  // for RankDeficient

  bool exact() const {
    return status == FitStatus::ExactConstantFit || status == FitStatus::ExactFunctionFit;
  }
};

// Shared solver; S must be a symmetric (0,2) tensor.
FitResult fit_against_structure_basis(const FrameTensor& s, const ManifoldSpec& spec);

// rho = a g + b g~ + c (eta x eta). Extra labels via the helpers below.
FitResult einstein_like_fit(const ManifoldSpec& spec, const CurvatureBundle& bundle);
bool fit_is_einstein(const FitResult& fit);      // b = c = 0
bool fit_is_eta_einstein(const FitResult& fit);  // b = 0

// 1/2 L_v g + rho + l g + m g~ + n (eta x eta) = 0, solved for (l, m, n).
FitResult soliton_fit(const ManifoldSpec& spec, const CurvatureBundle& bundle,
                      const FrameTensor& v);

// Pairing of the Einstein-like constants (a,b,c) with the potential-xi
// soliton constants (l,m,n): a+l = 0, b+m-1 = 0, c+n+1 = 0, a+b+c = 2n,
// l+m+n = -2n, plus the special-case labels
//   (i)  m = 0            eta-Ricci soliton
//   (ii) m = n = 0        shrinking Ricci soliton, l = -2n
//   (iii) b = 0           eta-Einstein, constants (a, 0, 2n - a)
//   (iv) b = c = 0        Einstein with a = 2n
// Preconditions: both fits constant-exact.
CheckList theorem_2_1_bridge(const FitResult& einstein, const FitResult& xi_soliton, int n);

// Identity suite for a constant-exact Ricci-like soliton with an arbitrary
// potential on a Sasaki-like spec: l+m+n = -2n, nab_xi v = -phi v, L_v xi = 0,
// (L_v rho)(x, xi) = 0 twice (Lie derivative vs closed form), tau = 2n, the
// connection Lie derivative spot check (L_v nab)(x, xi) = -2 Q phi x, and,
// when the Einstein-like fit is exact, rho = 2n eta x eta with tau = tau~ = 2n.
CheckList theorem_3_suite(const ManifoldSpec& spec, const CurvatureBundle& bundle,
                          const FrameTensor& v, const FitResult& fit);

}  // namespace acbm
