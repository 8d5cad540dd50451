#pragma once

#include <optional>
#include <vector>

#include "acbm/rational.hpp"

namespace acbm {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix identity_matrix(int n);

// Exact inverse via Gaussian elimination with first-nonzero pivoting.
// Returns nullopt when singular.
std::optional<RationalMatrix> invert(const RationalMatrix& m);

// Inertia (positive, negative, zero counts) of a symmetric matrix, computed by
// exact symmetric congruence reduction; complete even with zero diagonals.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
Inertia inertia(RationalMatrix m);

// Solves A x = b exactly for a column vector b.
// Outcomes: unique solution; inconsistent (reports the 0-based index of the
// first offending input row); consistent but underdetermined (reports the
// nullity). Deterministic for identical inputs.
struct LinearSolveResult {
  enum class Status { Unique, Inconsistent, Underdetermined } status;
  std::vector<Rational> solution;   // valid when Unique
  int offending_row = -1;           // valid when Inconsistent
  int nullity = 0;                  // valid when Underdetermined
};
LinearSolveResult solve_linear(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace acbm
