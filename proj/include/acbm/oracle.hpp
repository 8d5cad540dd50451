#pragma once

#include <vector>

#include "acbm/curvature.hpp"

namespace acbm {

// Floating-point cross-check of the exact curvature, fully independent of the
// Koszul path: build the coordinate metric from the realization, take central
// finite differences for Christoffel symbols and their derivatives, assemble
// the coordinate (0,4) curvature, pull it back to the moving frame at the
// point, and compare against the exact components evaluated there.
// Requires a coordinate realization.

// g_ab(x) = sum_{ij} G_ij (A^-1)[a][i] (A^-1)[b][j], evaluated numerically.
std::vector<std::vector<double>> coordinate_metric_numeric(const ManifoldSpec& spec,
                                                           const std::vector<double>& point);

struct OracleResult {
  double max_abs_diff = 0.0;
  int points_checked = 0;
};

// Frame-basis numeric (0,4) curvature at one point.
std::vector<double> numeric_curvature_r04(const ManifoldSpec& spec,
                                          const std::vector<double>& point, double step);

OracleResult oracle_compare(const ManifoldSpec& spec, const CurvatureBundle& bundle,
                            const std::vector<std::vector<double>>& points, double step);

// Deterministic pseudo-random points with coordinates in [-0.8, 0.8].
std::vector<std::vector<double>> oracle_default_points(const ManifoldSpec& spec, int count,
                                                       unsigned seed = 20200331);

inline constexpr double kOracleDefaultStep = 1e-4;
inline constexpr double kOracleDefaultTolerance = 1e-5;

}  // namespace acbm
