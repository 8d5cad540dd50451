#include <cmath>

#include "doctest.h"

#include "acbm/oracle.hpp"
#include "helpers.hpp"

using namespace acbm;

TEST_CASE("finite-difference oracle confirms the exact curvature") {
  ManifoldSpec spec = load_fixture("example2.json");
  CurvatureBundle b = curvature_bundle(spec);
  auto points = oracle_default_points(spec, 5);
  REQUIRE(points.size() == 5);
  OracleResult result = oracle_compare(spec, b, points, kOracleDefaultStep);
  CHECK(result.points_checked == 5);
  CHECK(result.max_abs_diff < kOracleDefaultTolerance);
}

TEST_CASE("oracle on the flat fixture is numerically zero") {
  ManifoldSpec spec = load_fixture("flat3.json");
  CurvatureBundle b = curvature_bundle(spec);
  OracleResult result = oracle_compare(spec, b, oracle_default_points(spec, 3), 1e-4);
  CHECK(result.max_abs_diff < 1e-9);
}

TEST_CASE("coordinate metric from the realization") {
  ManifoldSpec spec = load_fixture("example2.json");
  const double theta = 0.5;  // x3
  auto g = coordinate_metric_numeric(spec, {0.2, -0.4, theta});
  // rotating frame with fiber metric diag(1,-1,1) pushes to
  // [[cos 2t, sin 2t, 0], [sin 2t, -cos 2t, 0], [0, 0, 1]]
  CHECK(std::abs(g[0][0] - (std::cos(2 * theta))) < 1e-12);
  CHECK(std::abs(g[0][1] - (std::sin(2 * theta))) < 1e-12);
  CHECK(std::abs(g[1][1] - (-std::cos(2 * theta))) < 1e-12);
  CHECK(std::abs(g[2][2] - (1.0)) < 1e-12);
  CHECK(std::abs(g[0][2] - (0.0)) < 1e-12);
}

TEST_CASE("pointwise numeric curvature matches frozen components") {
  ManifoldSpec spec = load_fixture("example2.json");
  std::vector<double> point{0.3, -0.1, 0.6};
  auto flat = numeric_curvature_r04(spec, point, 1e-4);
  REQUIRE(flat.size() == 81);
  auto at = [&](int i, int j, int k, int l) { return flat[((i * 3 + j) * 3 + k) * 3 + l]; };
  CHECK(std::abs(at(0, 1, 1, 0) - (1.0)) < 1e-6);
  CHECK(std::abs(at(0, 2, 2, 0) - (1.0)) < 1e-6);
  CHECK(std::abs(at(1, 2, 2, 1) - (-1.0)) < 1e-6);
  CHECK(std::abs(at(0, 0, 0, 0) - (0.0)) < 1e-6);
}

TEST_CASE("oracle requires a realization") {
  ManifoldSpec spec = load_fixture("example1.json");
  CurvatureBundle b = curvature_bundle(spec);
  CHECK_THROWS_AS(numeric_curvature_r04(spec, {}, 1e-4), std::domain_error);
  CHECK_THROWS_AS(oracle_compare(spec, b, {{0.0}}, 1e-4), std::domain_error);
}
