#include "doctest.h"

#include "acbm/curvature.hpp"
#include "helpers.hpp"

using namespace acbm;

namespace {

Rational value(const FrameTensor& t, std::initializer_list<int> idx) {
  return t.at(idx).constant_value();
}

}  // namespace

TEST_CASE("curvature of the 3-dimensional example") {
  ManifoldSpec spec = load_fixture("example2.json");
  CurvatureBundle b = curvature_bundle(spec);

  CHECK(value(b.r04, {0, 1, 1, 0}) == Rational(1));   // R(e1,e2,e2,e1)
  CHECK(value(b.r04, {0, 2, 2, 0}) == Rational(1));   // R(e1,e3,e3,e1)
  CHECK(value(b.r04, {1, 2, 2, 1}) == Rational(-1));  // R(e2,e3,e3,e2)
  CHECK(value(b.r04, {0, 1, 0, 1}) == Rational(-1));
  int nonzero = 0;
  for (int flat = 0; flat < b.r04.size(); ++flat)
    if (!b.r04.flat_at(flat).is_zero()) ++nonzero;
  CHECK(nonzero == 12);

  CHECK(value(b.ricci, {2, 2}) == Rational(2));
  CHECK(b.ricci.at({0, 0}).is_zero());
  CHECK(b.ricci.at({0, 1}).is_zero());
  CHECK(b.tau == ScalarExpr::constant(spec.table, 2));
  CHECK(b.tau_star.is_zero());
  CHECK(b.tau_tilde == ScalarExpr::constant(spec.table, 2));

  // Ricci operator Q raises one index: here rho = 2 eta x eta gives Q = 2 eta x xi
  CHECK(value(b.q, {2, 2}) == Rational(2));
  CHECK(b.q.at({0, 0}).is_zero());

  CHECK(value(b.ricci_star, {0, 1}) == Rational(-1));
  CHECK(value(b.ricci_star, {1, 0}) == Rational(-1));
}

TEST_CASE("curvature of the 5-dimensional example") {
  ManifoldSpec spec = load_fixture("example1.json");
  CurvatureBundle b = curvature_bundle(spec);
  // rho = 2n eta x eta with eta dual to e0
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      Rational expected = 4 * spec.eta[i] * spec.eta[j];
      CHECK(value(b.ricci, {i, j}) == expected);
    }
  CHECK(b.tau == ScalarExpr::constant(spec.table, 4));
  CHECK(b.tau_star.is_zero());
  CHECK(b.tau_tilde == ScalarExpr::constant(spec.table, 4));
}

TEST_CASE("algebraic curvature symmetries") {
  for (const char* name : {"example1.json", "example2.json"}) {
    CAPTURE(name);
    ManifoldSpec spec = load_fixture(name);
    CurvatureBundle b = curvature_bundle(spec);
    const int d = spec.dim;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        CHECK(b.ricci.at({i, j}) == b.ricci.at({j, i}));
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) {
            const ScalarExpr& r = b.r04.at({i, j, k, l});
            CHECK(b.r04.at({j, i, k, l}) == -r);
            CHECK(b.r04.at({i, j, l, k}) == -r);
            CHECK(b.r04.at({k, l, i, j}) == r);
            ScalarExpr bianchi = r;
            bianchi += b.r04.at({j, k, i, l});
            bianchi += b.r04.at({k, i, j, l});
            CHECK(bianchi.is_zero());
          }
      }
  }
}

TEST_CASE("flat fixture is flat") {
  ManifoldSpec spec = load_fixture("flat3.json");
  CurvatureBundle b = curvature_bundle(spec);
  CHECK(b.r04.is_zero());
  CHECK(b.ricci.is_zero());
  CHECK(b.tau.is_zero());
  CHECK(b.tau_tilde.is_zero());
}

TEST_CASE("scalar curvature path agrees with the bundle") {
  for (const char* name : {"example1.json", "example2.json"}) {
    CAPTURE(name);
    ManifoldSpec spec = load_fixture(name);
    CurvatureBundle b = curvature_bundle(spec);
    CHECK(scalar_curvature_for_metric(spec, spec.metric) == b.tau);
  }
}

TEST_CASE("sectional curvatures") {
  ManifoldSpec spec = load_fixture("example2.json");
  CurvatureBundle b = curvature_bundle(spec);
  auto basis_vector = [&](std::vector<Rational> comps) {
    return FrameTensor::build(spec.table, 3, {Slot::Upper}, [&](std::span<const int> ix) {
      return ScalarExpr::constant(spec.table, comps[ix[0]]);
    });
  };
  FrameTensor e1 = basis_vector({1, 0, 0});
  FrameTensor e2 = basis_vector({0, 1, 0});
  FrameTensor e3 = basis_vector({0, 0, 1});

  CHECK(sectional_curvature(b.r04, spec.metric, e1, e2) ==
        ScalarExpr::constant(spec.table, -1));
  CHECK(sectional_curvature(b.r04, spec.metric, e1, e3) ==
        ScalarExpr::constant(spec.table, 1));
  CHECK(sectional_curvature(b.r04, spec.metric, e2, e3) ==
        ScalarExpr::constant(spec.table, 1));

  // invariant under a change of basis of the same 2-plane
  FrameTensor x = basis_vector({1, 2, 0});
  FrameTensor y = basis_vector({0, 3, 0});
  CHECK(sectional_curvature(b.r04, spec.metric, x, y) ==
        ScalarExpr::constant(spec.table, -1));

  // span{e3, xi} is 1-dimensional: the section degenerates
  CHECK_THROWS_AS(sectional_curvature(b.r04, spec.metric, e3, spec.xi_as_field()),
                  std::domain_error);
}

TEST_CASE("distinguished sections report") {
  ManifoldSpec spec = load_fixture("example2.json");
  CurvatureBundle b = curvature_bundle(spec);
  auto sections = special_sections_report(spec, b);
  REQUIRE(sections.size() == 6);

  CHECK(sections[0].kind == "phi-holomorphic");
  CHECK(sections[0].basis == "span(phi e1, phi^2 e1)");
  CHECK(!sections[0].degenerate);
  CHECK(sections[0].k == ScalarExpr::constant(spec.table, -1));
  CHECK(!sections[1].degenerate);
  CHECK(sections[1].k == ScalarExpr::constant(spec.table, -1));
  CHECK(sections[2].degenerate);  // phi e3 = 0

  CHECK(sections[3].kind == "xi");
  CHECK(sections[3].basis == "span(e1, xi)");
  CHECK(sections[3].k == ScalarExpr::constant(spec.table, 1));
  CHECK(sections[4].k == ScalarExpr::constant(spec.table, 1));
  CHECK(sections[5].degenerate);  // e3 = xi
}

TEST_CASE("r13 matches the lowered tensor") {
  ManifoldSpec spec = load_fixture("example1.json");
  Connection conn = koszul_connection(spec);
  FrameTensor r13 = curvature_r13(spec, conn);
  CurvatureBundle b = curvature_bundle(spec);
  const int d = spec.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          ScalarExpr lowered(spec.table);
          for (int m = 0; m < d; ++m) {
            if (spec.metric.g[m][l] == 0) continue;
            ScalarExpr t = r13.at({i, j, k, m});
            t *= spec.metric.g[m][l];
            lowered += t;
          }
          CHECK(lowered == b.r04.at({i, j, k, l}));
        }
}
