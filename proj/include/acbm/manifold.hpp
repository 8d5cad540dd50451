#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acbm/report.hpp"
#include "acbm/tensor.hpp"

namespace acbm {

// Coordinate realization of the frame: e_i = sum_a A[i][a] d/dx^a.
struct FrameRealization {
  std::vector<std::vector<ScalarExpr>> a;  // [frame][coordinate]
};

// Acts as the frame vector fields on scalars: e_i(f) = sum_a A[i][a] df/dx^a.
// Without a realization the spec is algebraic: scalars must be constants and
// every derivation vanishes.
class FrameDerivation {
 public:
  FrameDerivation() = default;
  FrameDerivation(SymbolTablePtr table, int dim, std::optional<FrameRealization> realization);

  ScalarExpr operator()(int frame_index, const ScalarExpr& f) const;
  bool has_realization() const { return realization_.has_value(); }
  const FrameRealization& realization() const { return *realization_; }

 private:
  SymbolTablePtr table_;
  int dim_ = 0;
  std::optional<FrameRealization> realization_;
};

// A manifold presented by frame data: structure constants, a constant frame
// metric, the almost-contact triple (phi, xi, eta), and optionally a
// coordinate realization plus named vector fields / functions.
struct ManifoldSpec {
  int dim = 0;
  int n = 0;  // dim == 2n + 1
  std::vector<std::string> frame_names;
  SymbolTablePtr table;

  // c[i][j][k]: [e_i, e_j] = sum_k c[i][j][k] e_k, antisymmetric in (i, j).
  std::vector<std::vector<std::vector<Rational>>> structure;
  MetricData metric;
  RationalMatrix phi;  // P[i][j] = component i of phi(e_j)
  std::vector<Rational> xi;
  std::vector<Rational> eta;

  std::optional<FrameRealization> realization;
  FrameDerivation derivation;
  std::map<std::string, std::vector<ScalarExpr>> vector_fields;
  std::map<std::string, ScalarExpr> functions;
  std::map<std::string, Rational> params;

  Rational c(int i, int j, int k) const { return structure[i][j][k]; }

  // Tensor views of the structure data.
  FrameTensor metric_tensor() const;      // (0,2)
  FrameTensor phi_tensor() const;         // slots [Lower j, Upper k]: phi[j,k] = P[k][j]
  FrameTensor xi_tensor() const;          // (1,0)
  FrameTensor eta_tensor() const;         // (0,1)
  FrameTensor vector_field_tensor(const std::string& name) const;
  FrameTensor xi_as_field() const { return xi_tensor(); }
};

// Parses a manifest document (JSON text). Params are substituted while
// parsing expressions. Throws ParseError / std::invalid_argument with field
// context on malformed input; structural axiom violations are NOT errors here
// (they land in validate_structure's report).
ManifoldSpec parse_manifest(const std::string& json_text);
ManifoldSpec parse_manifest_file(const std::string& path);

// Canonical re-serialization; parse(serialize(spec)) == serialize-identical.
std::string serialize_manifest(const ManifoldSpec& spec);

// Runs every structural check the input contract demands: bracket
// antisymmetry and Jacobi, metric signature (n+1, n), the almost-contact
// B-metric axioms, eta = g(., xi), and bracket/realization consistency plus
// generic invertibility of A when a realization is present.
CheckList validate_structure(const ManifoldSpec& spec);

// g~(x,y) = g(x, phi y) + eta(x) eta(y), returned as a constant matrix.
RationalMatrix associated_metric(const ManifoldSpec& spec);

}  // namespace acbm
