#include "acbm/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "acbm/expr_parser.hpp"
#include "json.hpp"

namespace acbm {

using nlohmann::json;

FrameDerivation::FrameDerivation(SymbolTablePtr table, int dim,
                                 std::optional<FrameRealization> realization)
    : table_(std::move(table)), dim_(dim), realization_(std::move(realization)) {}

ScalarExpr FrameDerivation::operator()(int frame_index, const ScalarExpr& f) const {
  if (frame_index < 0 || frame_index >= dim_) throw std::out_of_range("frame index out of range");
  if (!realization_) {
    if (!f.is_constant())
      throw std::domain_error(
          "non-constant scalar on a manifold without a coordinate realization");
    return ScalarExpr(table_);
  }
  ScalarExpr out(table_);
  const int nc = table_ ? table_->coordinate_count() : 0;
  for (int a = 0; a < nc; ++a) {
    ScalarExpr term = realization_->a[frame_index][a];
    term *= f.partial(a);
    out += term;
  }
  return out;
}

FrameTensor ManifoldSpec::metric_tensor() const {
  return FrameTensor::build(table, dim, {Slot::Lower, Slot::Lower}, [this](std::span<const int> ix) {
    return ScalarExpr::constant(table, metric.g[ix[0]][ix[1]]);
  });
}

FrameTensor ManifoldSpec::phi_tensor() const {
  return FrameTensor::build(table, dim, {Slot::Lower, Slot::Upper}, [this](std::span<const int> ix) {
    return ScalarExpr::constant(table, phi[ix[1]][ix[0]]);
  });
}

FrameTensor ManifoldSpec::xi_tensor() const {
  return FrameTensor::build(table, dim, {Slot::Upper}, [this](std::span<const int> ix) {
    return ScalarExpr::constant(table, xi[ix[0]]);
  });
}

FrameTensor ManifoldSpec::eta_tensor() const {
  return FrameTensor::build(table, dim, {Slot::Lower}, [this](std::span<const int> ix) {
    return ScalarExpr::constant(table, eta[ix[0]]);
  });
}

FrameTensor ManifoldSpec::vector_field_tensor(const std::string& name) const {
  auto it = vector_fields.find(name);
  if (it == vector_fields.end()) throw std::invalid_argument("unknown vector field: " + name);
  return FrameTensor::build(table, dim, {Slot::Upper},
                            [&](std::span<const int> ix) { return it->second[ix[0]]; });
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw std::invalid_argument("manifest field '" + field + "': " + what);
}

const json& require(const json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end()) throw std::invalid_argument(std::string("manifest is missing field '") + field + "'");
  return *it;
}

Rational constant_from_json(const json& j, const std::map<std::string, Rational>& params,
                            const std::string& field) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_constant(j.get<std::string>(), params);
  } catch (const std::exception& e) {
    fail(field, e.what());
  }
  fail(field, "expected a rational (integer or string)");
}

RationalMatrix matrix_from_json(const json& j, int rows, int cols,
                                const std::map<std::string, Rational>& params,
                                const std::string& field) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) fail(field, "expected " + std::to_string(rows) + " rows");
  RationalMatrix m(rows, std::vector<Rational>(cols));
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      fail(field, "row " + std::to_string(r + 1) + ": expected " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c)
      m[r][c] = constant_from_json(j[r][c], params,
                                   field + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]");
  }
  return m;
}

std::vector<Rational> vector_from_json(const json& j, int len,
                                       const std::map<std::string, Rational>& params,
                                       const std::string& field) {
  if (!j.is_array() || static_cast<int>(j.size()) != len) fail(field, "expected " + std::to_string(len) + " entries");
  std::vector<Rational> v(len);
  for (int i = 0; i < len; ++i)
    v[i] = constant_from_json(j[i], params, field + "[" + std::to_string(i + 1) + "]");
  return v;
}

ScalarExpr expr_from_json(const json& j, const SymbolTablePtr& table,
                          const std::map<std::string, Rational>& params, const std::string& field) {
  if (!j.is_string()) fail(field, "expected an expression string");
  try {
    return parse_expression(j.get<std::string>(), table, params);
  } catch (const std::exception& e) {
    fail(field, e.what());
  }
}

// Deterministic generic points for the numeric invertibility probe.
std::vector<std::vector<double>> probe_points(int ncoord, int count) {
  std::mt19937 rng(912871u);
  std::uniform_real_distribution<double> dist(-0.8, 0.8);
  std::vector<std::vector<double>> pts(count, std::vector<double>(ncoord));
  for (auto& p : pts)
    for (auto& x : p) x = dist(rng);
  return pts;
}

double numeric_determinant(std::vector<std::vector<double>> m) {
  const int n = static_cast<int>(m.size());
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
    if (std::abs(m[pivot][c]) < 1e-14) return 0.0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      const double f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace

ManifoldSpec parse_manifest(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("manifest JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("manifest root must be an object");

  ManifoldSpec spec;
  spec.dim = require(doc, "dim").get<int>();
  spec.n = require(doc, "n").get<int>();
  if (spec.n <= 0 || spec.dim != 2 * spec.n + 1)
    throw std::invalid_argument("manifest requires dim == 2n+1 with n >= 1");

  const json& frame = require(doc, "frame");
  if (!frame.is_array() || static_cast<int>(frame.size()) != spec.dim)
    fail("frame", "expected " + std::to_string(spec.dim) + " frame names");
  for (const auto& f : frame) spec.frame_names.push_back(f.get<std::string>());

  if (doc.contains("params")) {
    const json& params = doc["params"];
    if (!params.is_object()) fail("params", "expected an object");
    for (auto it = params.begin(); it != params.end(); ++it)
      spec.params[it.key()] = constant_from_json(it.value(), {}, "params." + it.key());
  }

  std::vector<std::string> coord_names;
  std::vector<SymbolTable::CircularPair> pairs;
  if (doc.contains("coordinates")) {
    const json& coords = doc["coordinates"];
    const json& names = require(coords, "names");
    if (!names.is_array()) fail("coordinates.names", "expected an array");
    for (const auto& nm : names) coord_names.push_back(nm.get<std::string>());
    if (coords.contains("circular_pairs")) {
      for (const auto& p : coords["circular_pairs"]) {
        SymbolTable::CircularPair cp;
        cp.sin_name = require(p, "sin").get<std::string>();
        cp.cos_name = require(p, "cos").get<std::string>();
        const std::string bound = require(p, "coordinate").get<std::string>();
        auto found = std::find(coord_names.begin(), coord_names.end(), bound);
        if (found == coord_names.end())
          fail("coordinates.circular_pairs", "unknown coordinate '" + bound + "'");
        cp.coord = static_cast<int>(found - coord_names.begin());
        pairs.push_back(std::move(cp));
      }
    }
  }
  try {
    spec.table = std::make_shared<const SymbolTable>(std::move(coord_names), std::move(pairs));
  } catch (const std::exception& e) {
    fail("coordinates", e.what());
  }

  spec.structure.assign(
      spec.dim, std::vector<std::vector<Rational>>(spec.dim, std::vector<Rational>(spec.dim)));
  if (doc.contains("brackets")) {
    const json& brackets = doc["brackets"];
    if (!brackets.is_array()) fail("brackets", "expected an array");
    int entry = 0;
    for (const auto& b : brackets) {
      ++entry;
      const std::string where = "brackets[" + std::to_string(entry) + "]";
      const int i = require(b, "i").get<int>();
      const int j = require(b, "j").get<int>();
      const int k = require(b, "k").get<int>();
      if (i < 1 || i > spec.dim || j < 1 || j > spec.dim || k < 1 || k > spec.dim)
        fail(where, "frame index out of range 1.." + std::to_string(spec.dim));
      if (i == j) fail(where, "bracket of a frame vector with itself");
      const Rational coeff = constant_from_json(require(b, "coeff"), spec.params, where + ".coeff");
      spec.structure[i - 1][j - 1][k - 1] += coeff;
      spec.structure[j - 1][i - 1][k - 1] -= coeff;
    }
  }

  RationalMatrix g = matrix_from_json(require(doc, "metric"), spec.dim, spec.dim, spec.params, "metric");
  for (int i = 0; i < spec.dim; ++i)
    for (int j = 0; j < i; ++j)
      if (g[i][j] != g[j][i]) fail("metric", "matrix is not symmetric");
  try {
    spec.metric = MetricData::from_matrix(std::move(g));
  } catch (const std::exception& e) {
    fail("metric", e.what());
  }
  spec.phi = matrix_from_json(require(doc, "phi"), spec.dim, spec.dim, spec.params, "phi");
  spec.xi = vector_from_json(require(doc, "xi"), spec.dim, spec.params, "xi");
  spec.eta = vector_from_json(require(doc, "eta"), spec.dim, spec.params, "eta");

  const int nc = spec.table->coordinate_count();
  if (doc.contains("frame_realization")) {
    if (nc != spec.dim)
      fail("frame_realization", "requires exactly dim coordinates (got " + std::to_string(nc) + ")");
    const json& rj = doc["frame_realization"];
    if (!rj.is_array() || static_cast<int>(rj.size()) != spec.dim)
      fail("frame_realization", "expected " + std::to_string(spec.dim) + " rows");
    FrameRealization real;
    real.a.resize(spec.dim);
    for (int i = 0; i < spec.dim; ++i) {
      if (!rj[i].is_array() || static_cast<int>(rj[i].size()) != nc)
        fail("frame_realization", "row " + std::to_string(i + 1) + ": expected " +
                                      std::to_string(nc) + " entries");
      for (int a = 0; a < nc; ++a)
        real.a[i].push_back(expr_from_json(rj[i][a], spec.table, spec.params,
                                           "frame_realization[" + std::to_string(i + 1) + "][" +
                                               std::to_string(a + 1) + "]"));
    }
    spec.realization = std::move(real);
  }
  spec.derivation = FrameDerivation(spec.table, spec.dim, spec.realization);

  if (doc.contains("vector_fields")) {
    const json& vf = doc["vector_fields"];
    if (!vf.is_object()) fail("vector_fields", "expected an object");
    for (auto it = vf.begin(); it != vf.end(); ++it) {
      const std::string where = "vector_fields." + it.key();
      if (!it.value().is_array() || static_cast<int>(it.value().size()) != spec.dim)
        fail(where, "expected " + std::to_string(spec.dim) + " components");
      std::vector<ScalarExpr> comps;
      for (int i = 0; i < spec.dim; ++i) {
        comps.push_back(expr_from_json(it.value()[i], spec.table, spec.params,
                                       where + "[" + std::to_string(i + 1) + "]"));
        if (!spec.realization && !comps.back().is_constant())
          fail(where, "non-constant component on a manifold without a coordinate realization");
      }
      spec.vector_fields[it.key()] = std::move(comps);
    }
  }

  if (doc.contains("functions")) {
    const json& fj = doc["functions"];
    if (!fj.is_object()) fail("functions", "expected an object");
    for (auto it = fj.begin(); it != fj.end(); ++it) {
      ScalarExpr f = expr_from_json(it.value(), spec.table, spec.params, "functions." + it.key());
      if (!spec.realization && !f.is_constant())
        fail("functions." + it.key(),
             "non-constant function on a manifold without a coordinate realization");
      spec.functions[it.key()] = std::move(f);
    }
  }

  return spec;
}

ManifoldSpec parse_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open manifest file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

std::string serialize_manifest(const ManifoldSpec& spec) {
  json doc;
  doc["dim"] = spec.dim;
  doc["n"] = spec.n;
  doc["frame"] = spec.frame_names;

  if (!spec.params.empty()) {
    json pj = json::object();
    for (const auto& [name, value] : spec.params) pj[name] = to_string(value);
    doc["params"] = pj;
  }

  if (spec.table->coordinate_count() > 0) {
    json cj;
    json names = json::array();
    for (int c = 0; c < spec.table->coordinate_count(); ++c)
      names.push_back(spec.table->coordinate_name(c));
    cj["names"] = names;
    if (spec.table->pair_count() > 0) {
      json pairs = json::array();
      for (int p = 0; p < spec.table->pair_count(); ++p) {
        const auto& cp = spec.table->pair(p);
        pairs.push_back({{"sin", cp.sin_name},
                         {"cos", cp.cos_name},
                         {"coordinate", spec.table->coordinate_name(cp.coord)}});
      }
      cj["circular_pairs"] = pairs;
    }
    doc["coordinates"] = cj;
  }

  json brackets = json::array();
  for (int i = 0; i < spec.dim; ++i)
    for (int j = i + 1; j < spec.dim; ++j)
      for (int k = 0; k < spec.dim; ++k)
        if (spec.structure[i][j][k] != 0)
          brackets.push_back({{"i", i + 1},
                              {"j", j + 1},
                              {"k", k + 1},
                              {"coeff", to_string(spec.structure[i][j][k])}});
  if (!brackets.empty()) doc["brackets"] = brackets;

  auto matrix_to_json = [](const RationalMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) {
      json row = json::array();
      for (const auto& v : r) row.push_back(to_string(v));
      rows.push_back(row);
    }
    return rows;
  };
  doc["metric"] = matrix_to_json(spec.metric.g);
  doc["phi"] = matrix_to_json(spec.phi);
  json xi = json::array(), eta = json::array();
  for (const auto& v : spec.xi) xi.push_back(to_string(v));
  for (const auto& v : spec.eta) eta.push_back(to_string(v));
  doc["xi"] = xi;
  doc["eta"] = eta;

  if (spec.realization) {
    json rows = json::array();
    for (const auto& r : spec.realization->a) {
      json row = json::array();
      for (const auto& e : r) row.push_back(e.to_string());
      rows.push_back(row);
    }
    doc["frame_realization"] = rows;
  }

  if (!spec.vector_fields.empty()) {
    json vf = json::object();
    for (const auto& [name, comps] : spec.vector_fields) {
      json row = json::array();
      for (const auto& e : comps) row.push_back(e.to_string());
      vf[name] = row;
    }
    doc["vector_fields"] = vf;
  }
  if (!spec.functions.empty()) {
    json fj = json::object();
    for (const auto& [name, f] : spec.functions) fj[name] = f.to_string();
    doc["functions"] = fj;
  }

  return doc.dump(2) + "\n";
}

CheckList validate_structure(const ManifoldSpec& spec) {
  CheckList out;
  const int d = spec.dim;

  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j)
        for (int k = 0; k < d && ok; ++k)
          if (spec.structure[i][j][k] != -spec.structure[j][i][k]) {
            ok = false;
            detail = "violated at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                     std::to_string(k + 1) + ")";
          }
    out.add("bracket antisymmetry", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < d && ok; ++i)
      for (int j = i + 1; j < d && ok; ++j)
        for (int k = j + 1; k < d && ok; ++k)
          for (int l = 0; l < d && ok; ++l) {
            Rational r = 0;
            for (int m = 0; m < d; ++m)
              r += spec.c(i, j, m) * spec.c(m, k, l) + spec.c(j, k, m) * spec.c(m, i, l) +
                   spec.c(k, i, m) * spec.c(m, j, l);
            if (r != 0) {
              ok = false;
              detail = "residual " + to_string(r) + " at (i,j,k -> l) = (" + std::to_string(i + 1) +
                       "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + " -> " +
                       std::to_string(l + 1) + ")";
            }
          }
    out.add("Jacobi identity", ok, detail);
  }

  {
    Inertia sig = inertia(spec.metric.g);
    const bool ok = sig.positive == spec.n + 1 && sig.negative == spec.n && sig.zero == 0;
    out.add("metric signature (n+1, n)", ok,
            ok ? "" : "found (+" + std::to_string(sig.positive) + ", -" +
                          std::to_string(sig.negative) + ", 0:" + std::to_string(sig.zero) + ")");
  }

  auto report_matrix = [&](const std::string& name, const RationalMatrix& residual) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (residual[i][j] != 0) {
          out.add(name, false,
                  "residual " + to_string(residual[i][j]) + " at (" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + ")");
          return;
        }
    out.add(name, true, "");
  };

  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < d; ++i) {
      Rational r = 0;
      for (int j = 0; j < d; ++j) r += spec.phi[i][j] * spec.xi[j];
      if (r != 0 && ok) {
        ok = false;
        detail = "component " + std::to_string(i + 1) + " = " + to_string(r);
      }
    }
    out.add("phi(xi) = 0", ok, detail);
  }

  {
    RationalMatrix residual(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational r = 0;
        for (int k = 0; k < d; ++k) r += spec.phi[i][k] * spec.phi[k][j];
        r += (i == j ? Rational(1) : Rational(0));
        r -= spec.xi[i] * spec.eta[j];
        residual[i][j] = r;
      }
    report_matrix("phi^2 = -id + eta (x) xi", residual);
  }

  {
    bool ok = true;
    std::string detail;
    for (int j = 0; j < d; ++j) {
      Rational r = 0;
      for (int i = 0; i < d; ++i) r += spec.eta[i] * spec.phi[i][j];
      if (r != 0 && ok) {
        ok = false;
        detail = "component " + std::to_string(j + 1) + " = " + to_string(r);
      }
    }
    out.add("eta o phi = 0", ok, detail);
  }

  {
    Rational r = 0;
    for (int i = 0; i < d; ++i) r += spec.eta[i] * spec.xi[i];
    out.add("eta(xi) = 1", r == 1, r == 1 ? "" : "eta(xi) = " + to_string(r));
  }

  {
    RationalMatrix residual(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational r = 0;
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) r += spec.phi[k][i] * spec.metric.g[k][l] * spec.phi[l][j];
        r += spec.metric.g[i][j];
        r -= spec.eta[i] * spec.eta[j];
        residual[i][j] = r;
      }
    report_matrix("g(phi.,phi.) = -g + eta (x) eta", residual);
  }

  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < d; ++i) {
      Rational r = -spec.eta[i];
      for (int j = 0; j < d; ++j) r += spec.metric.g[i][j] * spec.xi[j];
      if (r != 0 && ok) {
        ok = false;
        detail = "component " + std::to_string(i + 1) + " residual " + to_string(r);
      }
    }
    out.add("g(., xi) = eta", ok, detail);
  }

  {
    RationalMatrix residual(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational lhs = 0, rhs = 0;
        for (int k = 0; k < d; ++k) {
          lhs += spec.phi[k][i] * spec.metric.g[k][j];
          rhs += spec.metric.g[i][k] * spec.phi[k][j];
        }
        residual[i][j] = lhs - rhs;
      }
    report_matrix("g(phi., .) = g(., phi.)", residual);
  }

  if (spec.realization) {
    const auto& A = spec.realization->a;
    const int nc = spec.table->coordinate_count();
    bool ok = true;
    std::string detail;
    for (int i = 0; i < d && ok; ++i)
      for (int j = i + 1; j < d && ok; ++j)
        for (int b = 0; b < nc && ok; ++b) {
          ScalarExpr lhs = spec.derivation(i, A[j][b]);
          lhs -= spec.derivation(j, A[i][b]);
          for (int k = 0; k < d; ++k) {
            ScalarExpr t = A[k][b];
            t *= spec.c(i, j, k);
            lhs -= t;
          }
          if (!lhs.is_zero()) {
            ok = false;
            detail = "[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                     "] component d/d" + spec.table->coordinate_name(b) + " residual " +
                     lhs.to_string();
          }
        }
    out.add("brackets match coordinate realization", ok, detail);

    bool inv_ok = true;
    std::string inv_detail;
    for (const auto& pt : probe_points(nc, 5)) {
      std::vector<std::vector<double>> m(d, std::vector<double>(nc));
      for (int i = 0; i < d; ++i)
        for (int a = 0; a < nc; ++a) m[i][a] = A[i][a].evaluate(pt);
      const double det = numeric_determinant(m);
      if (std::abs(det) < 1e-9) {
        inv_ok = false;
        inv_detail = "|det| = " + std::to_string(std::abs(det)) + " at a probe point";
        break;
      }
    }
    out.add("frame realization invertible at generic points", inv_ok, inv_detail);
  }

  return out;
}

RationalMatrix associated_metric(const ManifoldSpec& spec) {
  const int d = spec.dim;
  RationalMatrix gt(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational r = spec.eta[i] * spec.eta[j];
      for (int k = 0; k < d; ++k) r += spec.metric.g[i][k] * spec.phi[k][j];
      gt[i][j] = r;
    }
  return gt;
}

}  // namespace acbm
