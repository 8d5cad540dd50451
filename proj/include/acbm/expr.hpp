#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "acbm/rational.hpp"
#include "acbm/symbols.hpp"

namespace acbm {

// Exponent vector over the symbol table's universe, one entry per symbol.
using Monomial = std::vector<std::uint32_t>;

// Element of Q[x_1..x_m, sin_k, cos_k] / (sin_k^2 + cos_k^2 - 1), kept in the
// canonical form where every sin exponent is 0 or 1 (sin^2 rewrites to
// 1 - cos^2 on construction). Two expressions are equal iff their canonical
// term maps coincide, so operator== is exact ring equality.
class ScalarExpr {
 public:
  ScalarExpr() = default;  // zero over the empty table
  explicit ScalarExpr(SymbolTablePtr table) : table_(std::move(table)) {}

  static ScalarExpr constant(SymbolTablePtr table, Rational value);
  static ScalarExpr symbol(SymbolTablePtr table, int symbol_index);

  const SymbolTablePtr& table() const { return table_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term; equals the whole value when is_constant().
  Rational constant_value() const;
  // True if no monomial touches a sin/cos symbol.
  bool is_circular_free() const;
  // Total degree of the largest-degree term (0 for constants and zero).
  int degree() const;

  ScalarExpr operator-() const;
  ScalarExpr& operator+=(const ScalarExpr& rhs);
  ScalarExpr& operator-=(const ScalarExpr& rhs);
  ScalarExpr& operator*=(const ScalarExpr& rhs);
  ScalarExpr& operator*=(const Rational& scale);
  ScalarExpr& operator/=(const Rational& divisor);
  ScalarExpr pow(unsigned exponent) const;

  // d/d(coordinate k); sin/cos symbols bound to k differentiate through.
  ScalarExpr partial(int coordinate) const;

  // Evaluates at a point given by one double per coordinate (table order).
  double evaluate(std::span<const double> coords) const;

  std::string to_string() const;

  friend bool operator==(const ScalarExpr& a, const ScalarExpr& b);
  friend bool operator!=(const ScalarExpr& a, const ScalarExpr& b) { return !(a == b); }

 private:
  void add_term(Monomial m, const Rational& c);
  void require_compatible(const ScalarExpr& other) const;

  SymbolTablePtr table_;
  std::map<Monomial, Rational> terms_;
};

ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b);
ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b);
ScalarExpr operator*(ScalarExpr a, const ScalarExpr& b);
ScalarExpr operator*(ScalarExpr a, const Rational& s);
ScalarExpr operator*(const Rational& s, ScalarExpr a);

}  // namespace acbm
