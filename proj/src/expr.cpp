#include "acbm/expr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace acbm {

std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << "/" << denominator(q);
  return out.str();
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&]() -> Integer {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      ++pos;
    }
    return value;
  };
  Integer num = read_digits();
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_digits();
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  if (pos != text.size())
    throw std::invalid_argument("trailing characters in rational: '" + std::string(text) + "'");
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

namespace {

// Tables are compatible when structurally equal; a null table (default-
// constructed zero) is compatible with anything.
const SymbolTablePtr& merge_tables(const SymbolTablePtr& a, const SymbolTablePtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a.get() != b.get() && !a->same_structure(*b))
    throw std::invalid_argument("mismatched symbol tables");
  return a;
}

int symbol_count(const SymbolTablePtr& t) { return t ? t->symbol_count() : 0; }

}  // namespace

ScalarExpr ScalarExpr::constant(SymbolTablePtr table, Rational value) {
  ScalarExpr e(std::move(table));
  if (value != 0) e.terms_.emplace(Monomial(symbol_count(e.table_), 0), std::move(value));
  return e;
}

ScalarExpr ScalarExpr::symbol(SymbolTablePtr table, int symbol_index) {
  ScalarExpr e(std::move(table));
  if (!e.table_ || symbol_index < 0 || symbol_index >= e.table_->symbol_count())
    throw std::invalid_argument("symbol index out of range");
  Monomial m(e.table_->symbol_count(), 0);
  m[symbol_index] = 1;
  e.terms_.emplace(std::move(m), Rational(1));
  return e;
}

bool ScalarExpr::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

Rational ScalarExpr::constant_value() const {
  Monomial zero(symbol_count(table_), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool ScalarExpr::is_circular_free() const {
  if (!table_) return true;
  for (const auto& [m, c] : terms_) {
    for (int s = table_->coordinate_count(); s < table_->symbol_count(); ++s)
      if (m[s] != 0) return false;
  }
  return true;
}

int ScalarExpr::degree() const {
  int deg = 0;
  for (const auto& [m, c] : terms_) {
    int d = std::accumulate(m.begin(), m.end(), 0);
    deg = std::max(deg, d);
  }
  return deg;
}

void ScalarExpr::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  // tolerate monomials from a smaller (e.g. null-table constant) universe
  if (static_cast<int>(m.size()) != symbol_count(table_)) m.resize(symbol_count(table_), 0);
  if (table_) {
    // canonical form: sin exponents stay below 2 via sin^2 -> 1 - cos^2
    for (int p = 0; p < table_->pair_count(); ++p) {
      int si = table_->sin_index(p);
      if (m[si] >= 2) {
        Monomial without = m;
        without[si] -= 2;
        Monomial with_cos = without;
        with_cos[table_->cos_index(p)] += 2;
        add_term(std::move(without), c);
        add_term(std::move(with_cos), -c);
        return;
      }
    }
  }
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ScalarExpr ScalarExpr::operator-() const {
  ScalarExpr out(table_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& rhs) {
  table_ = merge_tables(table_, rhs.table_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& rhs) {
  table_ = merge_tables(table_, rhs.table_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ScalarExpr& ScalarExpr::operator*=(const ScalarExpr& rhs) {
  table_ = merge_tables(table_, rhs.table_);
  std::map<Monomial, Rational> lhs_terms;
  lhs_terms.swap(terms_);
  const int sc = symbol_count(table_);
  for (const auto& [ma, ca] : lhs_terms) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m(sc, 0);
      for (int s = 0; s < sc; ++s) {
        std::uint32_t ea = s < static_cast<int>(ma.size()) ? ma[s] : 0;
        std::uint32_t eb = s < static_cast<int>(mb.size()) ? mb[s] : 0;
        m[s] = ea + eb;
      }
      add_term(std::move(m), ca * cb);
    }
  }
  return *this;
}

ScalarExpr& ScalarExpr::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scale;
  return *this;
}

ScalarExpr& ScalarExpr::operator/=(const Rational& divisor) {
  if (divisor == 0) throw std::invalid_argument("division by zero");
  for (auto& [m, c] : terms_) c /= divisor;
  return *this;
}

ScalarExpr ScalarExpr::pow(unsigned exponent) const {
  ScalarExpr out = ScalarExpr::constant(table_, 1);
  for (unsigned i = 0; i < exponent; ++i) out *= *this;
  return out;
}

ScalarExpr ScalarExpr::partial(int coordinate) const {
  if (!table_ || coordinate < 0 || coordinate >= table_->coordinate_count()) {
    if (is_constant()) return ScalarExpr(table_);
    throw std::invalid_argument("coordinate index out of range");
  }
  ScalarExpr out(table_);
  for (const auto& [m, c] : terms_) {
    for (int s = 0; s < table_->symbol_count(); ++s) {
      if (m[s] == 0) continue;
      const auto& sym = table_->symbol(s);
      if (sym.coord != coordinate) continue;
      Rational factor = c * m[s];
      Monomial dm = m;
      dm[s] -= 1;
      switch (sym.kind) {
        case SymbolTable::Kind::Coordinate:
          out.add_term(std::move(dm), factor);
          break;
        case SymbolTable::Kind::Sin:
          dm[table_->cos_index(sym.pair)] += 1;
          out.add_term(std::move(dm), factor);
          break;
        case SymbolTable::Kind::Cos:
          dm[table_->sin_index(sym.pair)] += 1;
          out.add_term(std::move(dm), -factor);
          break;
      }
    }
  }
  return out;
}

double ScalarExpr::evaluate(std::span<const double> coords) const {
  const int nc = table_ ? table_->coordinate_count() : 0;
  if (static_cast<int>(coords.size()) != nc)
    throw std::invalid_argument("evaluation point has wrong number of coordinates");
  std::vector<double> values(symbol_count(table_));
  for (int s = 0; s < symbol_count(table_); ++s) {
    const auto& sym = table_->symbol(s);
    switch (sym.kind) {
      case SymbolTable::Kind::Coordinate: values[s] = coords[sym.coord]; break;
      case SymbolTable::Kind::Sin: values[s] = std::sin(coords[sym.coord]); break;
      case SymbolTable::Kind::Cos: values[s] = std::cos(coords[sym.coord]); break;
    }
  }
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = to_double(c);
    for (std::size_t s = 0; s < m.size(); ++s)
      for (std::uint32_t e = 0; e < m[s]; ++e) term *= values[s];
    total += term;
  }
  return total;
}

std::string ScalarExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::vector<std::string> factors;
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (m[s] == 0) continue;
      std::string f = table_->symbol(static_cast<int>(s)).name;
      if (m[s] > 1) f += "^" + std::to_string(m[s]);
      factors.push_back(std::move(f));
    }
    std::string piece;
    if (factors.empty()) {
      piece = acbm::to_string(mag);
    } else {
      // a leading unary minus must not sit directly before a powered symbol
      // ("-x^2" would parse as (-x)^2), so negative first terms keep an
      // explicit coefficient
      bool explicit_coeff = mag != 1 || (first && negative);
      piece = explicit_coeff ? acbm::to_string(mag) + "*" : "";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) piece += "*";
        piece += factors[i];
      }
    }
    if (first) {
      if (negative) out << "-";
      out << piece;
      first = false;
    } else {
      out << (negative ? " - " : " + ") << piece;
    }
  }
  return out.str();
}

bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
  merge_tables(a.table_, b.table_);  // structural compatibility check
  return a.terms_ == b.terms_;
}

ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) { return a += b; }
ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) { return a -= b; }
ScalarExpr operator*(ScalarExpr a, const ScalarExpr& b) { return a *= b; }
ScalarExpr operator*(ScalarExpr a, const Rational& s) { return a *= s; }
ScalarExpr operator*(const Rational& s, ScalarExpr a) { return a *= s; }

}  // namespace acbm
