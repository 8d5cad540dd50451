#include "acbm/expr_parser.hpp"

#include <cctype>

namespace acbm {

namespace {

// Recursive-descent parser over the expression grammar. Keeps a cursor into
// the input; every throw carries the current offset.
class Parser {
 public:
  Parser(std::string_view text, const SymbolTablePtr& table,
         const std::map<std::string, Rational>& params)
      : text_(text), table_(table), params_(params) {}

  ScalarExpr run() {
    ScalarExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", static_cast<int>(pos_));
    return e;
  }

 private:
  ScalarExpr expr() {
    ScalarExpr acc = term();
    while (true) {
      skip_ws();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  ScalarExpr term() {
    ScalarExpr acc = factor();
    while (true) {
      skip_ws();
      if (accept('*')) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  ScalarExpr factor() {
    ScalarExpr base = atom();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected an unsigned integer exponent", static_cast<int>(pos_));
      unsigned exponent = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        exponent = exponent * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (exponent > 64) throw ParseError("exponent too large", static_cast<int>(pos_));
        ++pos_;
      }
      return base.pow(exponent);
    }
    return base;
  }

  ScalarExpr atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", static_cast<int>(pos_));
    char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (c == '(') {
      ++pos_;
      ScalarExpr inner = expr();
      skip_ws();
      if (!accept(')')) throw ParseError("expected ')'", static_cast<int>(pos_));
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_atom();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return symbol_atom();
    throw ParseError(std::string("unexpected character '") + c + "'", static_cast<int>(pos_));
  }

  ScalarExpr rational_atom() {
    Integer num = digits();
    Integer den = 1;
    // '/' continues the rational only when directly followed by digits
    if (pos_ < text_.size() && text_[pos_] == '/') {
      std::size_t slash = pos_;
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        den = digits();
        if (den == 0) throw ParseError("zero denominator", static_cast<int>(slash));
      } else {
        throw ParseError("expected digits after '/'", static_cast<int>(pos_));
      }
    }
    return ScalarExpr::constant(table_, Rational(num, den));
  }

  ScalarExpr symbol_atom() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (auto it = params_.find(name); it != params_.end())
      return ScalarExpr::constant(table_, it->second);
    if (table_) {
      if (auto s = table_->find_symbol(name)) return ScalarExpr::symbol(table_, *s);
    }
    throw ParseError("unknown symbol '" + name + "'", static_cast<int>(start));
  }

  Integer digits() {
    Integer value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  const SymbolTablePtr& table_;
  const std::map<std::string, Rational>& params_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarExpr parse_expression(std::string_view text, const SymbolTablePtr& table,
                            const std::map<std::string, Rational>& params) {
  return Parser(text, table, params).run();
}

Rational parse_constant(std::string_view text, const std::map<std::string, Rational>& params) {
  static const SymbolTablePtr empty = std::make_shared<SymbolTable>();
  ScalarExpr e = Parser(text, empty, params).run();
  if (!e.is_constant())
    throw ParseError("expected a constant value: '" + std::string(text) + "'", 0);
  return e.constant_value();
}

}  // namespace acbm
