#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acbm {

// Names the scalar generators of a manifold spec: its coordinates plus one
// (sin, cos) symbol pair per circularly-bound coordinate. The symbol universe
// is ordered coordinates-first, then sin/cos per pair in declaration order;
// monomials over this table compare lexicographically by that order.
class SymbolTable {
 public:
  enum class Kind { Coordinate, Sin, Cos };

  struct CircularPair {
    std::string sin_name;
    std::string cos_name;
    int coord;  // 0-based coordinate index the pair is bound to
  };

  struct Symbol {
    std::string name;
    Kind kind;
    int coord;  // owning coordinate (= own index for Kind::Coordinate)
    int pair;   // pair index, -1 for coordinates
  };

  // A table with no symbols at all; every expression over it is constant.
  SymbolTable() = default;

  SymbolTable(std::vector<std::string> coordinates, std::vector<CircularPair> pairs);

  int coordinate_count() const { return static_cast<int>(coordinates_.size()); }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  int symbol_count() const { return static_cast<int>(symbols_.size()); }

  const std::string& coordinate_name(int i) const { return coordinates_.at(i); }
  const CircularPair& pair(int p) const { return pairs_.at(p); }
  const Symbol& symbol(int s) const { return symbols_.at(s); }

  // Symbol indices of the generators of pair p.
  int sin_index(int p) const;
  int cos_index(int p) const;
  // Pair bound to coordinate c, if any.
  std::optional<int> pair_of_coordinate(int c) const;

  std::optional<int> find_symbol(std::string_view name) const;
  std::optional<int> find_coordinate(std::string_view name) const;

  bool same_structure(const SymbolTable& other) const;

 private:
  std::vector<std::string> coordinates_;
  std::vector<CircularPair> pairs_;
  std::vector<Symbol> symbols_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

}  // namespace acbm
