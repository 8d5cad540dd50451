#include "acbm/symbols.hpp"

#include <set>
#include <stdexcept>

namespace acbm {

SymbolTable::SymbolTable(std::vector<std::string> coordinates, std::vector<CircularPair> pairs)
    : coordinates_(std::move(coordinates)), pairs_(std::move(pairs)) {
  std::set<std::string> names;
  std::set<int> bound;
  for (int i = 0; i < static_cast<int>(coordinates_.size()); ++i) {
    const auto& nm = coordinates_[i];
    if (nm.empty() || !names.insert(nm).second)
      throw std::invalid_argument("duplicate or empty coordinate name: '" + nm + "'");
    symbols_.push_back({nm, Kind::Coordinate, i, -1});
  }
  for (int p = 0; p < static_cast<int>(pairs_.size()); ++p) {
    const auto& pr = pairs_[p];
    if (pr.coord < 0 || pr.coord >= coordinate_count())
      throw std::invalid_argument("circular pair bound to unknown coordinate index");
    if (!bound.insert(pr.coord).second)
      throw std::invalid_argument("coordinate bound to more than one circular pair");
    for (const auto& nm : {pr.sin_name, pr.cos_name}) {
      if (nm.empty() || !names.insert(nm).second)
        throw std::invalid_argument("duplicate or empty circular symbol name: '" + nm + "'");
    }
    symbols_.push_back({pr.sin_name, Kind::Sin, pr.coord, p});
    symbols_.push_back({pr.cos_name, Kind::Cos, pr.coord, p});
  }
}

int SymbolTable::sin_index(int p) const { return coordinate_count() + 2 * p; }
int SymbolTable::cos_index(int p) const { return coordinate_count() + 2 * p + 1; }

std::optional<int> SymbolTable::pair_of_coordinate(int c) const {
  for (int p = 0; p < pair_count(); ++p)
    if (pairs_[p].coord == c) return p;
  return std::nullopt;
}

std::optional<int> SymbolTable::find_symbol(std::string_view name) const {
  for (int s = 0; s < symbol_count(); ++s)
    if (symbols_[s].name == name) return s;
  return std::nullopt;
}

std::optional<int> SymbolTable::find_coordinate(std::string_view name) const {
  for (int c = 0; c < coordinate_count(); ++c)
    if (coordinates_[c] == name) return c;
  return std::nullopt;
}

bool SymbolTable::same_structure(const SymbolTable& other) const {
  if (coordinates_ != other.coordinates_) return false;
  if (pairs_.size() != other.pairs_.size()) return false;
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    if (pairs_[p].sin_name != other.pairs_[p].sin_name ||
        pairs_[p].cos_name != other.pairs_[p].cos_name || pairs_[p].coord != other.pairs_[p].coord)
      return false;
  }
  return true;
}

}  // namespace acbm
