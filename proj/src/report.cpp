#include "acbm/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace acbm {

void CheckList::add(std::string name, bool pass, std::string detail) {
  entries.push_back({std::move(name), pass, std::move(detail)});
}

void CheckList::merge(const CheckList& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

bool CheckList::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

int CheckList::failure_count() const {
  int n = 0;
  for (const auto& e : entries)
    if (!e.pass) ++n;
  return n;
}

std::string render_text(const CheckList& list) {
  std::size_t width = 4;
  for (const auto& e : list.entries) width = std::max(width, e.name.size());
  std::ostringstream out;
  for (const auto& e : list.entries) {
    out << "  " << (e.pass ? "[ok]   " : "[FAIL] ") << e.name;
    if (!e.detail.empty()) {
      out << std::string(width - e.name.size() + 2, ' ') << e.detail;
    }
    out << "\n";
  }
  return out.str();
}

std::string render_json(const CheckList& list) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : list.entries) {
    arr.push_back({{"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
  }
  return arr.dump(2);
}

}  // namespace acbm
