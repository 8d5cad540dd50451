#pragma once

#include <string>
#include <vector>

namespace acbm {

// One named exact check: pass/fail plus a short detail (offending component,
// residual, or fitted value) for humans and for the structured report.
struct CheckEntry {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckList {
  std::vector<CheckEntry> entries;

  void add(std::string name, bool pass, std::string detail = "");
  void merge(const CheckList& other);
  bool all_pass() const;
  int failure_count() const;
};

// Fixed-width text table, one line per entry.
std::string render_text(const CheckList& list);
// JSON array text: [{"name":..., "pass":..., "detail":...}, ...]
std::string render_json(const CheckList& list);

}  // namespace acbm
