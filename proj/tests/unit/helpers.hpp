#pragma once

#include <string>

#include "acbm/manifold.hpp"

inline acbm::ManifoldSpec load_fixture(const std::string& name) {
  return acbm::parse_manifest_file(std::string(ACBM_MANIFEST_DIR) + "/" + name);
}

inline std::string fixture_path(const std::string& name) {
  return std::string(ACBM_MANIFEST_DIR) + "/" + name;
}
