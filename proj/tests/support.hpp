#pragma once
#include <memory>
#include <string>
#include <vector>

#include "linext/abelian.hpp"
#include "linext/extension.hpp"
#include "linext/io.hpp"
#include "linext/loop.hpp"

namespace fixture {

inline std::string corpus_path(const std::string& name) {
  return std::string(LINEXT_CORPUS_DIR) + "/" + name + ".loop";
}

inline linext::FiniteLoop corpus(const std::string& name) {
  return linext::parse_loop_file(corpus_path(name));
}

inline std::shared_ptr<const linext::AutomorphismGroup> aut(std::vector<std::uint32_t> orders) {
  return std::make_shared<const linext::AutomorphismGroup>(
      linext::enumerate_automorphisms(linext::make_group(std::move(orders))));
}

inline const std::vector<std::vector<std::uint32_t>>& small_groups() {
  static const std::vector<std::vector<std::uint32_t>> groups = {{2}, {3}, {4}, {2, 2}};
  return groups;
}

}  // namespace fixture
