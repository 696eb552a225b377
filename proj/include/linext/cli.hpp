#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "linext/abelian.hpp"

namespace linext {

struct RunConfig {
  /// check | aut | orbits | construct | extend | verify | feasible
  std::string subcommand;
  std::string loop_path;
  std::string group_spec;
  std::string cocycle_path;
  /// lip | rip | ip for construct/verify, phi | psi | gamma for orbits.
  std::string mode;
  std::string out_path;
  std::uint64_t seed = 0;
  std::uint64_t max_l = 16;
  bool report = false;
  bool exhaustive_iota = false;
  std::size_t aut_cap = kDefaultGroupCap;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFails = 1;
inline constexpr int kExitInputError = 2;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches to run().
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linext
