#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linext/extension.hpp"
#include "linext/loop.hpp"

namespace linext {

enum class VerifyTarget {
  /// Every condition checker agrees with brute force on the built extension.
  Consistency,
  /// Consistency, and additionally the extension has the property.
  Lip,
  Rip,
  Ip,
};

/// Ordered key=value record. Failed checks carry a "<key>.counterexample"
/// entry naming indices that reproduce the failure.
struct VerificationReport {
  std::vector<std::pair<std::string, std::string>> entries;
  bool passed = true;
  double elapsed_ms = 0.0;

  const std::string* find(const std::string& key) const;
  /// One "key=value" line per entry, then "verdict=" and, if requested,
  /// "elapsed_ms=".
  std::string to_text(bool include_timing = true) const;
};

VerificationReport verify_cocycle(const LoopCocycle& cocycle, VerifyTarget target = VerifyTarget::Consistency,
                                  IotaSearch search = IotaSearch::LeftInverse);

/// Brute-force property summary of a loop file (the `check` subcommand).
VerificationReport check_loop(const FiniteLoop& loop, IotaSearch search = IotaSearch::LeftInverse);

}  // namespace linext
