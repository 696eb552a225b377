#pragma once

#include <cstdint>
#include <vector>

#include "linext/loop.hpp"

namespace linext {

/// Whether l^2 - 3l + 2 = (l-1)(l-2) splits into 6-element orbits, with the
/// witnesses 6k = l^2 - 3l + 2 and h = 2l - 3, h^2 = 1 + 24k.
struct CardinalityCertificate {
  std::uint64_t l = 0;
  bool feasible = false;
  std::uint64_t k = 0;  // meaningful only when feasible
  std::uint64_t h = 0;  // meaningful only when feasible

  friend bool operator==(const CardinalityCertificate&, const CardinalityCertificate&) = default;
};

/// Throws InputError for l < 1, InternalError if the exact identities fail.
CardinalityCertificate feasible_cardinality(std::uint64_t l);

/// Feasible certificates for 2 <= l <= max_l, ascending. Throws InputError
/// for max_l < 2.
std::vector<CardinalityCertificate> enumerate_feasible(std::uint64_t max_l);

/// |(L x L) \ Sigma| == l^2 - 3l + 2 and the Gamma-orbit count equals
/// (l^2 - 3l + 2) / 6. Requires IP and no order-3 element.
bool cross_check_orbit_count(const FiniteLoop& loop);

}  // namespace linext
