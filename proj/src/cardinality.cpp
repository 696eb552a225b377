#include "linext/cardinality.hpp"

#include <string>

#include "linext/constructions.hpp"
#include "linext/error.hpp"

namespace linext {

CardinalityCertificate feasible_cardinality(std::uint64_t l) {
  if (l < 1) throw InputError("cardinality must be >= 1");
  if (l > (std::uint64_t{1} << 28)) throw InputError("cardinality too large for exact arithmetic");
  CardinalityCertificate cert;
  cert.l = l;
  const std::uint64_t pairs = (l - 1) * (l - 2);  // l^2 - 3l + 2, exact for l >= 1
  cert.feasible = l >= 2 && pairs % 6 == 0;
  if (!cert.feasible) return cert;
  cert.k = pairs / 6;
  cert.h = 2 * l - 3;
  if (cert.h * cert.h != 1 + 24 * cert.k || 2 * l != 3 + cert.h) {
    throw InternalError("cardinality certificate fails h^2 = 1 + 24k for l = " + std::to_string(l));
  }
  return cert;
}

std::vector<CardinalityCertificate> enumerate_feasible(std::uint64_t max_l) {
  if (max_l < 2) throw InputError("max_l must be >= 2");
  std::vector<CardinalityCertificate> out;
  for (std::uint64_t l = 2; l <= max_l; ++l) {
    auto cert = feasible_cardinality(l);
    if (cert.feasible) out.push_back(cert);
  }
  return out;
}

bool cross_check_orbit_count(const FiniteLoop& loop) {
  const auto dec = orbit_decomposition(loop, OrbitMode::Gamma);
  const std::uint64_t l = loop.order();
  const std::uint64_t expected = l * l - 3 * l + 2;
  const auto complement = SigmaSet(loop).complement().size();
  return complement == expected && expected % 6 == 0 && dec.orbits.size() == expected / 6;
}

}  // namespace linext
