#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "linext/abelian.hpp"
#include "linext/loop.hpp"

namespace linext {

/// Element of the group generated by phi(x, y) = (x^-1, xy) and
/// psi(x, y) = (xy, y^-1). Products are written as map composition:
/// PhiPsi = phi o psi applies psi first.
enum class GammaElement : std::uint8_t {
  Identity,
  Phi,
  Psi,
  Theta,   // phi o psi o phi : (x, y) -> (y^-1, x^-1)
  PhiPsi,  // (x, y) -> ((xy)^-1, x)
  PsiPhi,  // (x, y) -> (y, (xy)^-1)
};

/// Listing order of an orbit: (x,y), (x^-1,xy), (xy,y^-1), (y^-1,x^-1), ((xy)^-1,x), (y,(xy)^-1).
inline constexpr std::array<GammaElement, 6> kGammaElements = {
    GammaElement::Identity, GammaElement::Phi,    GammaElement::Psi,
    GammaElement::Theta,    GammaElement::PhiPsi, GammaElement::PsiPhi,
};

std::string_view gamma_name(GammaElement g);

/// a o b in the abstract group (isomorphic to S3).
GammaElement gamma_compose(GammaElement a, GammaElement b);
GammaElement gamma_inverse(GammaElement a);

struct LoopPair {
  LoopElement first = 0;
  LoopElement second = 0;

  friend bool operator==(const LoopPair&, const LoopPair&) = default;
  friend auto operator<=>(const LoopPair&, const LoopPair&) = default;
};

/// Action on L x L. Uses two-sided inverses; the caller guarantees they exist.
LoopPair apply_gamma(const FiniteLoop& loop, GammaElement g, LoopPair pair);

/// Cocycle value (P, Q) at one pair.
struct AutPair {
  AutIndex p = 0;
  AutIndex q = 0;

  friend bool operator==(const AutPair&, const AutPair&) = default;
  friend auto operator<=>(const AutPair&, const AutPair&) = default;
};

/// Action on Aut(A) x Aut(A):
///   phi   : (P, Q) -> (Q^-1 P, Q^-1)
///   psi   : (P, Q) -> (P^-1, P^-1 Q)
///   theta : (P, Q) -> (Q, P)
///   psi o phi : (P, Q) -> (P^-1 Q, P^-1)
///   phi o psi : (P, Q) -> (Q^-1, Q^-1 P)
AutPair act_on_pair(const AutomorphismGroup& aut, GammaElement g, AutPair value);

}  // namespace linext
