#pragma once

#include <memory>
#include <vector>

#include "linext/choice.hpp"
#include "linext/extension.hpp"
#include "linext/gamma.hpp"
#include "linext/loop.hpp"

namespace linext {

/// Boundary pairs {(x, e)} u {(e, x)} u {(x^-1, x)} where cocycle values are pinned.
class SigmaSet {
 public:
  /// Throws PreconditionError when L lacks two-sided inverses.
  explicit SigmaSet(const FiniteLoop& loop);

  bool contains(LoopPair pair) const { return member_.at(pair.first * order_ + pair.second) != 0; }
  std::size_t size() const noexcept { return pairs_.size(); }
  /// Row-major sorted.
  const std::vector<LoopPair>& pairs() const noexcept { return pairs_; }
  /// (L x L) \ Sigma, row-major sorted.
  std::vector<LoopPair> complement() const;

 private:
  std::size_t order_;
  std::vector<char> member_;
  std::vector<LoopPair> pairs_;
};

SigmaSet sigma_set(const FiniteLoop& loop);

enum class OrbitMode { Phi, Psi, Gamma };

struct Orbit {
  /// members[0] is the representative, the row-major smallest pair.
  std::vector<LoopPair> members;
  /// carriers[i] maps the representative to members[i].
  std::vector<GammaElement> carriers;

  LoopPair representative() const { return members.front(); }
};

struct OrbitDecomposition {
  OrbitMode mode;
  /// Sorted by representative.
  std::vector<Orbit> orbits;
};

/// Orbits of <phi> (needs LIP), <psi> (needs RIP) or Gamma (needs IP and no
/// order-3 element) on (L x L) \ Sigma. Orbit sizes are asserted to be 2, 2, 6.
OrbitDecomposition orbit_decomposition(const FiniteLoop& loop, OrbitMode mode);

/// The six images of (x, y) in the listing order of kGammaElements.
/// Throws Order3Error when the pairs are not distinct.
std::vector<LoopPair> gamma_orbit(const FiniteLoop& loop, LoopPair pair);

struct PqOptions {
  enum class FixedPoint {
    /// p(x) = q(x) at self-inverse x.
    Default,
    /// Draw p(x) among all p with (p^-1 q)^2 = Id.
    Enumerate,
  };
  FixedPoint fixed_point = FixedPoint::Default;
};

/// All p with (p^-1 q)^2 = Id, ascending.
std::vector<AutIndex> fixed_point_candidates(const AutomorphismGroup& aut, AutIndex q);

/// Maps p, q satisfying p(x^-1) = q(x^-1) p(x)^-1 q(x).
///
/// Draws: q(x) for x = 1..l-1; then for x = 1..l-1, p(x) when x < x^-1
/// (p(x^-1) is forced), or a fixed-point candidate in Enumerate mode when
/// x = x^-1.
InverseCoincidenceData construct_pq(const FiniteLoop& loop, const AutomorphismGroup& aut,
                                    ChoiceSource& choice, const PqOptions& options = {});

/// Value fixed freely at orbit.members[member]; the rest of the orbit is forced.
struct OrbitAssignment {
  std::size_t member = 0;
  AutPair value;
};

struct LipSpec {
  InverseCoincidenceData pq;
  /// P(e, x); entry 0 must be Id.
  std::vector<AutIndex> left_unit;
  /// One entry per phi-orbit, in decomposition order.
  std::vector<OrbitAssignment> orbits;
};

struct RipSpec {
  InverseCoincidenceData pq;
  /// Q(x, e); entry 0 must be Id.
  std::vector<AutIndex> right_unit;
  /// One entry per psi-orbit.
  std::vector<OrbitAssignment> orbits;
};

struct IpSpec {
  /// One entry per Gamma-orbit.
  std::vector<OrbitAssignment> orbits;
};

/// Cocycle with LIP-extension from explicit free values. On Sigma:
/// P(x, e) = Q(e, x) = Id, P(e, x) = left_unit[x], Q(x^-1, x) = q(x),
/// Q(x, e) = q(x)^-1, P(x^-1, x) = p(x). On each phi-orbit the partner of
/// the chosen member (x, y) gets
///   Q(x^-1, xy) = Q(x, y)^-1,
///   P(x^-1, xy) = Q(x, y)^-1 P(x, y) Q(x^-1, x)^-1 P(x^-1, x).
LoopCocycle assemble_lip_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut,
                                 const LipSpec& spec);

/// Mirror of assemble_lip_cocycle along psi. On Sigma: Q(x, e) = right_unit[x],
/// P(x^-1, x) = p(x), Q(x^-1, x) = q(x) and P(e, x) = p(x^-1)^-1, the value
/// the RIP identities force at (e, x). On each psi-orbit the partner gets
///   P(xy, y^-1) = P(x, y)^-1,
///   Q(xy, y^-1) = P(x, y)^-1 Q(x, y) P(y, y^-1)^-1 Q(y, y^-1).
LoopCocycle assemble_rip_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut,
                                 const RipSpec& spec);

/// Id on Sigma; on each Gamma-orbit, member t(m) receives t . value.
LoopCocycle assemble_ip_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut,
                                const IpSpec& spec);

struct ConstructionOptions {
  PqOptions pq;
  /// Build the extension and check the target property by brute force.
  bool verify = true;
};

/// Draws: construct_pq, then P(e, x) for x = 1..l-1, then P and Q at each
/// phi-orbit representative in ascending order.
LoopCocycle construct_lip_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut,
                                  ChoiceSource& choice, const ConstructionOptions& options = {});

/// Draws: construct_pq, then Q(x, e) for x = 1..l-1, then P and Q at each
/// psi-orbit representative.
LoopCocycle construct_rip_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut,
                                  ChoiceSource& choice, const ConstructionOptions& options = {});

/// Draws: P then Q at each Gamma-orbit representative.
LoopCocycle construct_ip_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut,
                                 ChoiceSource& choice, const ConstructionOptions& options = {});

}  // namespace linext
