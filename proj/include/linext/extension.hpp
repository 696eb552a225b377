#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "linext/abelian.hpp"
#include "linext/gamma.hpp"
#include "linext/loop.hpp"

namespace linext {

/// Pair of maps P, Q : L x L -> Aut(A) with P(a, e) = Q(e, b) = Id.
///
/// Tables are row-major l x l arrays of indices into the canonical Aut(A)
/// list. The automorphism group is shared between cocycles over the same A.
class LoopCocycle {
 public:
  /// Throws InputError on a bad shape or index and CocycleNormalizationError
  /// when the boundary row/column is not the identity.
  LoopCocycle(FiniteLoop loop, std::shared_ptr<const AutomorphismGroup> aut,
              std::vector<AutIndex> p_table, std::vector<AutIndex> q_table);

  const FiniteLoop& loop() const noexcept { return loop_; }
  const AbelianGroup& group() const noexcept { return aut_->group(); }
  const AutomorphismGroup& automorphisms() const noexcept { return *aut_; }
  const std::shared_ptr<const AutomorphismGroup>& shared_automorphisms() const noexcept {
    return aut_;
  }

  AutIndex P(LoopElement a, LoopElement b) const { return p_.at(cell(a, b)); }
  AutIndex Q(LoopElement a, LoopElement b) const { return q_.at(cell(a, b)); }
  AutPair at(LoopPair pair) const { return {P(pair.first, pair.second), Q(pair.first, pair.second)}; }

  const std::vector<AutIndex>& p_table() const noexcept { return p_; }
  const std::vector<AutIndex>& q_table() const noexcept { return q_; }

  friend bool operator==(const LoopCocycle& a, const LoopCocycle& b) {
    return a.loop_ == b.loop_ && a.group() == b.group() && a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  std::size_t cell(LoopElement a, LoopElement b) const;

  FiniteLoop loop_;
  std::shared_ptr<const AutomorphismGroup> aut_;
  std::vector<AutIndex> p_;
  std::vector<AutIndex> q_;
};

LoopCocycle make_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut,
                         const std::vector<std::vector<AutIndex>>& p_rows,
                         const std::vector<std::vector<AutIndex>>& q_rows);

/// P = Q = Id everywhere; its extension is the direct product L x A.
LoopCocycle identity_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut);

/// Element (xi, a) of L x A.
struct ExtensionElement {
  LoopElement xi = 0;
  GroupElement a = 0;

  friend bool operator==(const ExtensionElement&, const ExtensionElement&) = default;
};

/// F(P, Q) on L x A with (x, a)(y, b) = (xy, P(x, y) a + Q(x, y) b).
/// Element (xi, a) is stored at index xi * |A| + a, so (e, 0) is index 0.
class ExtensionLoop {
 public:
  explicit ExtensionLoop(LoopCocycle cocycle);

  const LoopCocycle& cocycle() const noexcept { return cocycle_; }
  const FiniteLoop& loop() const noexcept { return loop_; }

  LoopElement encode(ExtensionElement e) const;
  ExtensionElement decode(LoopElement index) const;
  ExtensionElement mul(ExtensionElement x, ExtensionElement y) const;

  /// {e} x A as a list of indices.
  std::vector<LoopElement> kernel() const;

 private:
  LoopCocycle cocycle_;
  FiniteLoop loop_;
};

ExtensionLoop build_extension(const LoopCocycle& cocycle);

/// The opposite extension: P'(a, b) = Q(b, a), Q'(a, b) = P(b, a) over the
/// opposite of L.
LoopCocycle opposite_cocycle(const LoopCocycle& cocycle);

/// p(x) = P(x^-1, x), q(x) = Q(x^-1, x).
struct InverseCoincidenceData {
  std::vector<AutIndex> pmap;
  std::vector<AutIndex> qmap;

  friend bool operator==(const InverseCoincidenceData&, const InverseCoincidenceData&) = default;
};

/// Reads p and q off a cocycle. Requires two-sided inverses in L.
InverseCoincidenceData inverse_coincidence_data(const LoopCocycle& cocycle);

/// Closed-form left inverse (e/x, -P(e/x, x)^-1 Q(e/x, x) a).
ExtensionElement extension_left_inverse(const LoopCocycle& cocycle, ExtensionElement element);
/// Closed-form right inverse (x\e, -Q(x, x\e)^-1 P(x, x\e) a).
ExtensionElement extension_right_inverse(const LoopCocycle& cocycle, ExtensionElement element);

/// L commutative and P(a, b) = Q(b, a) everywhere.
bool is_commutative_extension(const LoopCocycle& cocycle);

/// p(x^-1) = q(x^-1) p(x)^-1 q(x) for all x. Requires two-sided inverses in L.
bool check_cip(const LoopCocycle& cocycle);
std::optional<LoopElement> find_cip_violation(const LoopCocycle& cocycle);
bool satisfies_cip(const FiniteLoop& loop, const AutomorphismGroup& aut,
                   const InverseCoincidenceData& data);

/// For all x, y:
///   Q(x^-1, xy) = Q(x, y)^-1
///   P(x^-1, xy) = Q(x, y)^-1 P(x, y) Q(x^-1, x)^-1 P(x^-1, x)
/// Requires LIP in L.
bool check_lip_conditions(const LoopCocycle& cocycle);
std::optional<PairViolation> find_lip_condition_violation(const LoopCocycle& cocycle);

/// For all x, y:
///   P(xy, y^-1) = P(x, y)^-1
///   Q(xy, y^-1) = P(x, y)^-1 Q(x, y) P(y, y^-1)^-1 Q(y, y^-1)
/// Requires RIP in L.
bool check_rip_conditions(const LoopCocycle& cocycle);
std::optional<PairViolation> find_rip_condition_violation(const LoopCocycle& cocycle);

/// P(e, x) = Q(x, e) = Id for all x, i.e. (e, a)(x, b) = (x, b)(e, a) = (x, a + b).
bool is_strongly_linear(const LoopCocycle& cocycle);

/// For all x, y:
///   P(xy, y^-1) = P(x, y)^-1,   Q(xy, y^-1) = P(x, y)^-1 Q(x, y),
///   Q(x^-1, xy) = Q(x, y)^-1,   P(x^-1, xy) = Q(x, y)^-1 P(x, y).
/// Requires a strongly linear cocycle over an IP loop.
bool check_ip_conditions(const LoopCocycle& cocycle);
std::optional<PairViolation> find_ip_condition_violation(const LoopCocycle& cocycle);

/// (P, Q)(t(x, y)) = t . (P, Q)(x, y) for every t in Gamma and every pair.
/// Requires a strongly linear cocycle over an IP loop without order-3 elements.
bool check_equivariance(const LoopCocycle& cocycle);
std::optional<PairViolation> find_equivariance_violation(const LoopCocycle& cocycle);

}  // namespace linext
