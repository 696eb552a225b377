#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace linext {

/// Element of a finite loop; index 0 is always the identity.
using LoopElement = std::uint32_t;

/// Loop given by a validated Cayley table with identity at index 0.
///
/// Division tables are precomputed, so every operation is a lookup.
class FiniteLoop {
 public:
  /// `table` is row-major l x l. Throws StructureError if it is not a Latin
  /// square and IdentityPositionError if row/column 0 is not the identity.
  FiniteLoop(std::size_t order, std::vector<LoopElement> table);

  std::size_t order() const noexcept { return order_; }
  LoopElement identity() const noexcept { return 0; }

  LoopElement mul(LoopElement x, LoopElement y) const {
    return table_[index(x) * order_ + index(y)];
  }
  /// x \ y: the unique z with x*z = y.
  LoopElement left_div(LoopElement x, LoopElement y) const {
    return ldiv_[index(x) * order_ + index(y)];
  }
  /// x / y: the unique z with z*y = x.
  LoopElement right_div(LoopElement x, LoopElement y) const {
    return rdiv_[index(x) * order_ + index(y)];
  }
  /// e / x
  LoopElement left_inverse(LoopElement x) const { return right_div(0, x); }
  /// x \ e
  LoopElement right_inverse(LoopElement x) const { return left_div(x, 0); }

  const std::vector<LoopElement>& table() const noexcept { return table_; }
  std::vector<std::vector<LoopElement>> rows() const;

  friend bool operator==(const FiniteLoop& a, const FiniteLoop& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  std::size_t index(LoopElement x) const;

  std::size_t order_;
  std::vector<LoopElement> table_;
  std::vector<LoopElement> ldiv_;
  std::vector<LoopElement> rdiv_;
};

FiniteLoop make_loop(std::size_t order, const std::vector<std::vector<LoopElement>>& rows);

/// Cyclic group Z_n as a loop (used for fixtures and the bundled corpus).
FiniteLoop cyclic_loop(std::size_t n);

/// How the inverse map of the LIP/RIP identities is obtained.
enum class IotaSearch {
  /// iota(x) = e/x, which is forced in any loop with LIP or RIP.
  LeftInverse,
  /// Search every element for a candidate iota(x) and require a bijection.
  Exhaustive,
};

struct PairViolation {
  LoopElement x;
  LoopElement y;
};

/// First (x, y) in row-major order with iota(x)*(x*y) != y, if any.
std::optional<PairViolation> find_lip_violation(const FiniteLoop& loop,
                                                IotaSearch search = IotaSearch::LeftInverse);
/// First (x, y) with (y*x)*iota(x) != y, if any.
std::optional<PairViolation> find_rip_violation(const FiniteLoop& loop,
                                                IotaSearch search = IotaSearch::LeftInverse);
/// First x with e/x != x\e, if any.
std::optional<LoopElement> find_inverse_mismatch(const FiniteLoop& loop);

bool has_lip(const FiniteLoop& loop, IotaSearch search = IotaSearch::LeftInverse);
bool has_rip(const FiniteLoop& loop, IotaSearch search = IotaSearch::LeftInverse);
bool has_ip(const FiniteLoop& loop, IotaSearch search = IotaSearch::LeftInverse);
bool inverses_coincide(const FiniteLoop& loop);

/// An element x != e with x*x = x^-1. Throws UndefinedFeatureError when the
/// loop lacks two-sided inverses.
bool has_order3_element(const FiniteLoop& loop);

bool is_commutative(const FiniteLoop& loop);
bool is_associative(const FiniteLoop& loop);

struct LoopPropertyReport {
  bool has_lip = false;
  bool has_rip = false;
  bool has_ip = false;
  bool two_sided_inverses_coincide = false;
  /// Only evaluated when two-sided inverses coincide.
  std::optional<bool> has_order3_element;
  /// x -> x^-1, present when two-sided inverses exist.
  std::optional<std::vector<LoopElement>> inverse;
};

LoopPropertyReport analyze_properties(const FiniteLoop& loop,
                                      IotaSearch search = IotaSearch::LeftInverse);

/// Transposed table: x * y in the result is y * x in `loop`.
FiniteLoop opposite_loop(const FiniteLoop& loop);

/// Throws InputError unless `subset` contains e and is closed under
/// multiplication and both divisions.
bool is_normal_subloop(const FiniteLoop& loop, const std::vector<LoopElement>& subset);

/// Loop on the cosets xN, labelled in order of their smallest element.
/// Throws DomainError when N is not normal.
FiniteLoop quotient_loop(const FiniteLoop& loop, const std::vector<LoopElement>& subset);

}  // namespace linext
