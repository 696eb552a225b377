#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace linext {

/// Element of a finite abelian group, stored by its mixed-radix index.
using GroupElement = std::uint32_t;

/// Position of an automorphism in the canonical (lexicographic) list of Aut(A).
using AutIndex = std::uint32_t;

inline constexpr std::size_t kDefaultGroupCap = 64;

/// Finite abelian group Z_{n_0} x ... x Z_{n_{k-1}}.
///
/// Elements are encoded by mixed radix with the first factor most
/// significant: the residue tuple (d_0, ..., d_{k-1}) has index
/// ((d_0 * n_1 + d_1) * n_2 + d_2) ... so index 0 is the zero tuple.
/// Copies share the same immutable addition table.
class AbelianGroup {
 public:
  AbelianGroup(std::vector<std::uint32_t> orders, std::size_t cap = kDefaultGroupCap);

  const std::vector<std::uint32_t>& orders() const noexcept { return impl_->orders; }
  std::size_t size() const noexcept { return impl_->size; }

  GroupElement zero() const noexcept { return 0; }
  GroupElement add(GroupElement a, GroupElement b) const;
  GroupElement neg(GroupElement a) const;
  GroupElement sub(GroupElement a, GroupElement b) const { return add(a, neg(b)); }
  /// k-fold sum a + ... + a.
  GroupElement multiple(GroupElement a, std::uint64_t k) const;
  std::uint32_t element_order(GroupElement a) const;

  std::vector<std::uint32_t> digits(GroupElement a) const;
  GroupElement encode(std::span<const std::uint32_t> digits) const;
  /// Canonical generator of the i-th cyclic factor.
  GroupElement generator(std::size_t i) const;

  bool contains(GroupElement a) const noexcept { return a < impl_->size; }

  /// Comma-separated factor orders, e.g. "2,2".
  std::string spec() const;

  friend bool operator==(const AbelianGroup& x, const AbelianGroup& y) {
    return x.impl_ == y.impl_ || x.impl_->orders == y.impl_->orders;
  }

 private:
  struct Impl {
    std::vector<std::uint32_t> orders;
    std::size_t size = 1;
    std::vector<GroupElement> sum;  // size x size addition table
    std::vector<GroupElement> negation;
  };
  void check(GroupElement a) const;

  std::shared_ptr<const Impl> impl_;
};

AbelianGroup make_group(std::vector<std::uint32_t> orders, std::size_t cap = kDefaultGroupCap);

/// Additive bijection of a finite abelian group, stored as an element map.
class Automorphism {
 public:
  /// Validates bijectivity, table[0] == 0 and additivity; throws InputError.
  Automorphism(AbelianGroup group, std::vector<GroupElement> table);

  static Automorphism identity(const AbelianGroup& group);

  const AbelianGroup& group() const noexcept { return group_; }
  const std::vector<GroupElement>& table() const noexcept { return table_; }
  GroupElement operator()(GroupElement a) const { return table_.at(a); }
  bool is_identity() const;

  friend bool operator==(const Automorphism& x, const Automorphism& y) {
    return x.group_ == y.group_ && x.table_ == y.table_;
  }
  friend bool operator<(const Automorphism& x, const Automorphism& y) { return x.table_ < y.table_; }

 private:
  struct Trusted {};
  Automorphism(Trusted, AbelianGroup group, std::vector<GroupElement> table)
      : group_(std::move(group)), table_(std::move(table)) {}

  AbelianGroup group_;
  std::vector<GroupElement> table_;

  friend Automorphism compose(const Automorphism& f, const Automorphism& h);
  friend Automorphism invert(const Automorphism& f);
};

/// (f o h)(a) = f(h(a)).
Automorphism compose(const Automorphism& f, const Automorphism& h);
Automorphism invert(const Automorphism& f);

struct AutEnumOptions {
  std::size_t size_cap = kDefaultGroupCap;
  /// Upper bound on the number of generator-image tuples tried.
  std::uint64_t max_candidates = std::uint64_t{1} << 20;
};

/// Aut(A) as a canonically ordered list, with index-level composition.
class AutomorphismGroup {
 public:
  AutomorphismGroup(AbelianGroup group, std::vector<Automorphism> sorted_members);

  const AbelianGroup& group() const noexcept { return group_; }
  const std::vector<Automorphism>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Automorphism& operator[](AutIndex i) const { return members_.at(i); }

  AutIndex identity() const noexcept { return identity_; }
  /// Throws InputError if f is not a member.
  AutIndex index_of(const Automorphism& f) const;
  bool contains(AutIndex i) const noexcept { return i < members_.size(); }

  /// Index of members[f] o members[h].
  AutIndex compose(AutIndex f, AutIndex h) const;
  AutIndex inverse(AutIndex f) const;

  /// Right-to-left product of any number of factors: compose(a, b, c) = a o b o c.
  template <typename... Rest>
  AutIndex compose(AutIndex f, AutIndex h, Rest... rest) const {
    return compose(f, compose(h, rest...));
  }

 private:
  AutIndex compute_compose(AutIndex f, AutIndex h) const;

  AbelianGroup group_;
  std::vector<Automorphism> members_;
  AutIndex identity_ = 0;
  std::vector<AutIndex> inverse_;
  std::vector<AutIndex> product_;  // empty when the group is too large to tabulate
};

/// Exhaustive enumeration: every assignment of the canonical generators to
/// elements of compatible order is extended additively, then kept if it is a
/// bijection that passes the additivity check.
AutomorphismGroup enumerate_automorphisms(const AbelianGroup& group, const AutEnumOptions& options = {});

}  // namespace linext
