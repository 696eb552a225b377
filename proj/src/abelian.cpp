#include "linext/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "linext/error.hpp"

namespace linext {

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> orders, std::size_t cap) {
  if (orders.empty()) throw InputError("group needs at least one cyclic factor");
  auto impl = std::make_shared<Impl>();
  for (auto n : orders) {
    if (n < 2) throw InputError("cyclic factor order must be >= 2, got " + std::to_string(n));
    impl->size *= n;
    if (impl->size > cap) {
      throw InputError("group size exceeds cap of " + std::to_string(cap));
    }
  }
  impl->orders = std::move(orders);
  impl_ = impl;

  const std::size_t size = impl->size;
  impl->sum.resize(size * size);
  impl->negation.resize(size);
  std::vector<std::vector<std::uint32_t>> all(size);
  for (GroupElement a = 0; a < size; ++a) all[a] = digits(a);
  std::vector<std::uint32_t> d(impl->orders.size());
  for (GroupElement a = 0; a < size; ++a) {
    for (GroupElement b = 0; b < size; ++b) {
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = (all[a][i] + all[b][i]) % impl->orders[i];
      impl->sum[a * size + b] = encode(d);
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
      d[i] = (impl->orders[i] - all[a][i]) % impl->orders[i];
    }
    impl->negation[a] = encode(d);
  }
}

void AbelianGroup::check(GroupElement a) const {
  if (a >= impl_->size) {
    throw InputError("group element " + std::to_string(a) + " out of range for group of size " +
                     std::to_string(impl_->size));
  }
}

GroupElement AbelianGroup::add(GroupElement a, GroupElement b) const {
  check(a);
  check(b);
  return impl_->sum[a * impl_->size + b];
}

GroupElement AbelianGroup::neg(GroupElement a) const {
  check(a);
  return impl_->negation[a];
}

GroupElement AbelianGroup::multiple(GroupElement a, std::uint64_t k) const {
  GroupElement acc = 0;
  GroupElement base = a;
  while (k != 0) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

std::uint32_t AbelianGroup::element_order(GroupElement a) const {
  auto d = digits(a);
  std::uint32_t result = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::uint32_t n = impl_->orders[i];
    const std::uint32_t component = n / std::gcd(n, d[i]);
    result = std::lcm(result, component);
  }
  return result;
}

std::vector<std::uint32_t> AbelianGroup::digits(GroupElement a) const {
  check(a);
  const auto& orders = impl_->orders;
  std::vector<std::uint32_t> d(orders.size());
  for (std::size_t i = orders.size(); i-- > 0;) {
    d[i] = a % orders[i];
    a /= orders[i];
  }
  return d;
}

GroupElement AbelianGroup::encode(std::span<const std::uint32_t> d) const {
  const auto& orders = impl_->orders;
  if (d.size() != orders.size()) throw InputError("residue tuple has wrong length");
  GroupElement index = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (d[i] >= orders[i]) throw InputError("residue out of range for its factor");
    index = index * orders[i] + d[i];
  }
  return index;
}

GroupElement AbelianGroup::generator(std::size_t i) const {
  if (i >= impl_->orders.size()) throw InputError("factor index out of range");
  std::vector<std::uint32_t> d(impl_->orders.size(), 0);
  d[i] = 1;
  return encode(d);
}

std::string AbelianGroup::spec() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < impl_->orders.size(); ++i) {
    if (i) out << ',';
    out << impl_->orders[i];
  }
  return out.str();
}

AbelianGroup make_group(std::vector<std::uint32_t> orders, std::size_t cap) {
  return AbelianGroup(std::move(orders), cap);
}

// --- Automorphism -----------------------------------------------------------

namespace {

// Returns an empty string when the table is an automorphism, else the reason.
std::string automorphism_defect(const AbelianGroup& g, const std::vector<GroupElement>& table) {
  const std::size_t n = g.size();
  if (table.size() != n) return "table length differs from group size";
  if (table[0] != 0) return "zero is not fixed";
  std::vector<bool> seen(n, false);
  for (auto image : table) {
    if (image >= n) return "image out of range";
    if (seen[image]) return "not a bijection";
    seen[image] = true;
  }
  for (GroupElement a = 0; a < n; ++a) {
    for (GroupElement b = a; b < n; ++b) {
      if (table[g.add(a, b)] != g.add(table[a], table[b])) return "not additive";
    }
  }
  return {};
}

}  // namespace

Automorphism::Automorphism(AbelianGroup group, std::vector<GroupElement> table)
    : group_(std::move(group)), table_(std::move(table)) {
  if (auto why = automorphism_defect(group_, table_); !why.empty()) {
    throw InputError("invalid automorphism: " + why);
  }
}

Automorphism Automorphism::identity(const AbelianGroup& group) {
  std::vector<GroupElement> table(group.size());
  std::iota(table.begin(), table.end(), GroupElement{0});
  return Automorphism(Trusted{}, group, std::move(table));
}

bool Automorphism::is_identity() const {
  for (GroupElement a = 0; a < table_.size(); ++a) {
    if (table_[a] != a) return false;
  }
  return true;
}

Automorphism compose(const Automorphism& f, const Automorphism& h) {
  if (!(f.group() == h.group())) throw InputError("compose: automorphisms of different groups");
  std::vector<GroupElement> table(h.table().size());
  for (std::size_t a = 0; a < table.size(); ++a) table[a] = f.table()[h.table()[a]];
  return Automorphism(Automorphism::Trusted{}, f.group(), std::move(table));
}

Automorphism invert(const Automorphism& f) {
  std::vector<GroupElement> table(f.table().size());
  for (std::size_t a = 0; a < table.size(); ++a) table[f.table()[a]] = static_cast<GroupElement>(a);
  return Automorphism(Automorphism::Trusted{}, f.group(), std::move(table));
}

// --- AutomorphismGroup ------------------------------------------------------

namespace {
constexpr std::size_t kMaxTabulatedProducts = 1 << 20;
}

AutomorphismGroup::AutomorphismGroup(AbelianGroup group, std::vector<Automorphism> sorted_members)
    : group_(std::move(group)), members_(std::move(sorted_members)) {
  if (members_.empty()) throw InputError("automorphism group cannot be empty");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!(members_[i].group() == group_)) throw InputError("member over a different group");
    if (i > 0 && !(members_[i - 1] < members_[i])) {
      throw InputError("members must be strictly increasing lexicographically");
    }
  }
  identity_ = index_of(Automorphism::identity(group_));

  const std::size_t n = members_.size();
  inverse_.resize(n);
  for (AutIndex f = 0; f < n; ++f) inverse_[f] = index_of(invert(members_[f]));
  if (n * n <= kMaxTabulatedProducts) {
    product_.resize(n * n);
    for (AutIndex f = 0; f < n; ++f) {
      for (AutIndex h = 0; h < n; ++h) product_[f * n + h] = compute_compose(f, h);
    }
  }
}

AutIndex AutomorphismGroup::index_of(const Automorphism& f) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), f);
  if (it == members_.end() || !(*it == f)) throw InputError("automorphism is not a member");
  return static_cast<AutIndex>(it - members_.begin());
}

AutIndex AutomorphismGroup::compute_compose(AutIndex f, AutIndex h) const {
  return index_of(linext::compose(members_.at(f), members_.at(h)));
}

AutIndex AutomorphismGroup::compose(AutIndex f, AutIndex h) const {
  const std::size_t n = members_.size();
  if (f >= n || h >= n) throw InputError("automorphism index out of range");
  if (!product_.empty()) return product_[f * n + h];
  return compute_compose(f, h);
}

AutIndex AutomorphismGroup::inverse(AutIndex f) const {
  if (f >= members_.size()) throw InputError("automorphism index out of range");
  return inverse_[f];
}

AutomorphismGroup enumerate_automorphisms(const AbelianGroup& group, const AutEnumOptions& options) {
  const std::size_t n = group.size();
  if (n > options.size_cap) {
    throw ResourceError("automorphism enumeration: group size " + std::to_string(n) +
                        " exceeds cap " + std::to_string(options.size_cap));
  }
  const auto& orders = group.orders();
  const std::size_t k = orders.size();

  // Candidate images of each generator: elements whose order divides n_i.
  std::vector<std::vector<GroupElement>> candidates(k);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (GroupElement a = 0; a < n; ++a) {
      if (orders[i] % group.element_order(a) == 0) candidates[i].push_back(a);
    }
    total *= candidates[i].size();
    if (total > options.max_candidates) {
      throw ResourceError("automorphism enumeration: more than " +
                          std::to_string(options.max_candidates) + " candidate generator images");
    }
  }

  std::vector<std::vector<std::uint32_t>> all_digits(n);
  for (GroupElement a = 0; a < n; ++a) all_digits[a] = group.digits(a);

  std::vector<Automorphism> members;
  std::vector<std::size_t> choice(k, 0);
  std::vector<std::vector<GroupElement>> multiples(k);
  std::vector<GroupElement> table(n);
  std::vector<bool> seen(n);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) {
      const GroupElement image = candidates[i][choice[i]];
      multiples[i].assign(orders[i], 0);
      for (std::uint32_t m = 1; m < orders[i]; ++m) multiples[i][m] = group.add(multiples[i][m - 1], image);
    }
    std::fill(seen.begin(), seen.end(), false);
    bool bijective = true;
    for (GroupElement a = 0; a < n && bijective; ++a) {
      GroupElement acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc = group.add(acc, multiples[i][all_digits[a][i]]);
      table[a] = acc;
      if (seen[acc]) bijective = false;
      seen[acc] = true;
    }
    if (bijective) {
      // Validating constructor re-checks additivity on the full table.
      members.emplace_back(group, table);
    }

    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++choice[i] < candidates[i].size()) break;
      choice[i] = 0;
      if (i == 0) {
        i = k + 1;
        break;
      }
    }
    if (i == k + 1) break;
  }
  std::sort(members.begin(), members.end());
  return AutomorphismGroup(group, std::move(members));
}

}  // namespace linext
