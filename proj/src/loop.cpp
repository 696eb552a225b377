#include "linext/loop.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "linext/error.hpp"

namespace linext {

FiniteLoop::FiniteLoop(std::size_t order, std::vector<LoopElement> table)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0) throw InputError("loop order must be >= 1");
  if (table_.size() != order_ * order_) {
    throw InputError("table has " + std::to_string(table_.size()) + " entries, expected " +
                     std::to_string(order_ * order_));
  }
  const std::size_t l = order_;
  for (auto v : table_) {
    if (v >= l) throw StructureError("entry " + std::to_string(v) + " out of range");
  }
  std::vector<char> seen(l);
  for (std::size_t r = 0; r < l; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < l; ++c) {
      auto v = table_[r * l + c];
      if (seen[v]) {
        throw StructureError("row " + std::to_string(r) + " repeats entry " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < l; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < l; ++r) {
      auto v = table_[r * l + c];
      if (seen[v]) {
        throw StructureError("column " + std::to_string(c) + " repeats entry " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  for (std::size_t i = 0; i < l; ++i) {
    if (table_[i] != i) throw IdentityPositionError("row 0 is not the identity permutation");
    if (table_[i * l] != i) throw IdentityPositionError("column 0 is not the identity permutation");
  }

  ldiv_.resize(l * l);
  rdiv_.resize(l * l);
  for (std::size_t x = 0; x < l; ++x) {
    for (std::size_t z = 0; z < l; ++z) {
      const LoopElement y = table_[x * l + z];
      ldiv_[x * l + y] = static_cast<LoopElement>(z);  // x * z = y
      rdiv_[y * l + z] = static_cast<LoopElement>(x);  // x * z = y  =>  y / z = x
    }
  }
}

std::size_t FiniteLoop::index(LoopElement x) const {
  if (x >= order_) {
    throw InputError("loop element " + std::to_string(x) + " out of range for order " +
                     std::to_string(order_));
  }
  return x;
}

std::vector<std::vector<LoopElement>> FiniteLoop::rows() const {
  std::vector<std::vector<LoopElement>> out(order_);
  for (std::size_t r = 0; r < order_; ++r) {
    out[r].assign(table_.begin() + r * order_, table_.begin() + (r + 1) * order_);
  }
  return out;
}

FiniteLoop make_loop(std::size_t order, const std::vector<std::vector<LoopElement>>& rows) {
  if (rows.size() != order) throw InputError("expected " + std::to_string(order) + " rows");
  std::vector<LoopElement> table;
  table.reserve(order * order);
  for (std::size_t r = 0; r < order; ++r) {
    if (rows[r].size() != order) {
      throw InputError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                       " entries, expected " + std::to_string(order));
    }
    table.insert(table.end(), rows[r].begin(), rows[r].end());
  }
  return FiniteLoop(order, std::move(table));
}

FiniteLoop cyclic_loop(std::size_t n) {
  std::vector<LoopElement> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = static_cast<LoopElement>((x + y) % n);
  }
  return FiniteLoop(n, std::move(table));
}

namespace {

// iota(x) for the LIP identity iota(x)*(x*y) = y; nullopt if some x has no
// candidate or the candidates do not form a bijection.
std::optional<std::vector<LoopElement>> iota_map(const FiniteLoop& loop, IotaSearch search,
                                                 bool left) {
  const std::size_t l = loop.order();
  std::vector<LoopElement> iota(l);
  if (search == IotaSearch::LeftInverse) {
    for (LoopElement x = 0; x < l; ++x) iota[x] = loop.left_inverse(x);
    return iota;
  }
  std::vector<char> used(l, 0);
  for (LoopElement x = 0; x < l; ++x) {
    std::optional<LoopElement> found;
    for (LoopElement z = 0; z < l && !found; ++z) {
      bool ok = true;
      for (LoopElement y = 0; y < l && ok; ++y) {
        ok = left ? loop.mul(z, loop.mul(x, y)) == y : loop.mul(loop.mul(y, x), z) == y;
      }
      if (ok) found = z;
    }
    if (!found || used[*found]) return std::nullopt;
    used[*found] = 1;
    iota[x] = *found;
  }
  return iota;
}

std::optional<PairViolation> find_violation(const FiniteLoop& loop, IotaSearch search, bool left) {
  const std::size_t l = loop.order();
  auto iota = iota_map(loop, search, left);
  if (!iota) {
    // No admissible iota; report the first failure of the left-inverse candidate.
    iota = iota_map(loop, IotaSearch::LeftInverse, left);
  }
  for (LoopElement x = 0; x < l; ++x) {
    for (LoopElement y = 0; y < l; ++y) {
      const LoopElement got =
          left ? loop.mul((*iota)[x], loop.mul(x, y)) : loop.mul(loop.mul(y, x), (*iota)[x]);
      if (got != y) return PairViolation{x, y};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PairViolation> find_lip_violation(const FiniteLoop& loop, IotaSearch search) {
  return find_violation(loop, search, true);
}

std::optional<PairViolation> find_rip_violation(const FiniteLoop& loop, IotaSearch search) {
  return find_violation(loop, search, false);
}

std::optional<LoopElement> find_inverse_mismatch(const FiniteLoop& loop) {
  for (LoopElement x = 0; x < loop.order(); ++x) {
    if (loop.left_inverse(x) != loop.right_inverse(x)) return x;
  }
  return std::nullopt;
}

bool has_lip(const FiniteLoop& loop, IotaSearch search) {
  return !find_lip_violation(loop, search);
}
bool has_rip(const FiniteLoop& loop, IotaSearch search) {
  return !find_rip_violation(loop, search);
}
bool has_ip(const FiniteLoop& loop, IotaSearch search) {
  return has_lip(loop, search) && has_rip(loop, search);
}
bool inverses_coincide(const FiniteLoop& loop) { return !find_inverse_mismatch(loop); }

bool has_order3_element(const FiniteLoop& loop) {
  if (!inverses_coincide(loop)) {
    throw UndefinedFeatureError("element order 3 is undefined without two-sided inverses");
  }
  for (LoopElement x = 1; x < loop.order(); ++x) {
    if (loop.mul(x, x) == loop.left_inverse(x)) return true;
  }
  return false;
}

bool is_commutative(const FiniteLoop& loop) {
  const std::size_t l = loop.order();
  for (LoopElement x = 0; x < l; ++x) {
    for (LoopElement y = x + 1; y < l; ++y) {
      if (loop.mul(x, y) != loop.mul(y, x)) return false;
    }
  }
  return true;
}

bool is_associative(const FiniteLoop& loop) {
  const std::size_t l = loop.order();
  for (LoopElement x = 0; x < l; ++x) {
    for (LoopElement y = 0; y < l; ++y) {
      for (LoopElement z = 0; z < l; ++z) {
        if (loop.mul(loop.mul(x, y), z) != loop.mul(x, loop.mul(y, z))) return false;
      }
    }
  }
  return true;
}

LoopPropertyReport analyze_properties(const FiniteLoop& loop, IotaSearch search) {
  LoopPropertyReport report;
  report.has_lip = has_lip(loop, search);
  report.has_rip = has_rip(loop, search);
  report.has_ip = report.has_lip && report.has_rip;
  report.two_sided_inverses_coincide = inverses_coincide(loop);
  if (report.two_sided_inverses_coincide) {
    report.has_order3_element = has_order3_element(loop);
    std::vector<LoopElement> inverse(loop.order());
    for (LoopElement x = 0; x < loop.order(); ++x) inverse[x] = loop.left_inverse(x);
    report.inverse = std::move(inverse);
  }
  return report;
}

FiniteLoop opposite_loop(const FiniteLoop& loop) {
  const std::size_t l = loop.order();
  std::vector<LoopElement> table(l * l);
  for (LoopElement x = 0; x < l; ++x) {
    for (LoopElement y = 0; y < l; ++y) table[x * l + y] = loop.mul(y, x);
  }
  return FiniteLoop(l, std::move(table));
}

namespace {

struct CosetPartition {
  std::vector<std::vector<LoopElement>> cosets;  // sorted, ordered by smallest element
  std::vector<std::size_t> coset_of;
};

std::vector<char> membership(const FiniteLoop& loop, const std::vector<LoopElement>& subset) {
  const std::size_t l = loop.order();
  std::vector<char> in(l, 0);
  for (auto n : subset) {
    if (n >= l) throw InputError("subset element " + std::to_string(n) + " out of range");
    in[n] = 1;
  }
  if (!in[0]) throw InputError("subset does not contain the identity");
  for (LoopElement a = 0; a < l; ++a) {
    if (!in[a]) continue;
    for (LoopElement b = 0; b < l; ++b) {
      if (!in[b]) continue;
      if (!in[loop.mul(a, b)] || !in[loop.left_div(a, b)] || !in[loop.right_div(a, b)]) {
        throw InputError("subset is not a subloop");
      }
    }
  }
  return in;
}

// Cosets as a congruence, or nullopt if xN != Nx, the cosets overlap, or
// coset products are not cosets.
std::optional<CosetPartition> normal_cosets(const FiniteLoop& loop,
                                            const std::vector<LoopElement>& subset) {
  const std::size_t l = loop.order();
  auto in = membership(loop, subset);
  std::vector<LoopElement> members;
  for (LoopElement a = 0; a < l; ++a) {
    if (in[a]) members.push_back(a);
  }

  CosetPartition part;
  part.coset_of.assign(l, l);
  for (LoopElement x = 0; x < l; ++x) {
    std::vector<LoopElement> left, right;
    for (auto n : members) {
      left.push_back(loop.mul(x, n));
      right.push_back(loop.mul(n, x));
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (left != right) return std::nullopt;
    if (part.coset_of[x] != l) {
      if (part.cosets[part.coset_of[x]] != left) return std::nullopt;
      continue;
    }
    for (auto y : left) {
      if (part.coset_of[y] != l) return std::nullopt;  // overlaps an earlier coset
      part.coset_of[y] = part.cosets.size();
    }
    part.cosets.push_back(std::move(left));
  }

  for (const auto& a : part.cosets) {
    for (const auto& b : part.cosets) {
      const std::size_t target = part.coset_of[loop.mul(a.front(), b.front())];
      for (auto u : a) {
        for (auto v : b) {
          if (part.coset_of[loop.mul(u, v)] != target) return std::nullopt;
        }
      }
    }
  }
  return part;
}

}  // namespace

bool is_normal_subloop(const FiniteLoop& loop, const std::vector<LoopElement>& subset) {
  return normal_cosets(loop, subset).has_value();
}

FiniteLoop quotient_loop(const FiniteLoop& loop, const std::vector<LoopElement>& subset) {
  auto part = normal_cosets(loop, subset);
  if (!part) throw DomainError("quotient by a subloop that is not normal");
  const std::size_t m = part->cosets.size();
  std::vector<LoopElement> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      table[i * m + j] = static_cast<LoopElement>(
          part->coset_of[loop.mul(part->cosets[i].front(), part->cosets[j].front())]);
    }
  }
  return FiniteLoop(m, std::move(table));
}

}  // namespace linext
