#pragma once
// Definition-level brute force over raw tables. Nothing here calls the
// library's property code, only its accessors.
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "linext/extension.hpp"

namespace oracle {

struct Table {
  std::size_t n = 0;
  std::vector<std::uint32_t> t;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return t[x * n + y]; }
};

inline Table of(const linext::FiniteLoop& loop) { return {loop.order(), loop.table()}; }

// z with z*x = y, found by scanning
inline std::uint32_t solve_left_factor(const Table& m, std::uint32_t x, std::uint32_t y) {
  for (std::uint32_t z = 0; z < m.n; ++z)
    if (m.mul(z, x) == y) return z;
  return UINT32_MAX;
}
inline std::uint32_t solve_right_factor(const Table& m, std::uint32_t x, std::uint32_t y) {
  for (std::uint32_t z = 0; z < m.n; ++z)
    if (m.mul(x, z) == y) return z;
  return UINT32_MAX;
}

inline bool is_latin_loop(const Table& m) {
  for (std::uint32_t i = 0; i < m.n; ++i) {
    std::vector<char> row(m.n), col(m.n);
    for (std::uint32_t j = 0; j < m.n; ++j) {
      if (m.mul(i, j) >= m.n || m.mul(j, i) >= m.n) return false;
      if (row[m.mul(i, j)]++ || col[m.mul(j, i)]++) return false;
    }
    if (m.mul(0, i) != i || m.mul(i, 0) != i) return false;
  }
  return true;
}

inline bool lip(const Table& m) {
  for (std::uint32_t x = 0; x < m.n; ++x) {
    const auto i = solve_left_factor(m, x, 0);
    for (std::uint32_t y = 0; y < m.n; ++y)
      if (m.mul(i, m.mul(x, y)) != y) return false;
  }
  return true;
}

inline bool rip(const Table& m) {
  for (std::uint32_t x = 0; x < m.n; ++x) {
    const auto i = solve_left_factor(m, x, 0);
    for (std::uint32_t y = 0; y < m.n; ++y)
      if (m.mul(m.mul(y, x), i) != y) return false;
  }
  return true;
}

inline bool ip(const Table& m) { return lip(m) && rip(m); }

inline bool inverses_coincide(const Table& m) {
  for (std::uint32_t x = 0; x < m.n; ++x)
    if (solve_left_factor(m, x, 0) != solve_right_factor(m, x, 0)) return false;
  return true;
}

inline bool commutative(const Table& m) {
  for (std::uint32_t x = 0; x < m.n; ++x)
    for (std::uint32_t y = 0; y < m.n; ++y)
      if (m.mul(x, y) != m.mul(y, x)) return false;
  return true;
}

inline bool associative(const Table& m) {
  for (std::uint32_t x = 0; x < m.n; ++x)
    for (std::uint32_t y = 0; y < m.n; ++y)
      for (std::uint32_t z = 0; z < m.n; ++z)
        if (m.mul(m.mul(x, y), z) != m.mul(x, m.mul(y, z))) return false;
  return true;
}

// mixed radix, first factor most significant
inline std::uint32_t group_add(const std::vector<std::uint32_t>& orders, std::uint32_t a, std::uint32_t b) {
  std::uint32_t out = 0, scale = 1;
  for (std::size_t k = orders.size(); k-- > 0;) {
    const auto n = orders[k];
    out += ((a % n + b % n) % n) * scale;
    a /= n;
    b /= n;
    scale *= n;
  }
  return out;
}

inline std::uint32_t group_size(const std::vector<std::uint32_t>& orders) {
  return std::accumulate(orders.begin(), orders.end(), 1u, std::multiplies<>());
}

// every additive permutation, lexicographic
inline std::vector<std::vector<std::uint32_t>> automorphisms(const std::vector<std::uint32_t>& orders) {
  std::vector<std::uint32_t> perm(group_size(orders));
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::vector<std::uint32_t>> out;
  do {
    bool ok = perm[0] == 0;
    for (std::uint32_t a = 0; ok && a < perm.size(); ++a)
      for (std::uint32_t b = 0; ok && b < perm.size(); ++b)
        ok = perm[group_add(orders, a, b)] == group_add(orders, perm[a], perm[b]);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// F(P,Q) straight from the definition
inline Table extension(const linext::LoopCocycle& c) {
  const auto& orders = c.group().orders();
  const std::uint32_t m = group_size(orders);
  const std::uint32_t l = static_cast<std::uint32_t>(c.loop().order());
  Table out{std::size_t{l} * m, std::vector<std::uint32_t>(std::size_t{l} * m * l * m)};
  for (std::uint32_t x = 0; x < l; ++x)
    for (std::uint32_t a = 0; a < m; ++a)
      for (std::uint32_t y = 0; y < l; ++y)
        for (std::uint32_t b = 0; b < m; ++b) {
          const auto& p = c.automorphisms()[c.P(x, y)].table();
          const auto& q = c.automorphisms()[c.Q(x, y)].table();
          const auto xi = c.loop().mul(x, y);
          out.t[(x * m + a) * out.n + (y * m + b)] = xi * m + group_add(orders, p[a], q[b]);
        }
  return out;
}

inline bool strongly_linear(const linext::LoopCocycle& c) {
  const auto id = c.automorphisms().identity();
  for (std::uint32_t x = 0; x < c.loop().order(); ++x)
    if (c.P(0, x) != id || c.Q(x, 0) != id) return false;
  return true;
}

}  // namespace oracle
