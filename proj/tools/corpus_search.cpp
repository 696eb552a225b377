// Regenerates the bundled loop corpus. Groups are written from their
// definitions; the non-group entries are the first hits of a backtracking
// search over normalized Latin squares, so none of the tables is hand-typed.

#include <algorithm>
#include <array>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "linext/io.hpp"
#include "linext/loop.hpp"

namespace {

using linext::FiniteLoop;
using linext::LoopElement;

struct SearchSpec {
  std::size_t order = 0;
  /// Two-sided inverse map to impose; empty means unconstrained.
  std::vector<int> inverse;
  bool lip = false;
  bool rip = false;
  bool forbid_order3 = false;
};

class LatinSearch {
 public:
  explicit LatinSearch(SearchSpec spec)
      : spec_(std::move(spec)), n_(spec_.order), cell_(n_ * n_, -1), row_(n_ * n_, 0), col_(n_ * n_, 0) {}

  /// Calls `accept` on every completed table until it returns true.
  void run(const std::function<bool(const FiniteLoop&)>& accept) {
    accept_ = &accept;
    done_ = false;
    bool ok = true;
    for (std::size_t i = 0; i < n_ && ok; ++i) ok = assign(0, i, static_cast<int>(i)) && assign(i, 0, static_cast<int>(i));
    if (!spec_.inverse.empty()) {
      for (std::size_t x = 0; x < n_ && ok; ++x) {
        const auto xi = static_cast<std::size_t>(spec_.inverse[x]);
        ok = assign(xi, x, 0) && assign(x, xi, 0);
      }
    }
    if (ok) recurse();
  }

 private:
  int at(std::size_t x, std::size_t y) const { return cell_[x * n_ + y]; }

  bool assign(std::size_t x, std::size_t y, int z) {
    std::vector<std::array<std::size_t, 3>> pending{{x, y, static_cast<std::size_t>(z)}};
    while (!pending.empty()) {
      auto [a, b, c] = pending.back();
      pending.pop_back();
      const int current = at(a, b);
      if (current >= 0) {
        if (current != static_cast<int>(c)) return false;
        continue;
      }
      if (row_[a * n_ + c] || col_[b * n_ + c]) return false;
      if (spec_.forbid_order3 && a == b && a != 0 && static_cast<int>(c) == spec_.inverse[a]) return false;
      cell_[a * n_ + b] = static_cast<int>(c);
      row_[a * n_ + c] = 1;
      col_[b * n_ + c] = 1;
      trail_.push_back(a * n_ + b);
      if (spec_.lip) pending.push_back({static_cast<std::size_t>(spec_.inverse[a]), c, b});
      if (spec_.rip) pending.push_back({c, static_cast<std::size_t>(spec_.inverse[b]), a});
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto idx = trail_.back();
      trail_.pop_back();
      const auto v = static_cast<std::size_t>(cell_[idx]);
      row_[(idx / n_) * n_ + v] = 0;
      col_[(idx % n_) * n_ + v] = 0;
      cell_[idx] = -1;
    }
  }

  void recurse() {
    if (done_) return;
    auto it = std::find(cell_.begin(), cell_.end(), -1);
    if (it == cell_.end()) {
      std::vector<LoopElement> table(cell_.begin(), cell_.end());
      done_ = (*accept_)(FiniteLoop(n_, std::move(table)));
      return;
    }
    const auto idx = static_cast<std::size_t>(it - cell_.begin());
    for (std::size_t v = 0; v < n_ && !done_; ++v) {
      const auto mark = trail_.size();
      if (assign(idx / n_, idx % n_, static_cast<int>(v))) recurse();
      undo(mark);
    }
  }

  SearchSpec spec_;
  std::size_t n_;
  std::vector<int> cell_;
  std::vector<char> row_;
  std::vector<char> col_;
  std::vector<std::size_t> trail_;
  const std::function<bool(const FiniteLoop&)>* accept_ = nullptr;
  bool done_ = false;
};

// All involutions of 0..n-1 fixing 0, in lexicographic order of their tables.
std::vector<std::vector<int>> involutions(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  do {
    bool ok = perm[0] == 0;
    for (std::size_t i = 0; i < n && ok; ++i) ok = perm[static_cast<std::size_t>(perm[i])] == static_cast<int>(i);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::optional<FiniteLoop> first_loop(std::size_t order, bool lip, bool rip, bool forbid_order3,
                                     const std::function<bool(const FiniteLoop&)>& keep) {
  for (const auto& inv : involutions(order)) {
    std::optional<FiniteLoop> found;
    LatinSearch search({order, inv, lip, rip, forbid_order3});
    search.run([&](const FiniteLoop& loop) {
      if (!keep(loop)) return false;
      found = loop;
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

FiniteLoop direct_product(const std::vector<std::size_t>& orders) {
  std::size_t n = 1;
  for (auto o : orders) n *= o;
  std::vector<LoopElement> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t a = x, b = y, result = 0, scale = 1;
      for (std::size_t i = orders.size(); i-- > 0;) {
        const auto o = orders[i];
        result += ((a % o + b % o) % o) * scale;
        scale *= o;
        a /= o;
        b /= o;
      }
      table[x * n + y] = static_cast<LoopElement>(result);
    }
  }
  return FiniteLoop(n, std::move(table));
}

// Smallest relabeled table over all bijections fixing 0.
std::vector<LoopElement> canonical_table(const FiniteLoop& loop) {
  const std::size_t n = loop.order();
  std::vector<LoopElement> perm(n), inv(n), best, t(n * n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<LoopElement>(i);
  do {
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = static_cast<LoopElement>(i);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) t[perm[x] * n + perm[y]] = perm[loop.mul(static_cast<LoopElement>(x), static_cast<LoopElement>(y))];
    if (best.empty() || t < best) best = t;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

// Every IP loop of the given order, summarized.
int census(std::size_t order) {
  std::size_t total = 0, nonassoc = 0, nonassoc_free = 0;
  std::vector<std::vector<LoopElement>> classes;
  for (const auto& inv : involutions(order)) {
    LatinSearch search({order, inv, true, true, false});
    search.run([&](const FiniteLoop& loop) {
      ++total;
      if (!linext::is_associative(loop)) {
        ++nonassoc;
        if (!linext::has_order3_element(loop)) ++nonassoc_free;
        auto c = canonical_table(loop);
        if (std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(std::move(c));
      }
      return false;
    });
  }
  std::cout << "order=" << order << "\nip_loops=" << total << "\nnonassociative=" << nonassoc
            << "\nnonassociative_classes=" << classes.size() << "\nnonassociative_without_order3=" << nonassoc_free
            << "\n";
  return 0;
}

void write(const std::filesystem::path& dir, const std::string& name, const std::string& comment,
           const FiniteLoop& loop) {
  linext::write_file((dir / (name + ".loop")).string(), "# " + comment + "\n" + linext::emit_loop(loop));
  std::cout << "wrote " << name << ".loop\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2 && std::string(argv[1]) == "--census") return census(std::stoul(argv[2]));
  const std::filesystem::path dir = argc > 1 ? argv[1] : "corpus";
  std::filesystem::create_directories(dir);

  write(dir, "z1", "trivial loop", direct_product({1}));
  write(dir, "z2", "cyclic group Z2", direct_product({2}));
  write(dir, "z3", "cyclic group Z3 (has elements of order 3)", direct_product({3}));
  write(dir, "z4", "cyclic group Z4", direct_product({4}));
  write(dir, "klein", "Klein four-group Z2xZ2", direct_product({2, 2}));
  write(dir, "z5", "cyclic group Z5", direct_product({5}));
  write(dir, "z7", "cyclic group Z7", direct_product({7}));
  write(dir, "z8", "cyclic group Z8", direct_product({8}));
  write(dir, "z2xz4", "abelian group Z2xZ4", direct_product({2, 4}));
  write(dir, "z2xz2xz2", "elementary abelian group Z2xZ2xZ2", direct_product({2, 2, 2}));

  using namespace linext;
  // Every non-associative IP loop of order 7 has x*x = x^-1 for all x != e,
  // so the order-3-free entry comes from order 8.
  auto ip7 = first_loop(7, true, true, false, [](const FiniteLoop& l) { return !is_associative(l) && has_ip(l); });
  if (!ip7) {
    std::cerr << "no non-associative IP loop of order 7\n";
    return 1;
  }
  write(dir, "ip7", "non-associative IP loop of order 7 (search result; every x != e has x*x = x^-1)", *ip7);

  auto ip8 = first_loop(8, true, true, true, [](const FiniteLoop& l) {
    return !is_associative(l) && has_ip(l) && !has_order3_element(l);
  });
  if (!ip8) {
    std::cerr << "no non-associative IP loop of order 8 without order-3 elements\n";
    return 1;
  }
  write(dir, "ip8", "non-associative IP loop of order 8 without order-3 elements (search result)", *ip8);

  std::optional<FiniteLoop> lip_only;
  for (std::size_t n = 2; n <= 8 && !lip_only; ++n) {
    lip_only = first_loop(n, true, false, false, [](const FiniteLoop& l) { return has_lip(l) && !has_rip(l); });
  }
  if (!lip_only) {
    std::cerr << "no LIP loop without RIP up to order 8\n";
    return 1;
  }
  write(dir, "lip" + std::to_string(lip_only->order()), "smallest LIP loop without RIP (search result)", *lip_only);

  auto inv5 = first_loop(5, false, false, false, [](const FiniteLoop& l) {
    return inverses_coincide(l) && !has_lip(l) && !has_rip(l);
  });
  if (!inv5) return 1;
  write(dir, "inv5", "order-5 loop with two-sided inverses but neither LIP nor RIP (search result)", *inv5);

  std::optional<FiniteLoop> noinv5;
  LatinSearch plain({5, {}, false, false, false});
  plain.run([&](const FiniteLoop& l) {
    if (inverses_coincide(l)) return false;
    noinv5 = l;
    return true;
  });
  if (!noinv5) return 1;
  write(dir, "noinv5", "order-5 loop whose left and right inverses differ (search result)", *noinv5);
  return 0;
}
