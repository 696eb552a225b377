#include "linext/extension.hpp"

#include <string>

#include "linext/error.hpp"

namespace linext {

LoopCocycle::LoopCocycle(FiniteLoop loop, std::shared_ptr<const AutomorphismGroup> aut,
                         std::vector<AutIndex> p_table, std::vector<AutIndex> q_table)
    : loop_(std::move(loop)), aut_(std::move(aut)), p_(std::move(p_table)), q_(std::move(q_table)) {
  if (!aut_) throw InputError("cocycle needs an automorphism group");
  const std::size_t l = loop_.order();
  if (p_.size() != l * l || q_.size() != l * l) {
    throw InputError("cocycle tables must have " + std::to_string(l * l) + " entries");
  }
  for (std::size_t i = 0; i < l * l; ++i) {
    if (!aut_->contains(p_[i]) || !aut_->contains(q_[i])) {
      throw InputError("automorphism index out of range at cell (" + std::to_string(i / l) + "," +
                       std::to_string(i % l) + ")");
    }
  }
  const AutIndex id = aut_->identity();
  for (LoopElement x = 0; x < l; ++x) {
    if (p_[x * l] != id) {
      throw CocycleNormalizationError("P(" + std::to_string(x) + ", e) is not the identity");
    }
    if (q_[x] != id) {
      throw CocycleNormalizationError("Q(e, " + std::to_string(x) + ") is not the identity");
    }
  }
}

std::size_t LoopCocycle::cell(LoopElement a, LoopElement b) const {
  const std::size_t l = loop_.order();
  if (a >= l || b >= l) throw InputError("loop element out of range");
  return a * l + b;
}

LoopCocycle make_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut,
                         const std::vector<std::vector<AutIndex>>& p_rows,
                         const std::vector<std::vector<AutIndex>>& q_rows) {
  const std::size_t l = loop.order();
  auto flatten = [l](const std::vector<std::vector<AutIndex>>& rows, const char* name) {
    if (rows.size() != l) throw InputError(std::string(name) + " table has the wrong number of rows");
    std::vector<AutIndex> flat;
    for (const auto& row : rows) {
      if (row.size() != l) throw InputError(std::string(name) + " table has a row of the wrong length");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
  };
  return LoopCocycle(loop, std::move(aut), flatten(p_rows, "P"), flatten(q_rows, "Q"));
}

LoopCocycle identity_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut) {
  const std::size_t cells = loop.order() * loop.order();
  const AutIndex id = aut->identity();
  return LoopCocycle(loop, aut, std::vector<AutIndex>(cells, id), std::vector<AutIndex>(cells, id));
}

// --- ExtensionLoop ----------------------------------------------------------

namespace {

FiniteLoop extension_table(const LoopCocycle& c) {
  const FiniteLoop& base = c.loop();
  const AbelianGroup& group = c.group();
  const AutomorphismGroup& aut = c.automorphisms();
  const std::size_t l = base.order();
  const std::size_t n = group.size();
  const std::size_t size = l * n;
  std::vector<LoopElement> table(size * size);
  for (LoopElement x = 0; x < l; ++x) {
    for (LoopElement y = 0; y < l; ++y) {
      const auto& p = aut[c.P(x, y)];
      const auto& q = aut[c.Q(x, y)];
      const LoopElement xy = base.mul(x, y);
      for (GroupElement a = 0; a < n; ++a) {
        for (GroupElement b = 0; b < n; ++b) {
          const std::size_t row = x * n + a;
          const std::size_t col = y * n + b;
          table[row * size + col] = static_cast<LoopElement>(xy * n + group.add(p(a), q(b)));
        }
      }
    }
  }
  return FiniteLoop(size, std::move(table));
}

}  // namespace

ExtensionLoop::ExtensionLoop(LoopCocycle cocycle)
    : cocycle_(std::move(cocycle)), loop_(extension_table(cocycle_)) {}

LoopElement ExtensionLoop::encode(ExtensionElement e) const {
  const std::size_t n = cocycle_.group().size();
  if (e.xi >= cocycle_.loop().order() || e.a >= n) throw InputError("extension element out of range");
  return static_cast<LoopElement>(e.xi * n + e.a);
}

ExtensionElement ExtensionLoop::decode(LoopElement index) const {
  const std::size_t n = cocycle_.group().size();
  if (index >= loop_.order()) throw InputError("extension index out of range");
  return {static_cast<LoopElement>(index / n), static_cast<GroupElement>(index % n)};
}

ExtensionElement ExtensionLoop::mul(ExtensionElement x, ExtensionElement y) const {
  return decode(loop_.mul(encode(x), encode(y)));
}

std::vector<LoopElement> ExtensionLoop::kernel() const {
  std::vector<LoopElement> out(cocycle_.group().size());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = static_cast<LoopElement>(a);
  return out;
}

ExtensionLoop build_extension(const LoopCocycle& cocycle) { return ExtensionLoop(cocycle); }

LoopCocycle opposite_cocycle(const LoopCocycle& c) {
  const std::size_t l = c.loop().order();
  std::vector<AutIndex> p(l * l), q(l * l);
  for (LoopElement a = 0; a < l; ++a) {
    for (LoopElement b = 0; b < l; ++b) {
      p[a * l + b] = c.Q(b, a);
      q[a * l + b] = c.P(b, a);
    }
  }
  return LoopCocycle(opposite_loop(c.loop()), c.shared_automorphisms(), std::move(p), std::move(q));
}

// --- closed-form inverses -----------------------------------------------------

ExtensionElement extension_left_inverse(const LoopCocycle& c, ExtensionElement e) {
  const auto& aut = c.automorphisms();
  const LoopElement xi = c.loop().left_inverse(e.xi);
  const AutIndex m = aut.compose(aut.inverse(c.P(xi, e.xi)), c.Q(xi, e.xi));
  return {xi, c.group().neg(aut[m](e.a))};
}

ExtensionElement extension_right_inverse(const LoopCocycle& c, ExtensionElement e) {
  const auto& aut = c.automorphisms();
  const LoopElement xi = c.loop().right_inverse(e.xi);
  const AutIndex m = aut.compose(aut.inverse(c.Q(e.xi, xi)), c.P(e.xi, xi));
  return {xi, c.group().neg(aut[m](e.a))};
}

// --- condition checkers -------------------------------------------------------

namespace {

void require_two_sided_inverses(const FiniteLoop& loop, const char* what) {
  if (!inverses_coincide(loop)) {
    throw PreconditionError(std::string(what) + ": loop lacks two-sided inverses");
  }
}

}  // namespace

bool is_commutative_extension(const LoopCocycle& c) {
  const FiniteLoop& loop = c.loop();
  if (!is_commutative(loop)) return false;
  for (LoopElement a = 0; a < loop.order(); ++a) {
    for (LoopElement b = 0; b < loop.order(); ++b) {
      if (c.P(a, b) != c.Q(b, a)) return false;
    }
  }
  return true;
}

InverseCoincidenceData inverse_coincidence_data(const LoopCocycle& c) {
  const FiniteLoop& loop = c.loop();
  require_two_sided_inverses(loop, "inverse_coincidence_data");
  InverseCoincidenceData data;
  for (LoopElement x = 0; x < loop.order(); ++x) {
    const LoopElement xi = loop.left_inverse(x);
    data.pmap.push_back(c.P(xi, x));
    data.qmap.push_back(c.Q(xi, x));
  }
  return data;
}

namespace {

std::optional<LoopElement> cip_violation(const FiniteLoop& loop, const AutomorphismGroup& aut,
                                         const InverseCoincidenceData& d) {
  if (d.pmap.size() != loop.order() || d.qmap.size() != loop.order()) {
    throw InputError("p/q maps must have one entry per loop element");
  }
  for (LoopElement x = 0; x < loop.order(); ++x) {
    const LoopElement xi = loop.left_inverse(x);
    const AutIndex rhs = aut.compose(d.qmap[xi], aut.inverse(d.pmap[x]), d.qmap[x]);
    if (d.pmap[xi] != rhs) return x;
  }
  return std::nullopt;
}

}  // namespace

bool satisfies_cip(const FiniteLoop& loop, const AutomorphismGroup& aut,
                   const InverseCoincidenceData& data) {
  require_two_sided_inverses(loop, "satisfies_cip");
  return !cip_violation(loop, aut, data);
}

std::optional<LoopElement> find_cip_violation(const LoopCocycle& c) {
  return cip_violation(c.loop(), c.automorphisms(), inverse_coincidence_data(c));
}

bool check_cip(const LoopCocycle& c) { return !find_cip_violation(c); }

std::optional<PairViolation> find_lip_condition_violation(const LoopCocycle& c) {
  const FiniteLoop& loop = c.loop();
  if (!has_lip(loop)) throw PreconditionError("check_lip_conditions: loop lacks the left inverse property");
  const auto& aut = c.automorphisms();
  for (LoopElement x = 0; x < loop.order(); ++x) {
    const LoopElement xi = loop.left_inverse(x);
    for (LoopElement y = 0; y < loop.order(); ++y) {
      const LoopElement xy = loop.mul(x, y);
      const AutIndex q_inv = aut.inverse(c.Q(x, y));
      const bool q_ok = c.Q(xi, xy) == q_inv;
      const AutIndex p_rhs = aut.compose(q_inv, c.P(x, y), aut.inverse(c.Q(xi, x)), c.P(xi, x));
      if (!q_ok || c.P(xi, xy) != p_rhs) return PairViolation{x, y};
    }
  }
  return std::nullopt;
}

bool check_lip_conditions(const LoopCocycle& c) { return !find_lip_condition_violation(c); }

std::optional<PairViolation> find_rip_condition_violation(const LoopCocycle& c) {
  const FiniteLoop& loop = c.loop();
  if (!has_rip(loop)) throw PreconditionError("check_rip_conditions: loop lacks the right inverse property");
  const auto& aut = c.automorphisms();
  for (LoopElement x = 0; x < loop.order(); ++x) {
    for (LoopElement y = 0; y < loop.order(); ++y) {
      const LoopElement yi = loop.left_inverse(y);
      const LoopElement xy = loop.mul(x, y);
      const AutIndex p_inv = aut.inverse(c.P(x, y));
      const bool p_ok = c.P(xy, yi) == p_inv;
      const AutIndex q_rhs = aut.compose(p_inv, c.Q(x, y), aut.inverse(c.P(y, yi)), c.Q(y, yi));
      if (!p_ok || c.Q(xy, yi) != q_rhs) return PairViolation{x, y};
    }
  }
  return std::nullopt;
}

bool check_rip_conditions(const LoopCocycle& c) { return !find_rip_condition_violation(c); }

bool is_strongly_linear(const LoopCocycle& c) {
  const AutIndex id = c.automorphisms().identity();
  for (LoopElement x = 0; x < c.loop().order(); ++x) {
    if (c.P(0, x) != id || c.Q(x, 0) != id) return false;
  }
  return true;
}

namespace {

void require_strongly_linear_ip(const LoopCocycle& c, const char* what) {
  if (!is_strongly_linear(c)) throw PreconditionError(std::string(what) + ": cocycle is not strongly linear");
  if (!has_ip(c.loop())) throw PreconditionError(std::string(what) + ": loop lacks the inverse property");
}

}  // namespace

std::optional<PairViolation> find_ip_condition_violation(const LoopCocycle& c) {
  require_strongly_linear_ip(c, "check_ip_conditions");
  const FiniteLoop& loop = c.loop();
  const auto& aut = c.automorphisms();
  for (LoopElement x = 0; x < loop.order(); ++x) {
    const LoopElement xi = loop.left_inverse(x);
    for (LoopElement y = 0; y < loop.order(); ++y) {
      const LoopElement yi = loop.left_inverse(y);
      const LoopElement xy = loop.mul(x, y);
      const AutIndex p = c.P(x, y);
      const AutIndex q = c.Q(x, y);
      const bool ok = c.P(xy, yi) == aut.inverse(p) &&
                      c.Q(xy, yi) == aut.compose(aut.inverse(p), q) &&
                      c.Q(xi, xy) == aut.inverse(q) &&
                      c.P(xi, xy) == aut.compose(aut.inverse(q), p);
      if (!ok) return PairViolation{x, y};
    }
  }
  return std::nullopt;
}

bool check_ip_conditions(const LoopCocycle& c) { return !find_ip_condition_violation(c); }

std::optional<PairViolation> find_equivariance_violation(const LoopCocycle& c) {
  require_strongly_linear_ip(c, "check_equivariance");
  const FiniteLoop& loop = c.loop();
  if (has_order3_element(loop)) {
    throw Order3Error("check_equivariance: loop has an element x != e with x*x = x^-1");
  }
  const auto& aut = c.automorphisms();
  // Gamma acts on all of L x L; on the boundary pairs equivariance together
  // with strong linearity pins P = Q = Id.
  for (LoopElement x = 0; x < loop.order(); ++x) {
    for (LoopElement y = 0; y < loop.order(); ++y) {
      const LoopPair pair{x, y};
      const AutPair value = c.at(pair);
      for (auto g : kGammaElements) {
        if (c.at(apply_gamma(loop, g, pair)) != act_on_pair(aut, g, value)) return PairViolation{x, y};
      }
    }
  }
  return std::nullopt;
}

bool check_equivariance(const LoopCocycle& c) { return !find_equivariance_violation(c); }

}  // namespace linext
