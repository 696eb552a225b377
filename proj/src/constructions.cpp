#include "linext/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "linext/error.hpp"

namespace linext {

// --- Sigma ------------------------------------------------------------------

SigmaSet::SigmaSet(const FiniteLoop& loop) : order_(loop.order()), member_(order_ * order_, 0) {
  if (!inverses_coincide(loop)) throw PreconditionError("sigma set: loop lacks two-sided inverses");
  for (LoopElement x = 0; x < order_; ++x) {
    member_[x * order_] = 1;
    member_[x] = 1;
    member_[loop.left_inverse(x) * order_ + x] = 1;
  }
  for (LoopElement x = 0; x < order_; ++x) {
    for (LoopElement y = 0; y < order_; ++y) {
      if (member_[x * order_ + y]) pairs_.push_back({x, y});
    }
  }
}

std::vector<LoopPair> SigmaSet::complement() const {
  std::vector<LoopPair> out;
  for (LoopElement x = 0; x < order_; ++x) {
    for (LoopElement y = 0; y < order_; ++y) {
      if (!member_[x * order_ + y]) out.push_back({x, y});
    }
  }
  return out;
}

SigmaSet sigma_set(const FiniteLoop& loop) { return SigmaSet(loop); }

// --- orbits -----------------------------------------------------------------

namespace {

void require_mode_preconditions(const FiniteLoop& loop, OrbitMode mode) {
  switch (mode) {
    case OrbitMode::Phi:
      if (!has_lip(loop)) throw PreconditionError("phi orbits need the left inverse property");
      break;
    case OrbitMode::Psi:
      if (!has_rip(loop)) throw PreconditionError("psi orbits need the right inverse property");
      break;
    case OrbitMode::Gamma:
      if (!has_ip(loop)) throw PreconditionError("gamma orbits need the inverse property");
      if (has_order3_element(loop)) {
        throw Order3Error("gamma orbits need a loop without elements x != e with x*x = x^-1");
      }
      break;
  }
}

std::vector<GammaElement> carriers_for(OrbitMode mode) {
  switch (mode) {
    case OrbitMode::Phi: return {GammaElement::Identity, GammaElement::Phi};
    case OrbitMode::Psi: return {GammaElement::Identity, GammaElement::Psi};
    case OrbitMode::Gamma: return {kGammaElements.begin(), kGammaElements.end()};
  }
  throw InternalError("unknown orbit mode");
}

}  // namespace

std::vector<LoopPair> gamma_orbit(const FiniteLoop& loop, LoopPair pair) {
  if (!has_ip(loop)) throw PreconditionError("gamma orbit: loop lacks the inverse property");
  if (pair.first >= loop.order() || pair.second >= loop.order()) throw InputError("pair out of range");
  if (SigmaSet(loop).contains(pair)) throw InputError("gamma orbit: pair lies in the boundary set");
  std::vector<LoopPair> out;
  for (auto g : kGammaElements) out.push_back(apply_gamma(loop, g, pair));
  std::set<LoopPair> distinct(out.begin(), out.end());
  if (distinct.size() != out.size()) {
    throw Order3Error("gamma orbit of (" + std::to_string(pair.first) + "," +
                      std::to_string(pair.second) + ") collapses: loop has an element of order 3");
  }
  return out;
}

OrbitDecomposition orbit_decomposition(const FiniteLoop& loop, OrbitMode mode) {
  SigmaSet sigma(loop);
  require_mode_preconditions(loop, mode);
  const auto carriers = carriers_for(mode);
  const std::size_t l = loop.order();
  const std::size_t expected = carriers.size();

  OrbitDecomposition result{mode, {}};
  std::vector<char> visited(l * l, 0);
  for (const LoopPair& pair : sigma.complement()) {
    if (visited[pair.first * l + pair.second]) continue;
    Orbit orbit;
    for (auto g : carriers) {
      const LoopPair image = apply_gamma(loop, g, pair);
      if (sigma.contains(image)) throw InternalError("orbit leaves the complement of the boundary set");
      if (std::find(orbit.members.begin(), orbit.members.end(), image) != orbit.members.end()) {
        if (mode == OrbitMode::Gamma) throw Order3Error("gamma orbit collapsed");
        throw InternalError("involution has a fixed point off the boundary set");
      }
      orbit.members.push_back(image);
      orbit.carriers.push_back(g);
    }
    for (const auto& m : orbit.members) {
      if (visited[m.first * l + m.second]) throw InternalError("orbits overlap");
      visited[m.first * l + m.second] = 1;
    }
    if (orbit.members.size() != expected) throw InternalError("unexpected orbit size");
    result.orbits.push_back(std::move(orbit));
  }
  return result;
}

// --- p, q -------------------------------------------------------------------

std::vector<AutIndex> fixed_point_candidates(const AutomorphismGroup& aut, AutIndex q) {
  std::vector<AutIndex> out;
  for (AutIndex p = 0; p < aut.size(); ++p) {
    const AutIndex m = aut.compose(aut.inverse(p), q);
    if (aut.compose(m, m) == aut.identity()) out.push_back(p);
  }
  return out;
}

InverseCoincidenceData construct_pq(const FiniteLoop& loop, const AutomorphismGroup& aut,
                                    ChoiceSource& choice, const PqOptions& options) {
  if (!inverses_coincide(loop)) throw PreconditionError("construct_pq: loop lacks two-sided inverses");
  const std::size_t l = loop.order();
  const auto n = static_cast<std::uint32_t>(aut.size());
  InverseCoincidenceData d;
  d.qmap.assign(l, aut.identity());
  d.pmap.assign(l, aut.identity());
  for (LoopElement x = 1; x < l; ++x) d.qmap[x] = choice.uniform(n);
  for (LoopElement x = 1; x < l; ++x) {
    const LoopElement xi = loop.left_inverse(x);
    if (x < xi) {
      d.pmap[x] = choice.uniform(n);
      d.pmap[xi] = aut.compose(d.qmap[xi], aut.inverse(d.pmap[x]), d.qmap[x]);
    } else if (x == xi) {
      if (options.fixed_point == PqOptions::FixedPoint::Default) {
        d.pmap[x] = d.qmap[x];
      } else {
        auto candidates = fixed_point_candidates(aut, d.qmap[x]);
        d.pmap[x] = candidates.at(choice.uniform(static_cast<std::uint32_t>(candidates.size())));
      }
    }
  }
  if (!satisfies_cip(loop, aut, d)) throw InternalError("construct_pq produced maps violating cip");
  return d;
}

// --- assembly ---------------------------------------------------------------

namespace {

constexpr AutIndex kUnset = static_cast<AutIndex>(-1);

struct Tables {
  std::size_t l;
  std::vector<AutIndex> p;
  std::vector<AutIndex> q;

  explicit Tables(std::size_t order) : l(order), p(order * order, kUnset), q(order * order, kUnset) {}

  AutIndex& P(LoopElement a, LoopElement b) { return p[a * l + b]; }
  AutIndex& Q(LoopElement a, LoopElement b) { return q[a * l + b]; }

  void set(LoopPair pair, AutPair v) {
    P(pair.first, pair.second) = v.p;
    Q(pair.first, pair.second) = v.q;
  }
  AutPair get(LoopPair pair) { return {P(pair.first, pair.second), Q(pair.first, pair.second)}; }
};

void check_index(const AutomorphismGroup& aut, AutIndex i, const char* what) {
  if (!aut.contains(i)) throw InputError(std::string(what) + ": automorphism index out of range");
}

void check_pq(const FiniteLoop& loop, const AutomorphismGroup& aut, const InverseCoincidenceData& pq) {
  const std::size_t l = loop.order();
  if (pq.pmap.size() != l || pq.qmap.size() != l) throw InputError("p/q maps have the wrong length");
  for (std::size_t x = 0; x < l; ++x) {
    check_index(aut, pq.pmap[x], "p");
    check_index(aut, pq.qmap[x], "q");
  }
  if (pq.pmap[0] != aut.identity() || pq.qmap[0] != aut.identity()) {
    throw InputError("p(e) and q(e) must be the identity");
  }
  if (!satisfies_cip(loop, aut, pq)) throw InputError("p/q maps violate cip");
}

void check_unit_row(const std::vector<AutIndex>& row, std::size_t l, const AutomorphismGroup& aut,
                    const char* what) {
  if (row.size() != l) throw InputError(std::string(what) + " has the wrong length");
  for (auto v : row) check_index(aut, v, what);
  if (row[0] != aut.identity()) throw InputError(std::string(what) + " at e must be the identity");
}

void check_assignments(const OrbitDecomposition& dec, const std::vector<OrbitAssignment>& orbits,
                       const AutomorphismGroup& aut) {
  if (orbits.size() != dec.orbits.size()) {
    throw InputError("expected " + std::to_string(dec.orbits.size()) + " orbit assignments, got " +
                     std::to_string(orbits.size()));
  }
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    if (orbits[k].member >= dec.orbits[k].members.size()) throw InputError("orbit member out of range");
    check_index(aut, orbits[k].value.p, "orbit value");
    check_index(aut, orbits[k].value.q, "orbit value");
  }
}

LoopCocycle finish(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut, Tables t) {
  for (std::size_t i = 0; i < t.p.size(); ++i) {
    if (t.p[i] == kUnset || t.q[i] == kUnset) throw InternalError("construction left a cell unassigned");
  }
  return LoopCocycle(loop, std::move(aut), std::move(t.p), std::move(t.q));
}

}  // namespace

LoopCocycle assemble_lip_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut_ptr,
                                 const LipSpec& spec) {
  const AutomorphismGroup& aut = *aut_ptr;
  const auto dec = orbit_decomposition(loop, OrbitMode::Phi);
  const std::size_t l = loop.order();
  check_pq(loop, aut, spec.pq);
  check_unit_row(spec.left_unit, l, aut, "P(e, x)");
  check_assignments(dec, spec.orbits, aut);

  Tables t(l);
  const AutIndex id = aut.identity();
  for (LoopElement x = 0; x < l; ++x) {
    const LoopElement xi = loop.left_inverse(x);
    t.P(x, 0) = id;
    t.Q(0, x) = id;
    t.P(0, x) = spec.left_unit[x];
    t.Q(xi, x) = spec.pq.qmap[x];
    t.Q(x, 0) = aut.inverse(spec.pq.qmap[x]);
    t.P(xi, x) = spec.pq.pmap[x];
  }
  for (std::size_t k = 0; k < dec.orbits.size(); ++k) {
    const Orbit& orbit = dec.orbits[k];
    const auto& choice = spec.orbits[k];
    const LoopPair base = orbit.members[choice.member];
    const LoopPair partner = orbit.members[1 - choice.member];
    const LoopElement x = base.first;
    const LoopElement xi = loop.left_inverse(x);
    const AutIndex q_inv = aut.inverse(choice.value.q);
    t.set(base, choice.value);
    t.set(partner, {aut.compose(q_inv, choice.value.p, aut.inverse(t.Q(xi, x)), t.P(xi, x)), q_inv});
  }
  return finish(loop, std::move(aut_ptr), std::move(t));
}

LoopCocycle assemble_rip_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut_ptr,
                                 const RipSpec& spec) {
  const AutomorphismGroup& aut = *aut_ptr;
  const auto dec = orbit_decomposition(loop, OrbitMode::Psi);
  const std::size_t l = loop.order();
  check_pq(loop, aut, spec.pq);
  check_unit_row(spec.right_unit, l, aut, "Q(x, e)");
  check_assignments(dec, spec.orbits, aut);

  Tables t(l);
  const AutIndex id = aut.identity();
  for (LoopElement x = 0; x < l; ++x) {
    const LoopElement xi = loop.left_inverse(x);
    t.P(x, 0) = id;
    t.Q(0, x) = id;
    t.Q(x, 0) = spec.right_unit[x];
    t.P(xi, x) = spec.pq.pmap[x];
    t.Q(xi, x) = spec.pq.qmap[x];
    t.P(0, x) = aut.inverse(spec.pq.pmap[xi]);
  }
  for (std::size_t k = 0; k < dec.orbits.size(); ++k) {
    const Orbit& orbit = dec.orbits[k];
    const auto& choice = spec.orbits[k];
    const LoopPair base = orbit.members[choice.member];
    const LoopPair partner = orbit.members[1 - choice.member];
    const LoopElement y = base.second;
    const LoopElement yi = loop.left_inverse(y);
    const AutIndex p_inv = aut.inverse(choice.value.p);
    t.set(base, choice.value);
    t.set(partner, {p_inv, aut.compose(p_inv, choice.value.q, aut.inverse(t.P(y, yi)), t.Q(y, yi))});
  }
  return finish(loop, std::move(aut_ptr), std::move(t));
}

LoopCocycle assemble_ip_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut_ptr,
                                const IpSpec& spec) {
  const AutomorphismGroup& aut = *aut_ptr;
  const auto dec = orbit_decomposition(loop, OrbitMode::Gamma);
  check_assignments(dec, spec.orbits, aut);
  const std::size_t l = loop.order();
  const std::size_t complement = (l - 1) * (l - 2);
  if (complement % 6 != 0 || dec.orbits.size() != complement / 6) {
    throw InternalError("boundary complement is not a union of 6-element orbits");
  }

  Tables t(l);
  const SigmaSet sigma(loop);
  for (const auto& pair : sigma.pairs()) t.set(pair, {aut.identity(), aut.identity()});
  for (std::size_t k = 0; k < dec.orbits.size(); ++k) {
    const Orbit& orbit = dec.orbits[k];
    const auto& choice = spec.orbits[k];
    const GammaElement back = gamma_inverse(orbit.carriers[choice.member]);
    for (std::size_t i = 0; i < orbit.members.size(); ++i) {
      const GammaElement g = gamma_compose(orbit.carriers[i], back);
      t.set(orbit.members[i], act_on_pair(aut, g, choice.value));
    }
  }
  return finish(loop, std::move(aut_ptr), std::move(t));
}

// --- seeded constructions -------------------------------------------------

namespace {

std::vector<OrbitAssignment> draw_orbit_values(std::size_t count, std::uint32_t n, ChoiceSource& choice) {
  std::vector<OrbitAssignment> out(count);
  for (auto& a : out) {
    a.member = 0;
    a.value.p = choice.uniform(n);
    a.value.q = choice.uniform(n);
  }
  return out;
}

std::vector<AutIndex> draw_unit_row(std::size_t l, const AutomorphismGroup& aut, ChoiceSource& choice) {
  std::vector<AutIndex> row(l, aut.identity());
  for (std::size_t x = 1; x < l; ++x) row[x] = choice.uniform(static_cast<std::uint32_t>(aut.size()));
  return row;
}

}  // namespace

LoopCocycle construct_lip_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut,
                                  ChoiceSource& choice, const ConstructionOptions& options) {
  if (!has_lip(loop)) throw PreconditionError("construct_lip_cocycle: loop lacks the left inverse property");
  const auto dec = orbit_decomposition(loop, OrbitMode::Phi);
  LipSpec spec;
  spec.pq = construct_pq(loop, *aut, choice, options.pq);
  spec.left_unit = draw_unit_row(loop.order(), *aut, choice);
  spec.orbits = draw_orbit_values(dec.orbits.size(), static_cast<std::uint32_t>(aut->size()), choice);
  auto cocycle = assemble_lip_cocycle(loop, std::move(aut), spec);
  if (!check_lip_conditions(cocycle)) throw InternalError("LIP construction violates its conditions");
  if (options.verify && !has_lip(build_extension(cocycle).loop())) {
    throw InternalError("LIP construction: extension fails the left inverse property");
  }
  return cocycle;
}

LoopCocycle construct_rip_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut,
                                  ChoiceSource& choice, const ConstructionOptions& options) {
  if (!has_rip(loop)) throw PreconditionError("construct_rip_cocycle: loop lacks the right inverse property");
  const auto dec = orbit_decomposition(loop, OrbitMode::Psi);
  RipSpec spec;
  spec.pq = construct_pq(loop, *aut, choice, options.pq);
  spec.right_unit = draw_unit_row(loop.order(), *aut, choice);
  spec.orbits = draw_orbit_values(dec.orbits.size(), static_cast<std::uint32_t>(aut->size()), choice);
  auto cocycle = assemble_rip_cocycle(loop, std::move(aut), spec);
  if (!check_rip_conditions(cocycle)) throw InternalError("RIP construction violates its conditions");
  if (options.verify && !has_rip(build_extension(cocycle).loop())) {
    throw InternalError("RIP construction: extension fails the right inverse property");
  }
  return cocycle;
}

LoopCocycle construct_ip_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut,
                                 ChoiceSource& choice, const ConstructionOptions& options) {
  if (!has_ip(loop)) throw PreconditionError("construct_ip_cocycle: loop lacks the inverse property");
  if (has_order3_element(loop)) {
    throw Order3Error("construct_ip_cocycle: loop has an element x != e with x*x = x^-1");
  }
  const auto dec = orbit_decomposition(loop, OrbitMode::Gamma);
  IpSpec spec;
  spec.orbits = draw_orbit_values(dec.orbits.size(), static_cast<std::uint32_t>(aut->size()), choice);
  auto cocycle = assemble_ip_cocycle(loop, std::move(aut), spec);
  if (!is_strongly_linear(cocycle) || !check_equivariance(cocycle) || !check_ip_conditions(cocycle)) {
    throw InternalError("IP construction violates its conditions");
  }
  if (options.verify && !has_ip(build_extension(cocycle).loop())) {
    throw InternalError("IP construction: extension fails the inverse property");
  }
  return cocycle;
}

}  // namespace linext
