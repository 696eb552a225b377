#include "linext/gamma.hpp"


#include "linext/error.hpp"

namespace linext {

namespace {

// Faithful model on three points: phi = (0 1), psi = (1 2).
using Perm = std::array<std::uint8_t, 3>;

Perm compose_perm(const Perm& a, const Perm& b) {
  return {a[b[0]], a[b[1]], a[b[2]]};
}

Perm model(GammaElement g) {
  constexpr Perm id{0, 1, 2};
  constexpr Perm phi{1, 0, 2};
  constexpr Perm psi{0, 2, 1};
  switch (g) {
    case GammaElement::Identity: return id;
    case GammaElement::Phi: return phi;
    case GammaElement::Psi: return psi;
    case GammaElement::Theta: return compose_perm(phi, compose_perm(psi, phi));
    case GammaElement::PhiPsi: return compose_perm(phi, psi);
    case GammaElement::PsiPhi: return compose_perm(psi, phi);
  }
  throw InternalError("unknown gamma element");
}

GammaElement from_model(const Perm& p) {
  for (auto g : kGammaElements) {
    if (model(g) == p) return g;
  }
  throw InternalError("permutation outside the gamma model");
}

}  // namespace

std::string_view gamma_name(GammaElement g) {
  switch (g) {
    case GammaElement::Identity: return "id";
    case GammaElement::Phi: return "phi";
    case GammaElement::Psi: return "psi";
    case GammaElement::Theta: return "phi.psi.phi";
    case GammaElement::PhiPsi: return "phi.psi";
    case GammaElement::PsiPhi: return "psi.phi";
  }
  return "?";
}

GammaElement gamma_compose(GammaElement a, GammaElement b) {
  return from_model(compose_perm(model(a), model(b)));
}

GammaElement gamma_inverse(GammaElement a) {
  for (auto g : kGammaElements) {
    if (gamma_compose(a, g) == GammaElement::Identity) return g;
  }
  throw InternalError("gamma element without inverse");
}

LoopPair apply_gamma(const FiniteLoop& loop, GammaElement g, LoopPair pair) {
  const LoopElement x = pair.first;
  const LoopElement y = pair.second;
  auto inv = [&](LoopElement z) { return loop.left_inverse(z); };
  switch (g) {
    case GammaElement::Identity: return {x, y};
    case GammaElement::Phi: return {inv(x), loop.mul(x, y)};
    case GammaElement::Psi: return {loop.mul(x, y), inv(y)};
    case GammaElement::Theta: return {inv(y), inv(x)};
    case GammaElement::PhiPsi: return {inv(loop.mul(x, y)), x};
    case GammaElement::PsiPhi: return {y, inv(loop.mul(x, y))};
  }
  throw InternalError("unknown gamma element");
}

AutPair act_on_pair(const AutomorphismGroup& aut, GammaElement g, AutPair value) {
  const AutIndex p = value.p;
  const AutIndex q = value.q;
  switch (g) {
    case GammaElement::Identity: return {p, q};
    case GammaElement::Phi: return {aut.compose(aut.inverse(q), p), aut.inverse(q)};
    case GammaElement::Psi: return {aut.inverse(p), aut.compose(aut.inverse(p), q)};
    case GammaElement::Theta: return {q, p};
    case GammaElement::PsiPhi: return {aut.compose(aut.inverse(p), q), aut.inverse(p)};
    case GammaElement::PhiPsi: return {aut.inverse(q), aut.compose(aut.inverse(q), p)};
  }
  throw InternalError("unknown gamma element");
}

}  // namespace linext
