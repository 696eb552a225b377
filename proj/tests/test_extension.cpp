#include <gtest/gtest.h>

#include "linext/choice.hpp"
#include "linext/constructions.hpp"
#include "linext/error.hpp"
#include "linext/extension.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace linext;

namespace {

using Rows = std::vector<std::vector<AutIndex>>;

Rows id_rows(std::size_t l, AutIndex id) { return Rows(l, std::vector<AutIndex>(l, id)); }

AutIndex negation(const AutomorphismGroup& aut) {
  const auto& g = aut.group();
  std::vector<GroupElement> t(g.size());
  for (GroupElement a = 0; a < g.size(); ++a) t[a] = g.neg(a);
  return aut.index_of(Automorphism(g, t));
}

// random normalized cocycle, optionally strongly linear
LoopCocycle random_cocycle(const FiniteLoop& loop, std::shared_ptr<const AutomorphismGroup> aut,
                           ChoiceSource& rng, bool strong) {
  const auto l = loop.order();
  const auto n = static_cast<std::uint32_t>(aut->size());
  const auto id = aut->identity();
  std::vector<AutIndex> p(l * l), q(l * l);
  for (std::size_t x = 0; x < l; ++x)
    for (std::size_t y = 0; y < l; ++y) {
      p[x * l + y] = (y == 0 || (strong && x == 0)) ? id : rng.uniform(n);
      q[x * l + y] = (x == 0 || (strong && y == 0)) ? id : rng.uniform(n);
    }
  return LoopCocycle(loop, std::move(aut), p, q);
}

TEST(Cocycle, Normalization) {
  const auto loop = cyclic_loop(2);
  const auto aut = fixture::aut({3});
  const auto id = aut->identity(), neg = negation(*aut);
  EXPECT_NO_THROW(make_cocycle(loop, aut, id_rows(2, id), id_rows(2, id)));
  auto bad = id_rows(2, id);
  bad[1][0] = neg;
  EXPECT_THROW(make_cocycle(loop, aut, bad, id_rows(2, id)), CocycleNormalizationError);
  bad = id_rows(2, id);
  bad[0][1] = neg;
  EXPECT_THROW(make_cocycle(loop, aut, id_rows(2, id), bad), CocycleNormalizationError);
  bad = id_rows(2, id);
  bad[1][1] = 7;
  EXPECT_THROW(make_cocycle(loop, aut, bad, id_rows(2, id)), InputError);
  EXPECT_THROW(make_cocycle(loop, aut, id_rows(3, id), id_rows(2, id)), InputError);
}

TEST(Extension, DirectProduct) {
  const auto ext = build_extension(identity_cocycle(cyclic_loop(2), fixture::aut({2})));
  // Z2 x Z2 with (x,a) at 2x+a is the Klein table
  EXPECT_EQ(ext.loop(), fixture::corpus("klein"));
  const auto z3 = build_extension(identity_cocycle(cyclic_loop(3), fixture::aut({2, 2})));
  EXPECT_TRUE(is_associative(z3.loop()));
  EXPECT_TRUE(is_commutative(z3.loop()));
}

TEST(Extension, MatchesDefinition) {
  ChoiceSource rng(11);
  for (const auto& name : {"z2", "z4", "klein", "lip6", "noinv5"})
    for (const auto& orders : fixture::small_groups()) {
      const auto c = random_cocycle(fixture::corpus(name), fixture::aut(orders), rng, false);
      const auto ext = build_extension(c);
      EXPECT_EQ(ext.loop().table(), oracle::extension(c).t);
      for (LoopElement i = 0; i < ext.loop().order(); ++i) EXPECT_EQ(ext.encode(ext.decode(i)), i);
    }
}

TEST(Extension, NegatedSquare) {
  const auto aut = fixture::aut({3});
  const auto id = aut->identity(), neg = negation(*aut);
  auto q = id_rows(2, id);
  q[1][1] = neg;
  const auto c = make_cocycle(cyclic_loop(2), aut, id_rows(2, id), q);
  const auto ext = build_extension(c);
  EXPECT_EQ(ext.loop().order(), 6u);
  EXPECT_TRUE(oracle::is_latin_loop(oracle::of(ext.loop())));
  EXPECT_FALSE(is_commutative_extension(c));
  EXPECT_FALSE(oracle::commutative(oracle::of(ext.loop())));
  EXPECT_TRUE(is_strongly_linear(c));
  EXPECT_FALSE(check_lip_conditions(c));
  EXPECT_FALSE(oracle::lip(oracle::of(ext.loop())));
  EXPECT_TRUE(check_cip(c));
  EXPECT_TRUE(oracle::inverses_coincide(oracle::of(ext.loop())));
}

TEST(Extension, CommutativityOfIdentityCocycle) {
  EXPECT_TRUE(is_commutative_extension(identity_cocycle(cyclic_loop(4), fixture::aut({3}))));
  EXPECT_FALSE(is_commutative_extension(identity_cocycle(fixture::corpus("ip7"), fixture::aut({3}))));
}

TEST(Extension, CipCounterexample) {
  const auto aut = fixture::aut({3});
  const auto id = aut->identity(), neg = negation(*aut);
  auto p = id_rows(4, id);
  p[1][3] = neg;  // p(3) = P(1, 3)
  const auto c = make_cocycle(cyclic_loop(4), aut, p, id_rows(4, id));
  EXPECT_FALSE(check_cip(c));
  EXPECT_TRUE(find_cip_violation(c).has_value());
  EXPECT_FALSE(oracle::inverses_coincide(oracle::of(build_extension(c).loop())));
  EXPECT_TRUE(check_cip(identity_cocycle(cyclic_loop(4), aut)));
  EXPECT_THROW(check_cip(identity_cocycle(fixture::corpus("noinv5"), aut)), PreconditionError);
}

TEST(Extension, InverseFormulas) {
  ChoiceSource rng(5);
  for (const auto& name : {"z4", "klein", "lip6", "noinv5", "inv5"})
    for (const auto& orders : fixture::small_groups())
      for (int round = 0; round < 5; ++round) {
        const auto c = random_cocycle(fixture::corpus(name), fixture::aut(orders), rng, false);
        const auto ext = build_extension(c);
        for (LoopElement i = 0; i < ext.loop().order(); ++i) {
          const auto e = ext.decode(i);
          EXPECT_EQ(ext.encode(extension_left_inverse(c, e)), ext.loop().right_div(0, i));
          EXPECT_EQ(ext.encode(extension_right_inverse(c, e)), ext.loop().left_div(i, 0));
        }
      }
  const auto c = identity_cocycle(cyclic_loop(4), fixture::aut({3}));
  EXPECT_EQ(extension_left_inverse(c, {1, 1}), (ExtensionElement{3, 2}));
  EXPECT_EQ(extension_left_inverse(c, {0, 0}), (ExtensionElement{0, 0}));
}

TEST(Extension, CheckersAgreeWithBruteForce) {
  ChoiceSource rng(2024);
  for (const auto& name : {"z2", "z3", "z4", "klein", "z5", "inv5", "noinv5", "lip6"}) {
    const auto loop = fixture::corpus(name);
    const auto t = oracle::of(loop);
    for (const auto& orders : fixture::small_groups()) {
      const auto aut = fixture::aut(orders);
      for (int round = 0; round < 40; ++round) {
        const bool strong = round % 2 == 0;
        const auto c = random_cocycle(loop, aut, rng, strong);
        const auto f = oracle::extension(c);
        EXPECT_EQ(is_commutative_extension(c), oracle::commutative(f));
        EXPECT_EQ(is_strongly_linear(c), oracle::strongly_linear(c));
        if (oracle::inverses_coincide(t)) EXPECT_EQ(check_cip(c), oracle::inverses_coincide(f));
        if (oracle::lip(t)) EXPECT_EQ(check_lip_conditions(c), oracle::lip(f));
        else EXPECT_THROW(check_lip_conditions(c), PreconditionError);
        if (oracle::rip(t)) EXPECT_EQ(check_rip_conditions(c), oracle::rip(f));
        else EXPECT_THROW(check_rip_conditions(c), PreconditionError);
        if (oracle::ip(t) && strong) EXPECT_EQ(check_ip_conditions(c), oracle::ip(f));
      }
    }
  }
}

TEST(Extension, ConditionViolationsPointAtFailures) {
  const auto aut = fixture::aut({3});
  const auto id = aut->identity(), neg = negation(*aut);
  auto q = id_rows(2, id);
  q[1][1] = neg;
  const auto c = make_cocycle(cyclic_loop(2), aut, id_rows(2, id), q);
  const auto v = find_lip_condition_violation(c);
  ASSERT_TRUE(v.has_value());
  // Q(1^-1, 1*0) = Q(1, 1) must equal Q(1, 0)^-1 = Id
  EXPECT_EQ(v->x, 1u);
  EXPECT_EQ(v->y, 0u);
}

TEST(Extension, StrongLinearity) {
  const auto aut = fixture::aut({3});
  const auto id = aut->identity(), neg = negation(*aut);
  EXPECT_TRUE(is_strongly_linear(identity_cocycle(cyclic_loop(2), aut)));
  auto q = id_rows(2, id);
  q[1][0] = neg;
  const auto c = make_cocycle(cyclic_loop(2), aut, id_rows(2, id), q);
  EXPECT_FALSE(is_strongly_linear(c));
  EXPECT_THROW(check_ip_conditions(c), PreconditionError);
  EXPECT_THROW(check_equivariance(c), PreconditionError);
}

TEST(Extension, EquivarianceRequiresNoOrder3) {
  EXPECT_THROW(check_equivariance(identity_cocycle(cyclic_loop(3), fixture::aut({2}))), Order3Error);
  EXPECT_TRUE(check_equivariance(identity_cocycle(fixture::corpus("klein"), fixture::aut({2, 2}))));
  EXPECT_TRUE(check_ip_conditions(identity_cocycle(fixture::corpus("klein"), fixture::aut({2, 2}))));
}

TEST(Extension, InconsistentOrbitBreaksIp) {
  const auto klein = fixture::corpus("klein");
  const auto aut = fixture::aut({2, 2});
  const auto id = aut->identity();
  auto p = id_rows(4, id);
  p[1][2] = id == 0 ? 1 : 0;  // one orbit member off, the rest Id
  const auto c = make_cocycle(klein, aut, p, id_rows(4, id));
  EXPECT_TRUE(is_strongly_linear(c));
  EXPECT_FALSE(check_ip_conditions(c));
  EXPECT_FALSE(check_equivariance(c));
  EXPECT_FALSE(oracle::ip(oracle::extension(c)));
}

TEST(Extension, EquivarianceMatchesIpConditions) {
  ChoiceSource rng(99);
  for (const auto& name : {"z2", "z4", "klein", "z5"})
    for (const auto& orders : fixture::small_groups())
      for (int round = 0; round < 30; ++round) {
        const auto c = random_cocycle(fixture::corpus(name), fixture::aut(orders), rng, true);
        EXPECT_EQ(check_equivariance(c), check_ip_conditions(c));
      }
}

TEST(Extension, OppositeDuality) {
  ChoiceSource rng(3);
  for (const auto& orders : fixture::small_groups()) {
    const auto aut = fixture::aut(orders);
    const auto id = identity_cocycle(cyclic_loop(4), aut);
    EXPECT_EQ(opposite_cocycle(id), id);
    const auto c = random_cocycle(fixture::corpus("lip6"), aut, rng, false);
    const auto op = opposite_cocycle(c);
    EXPECT_EQ(opposite_cocycle(op), c);
    const auto f = build_extension(c).loop();
    EXPECT_EQ(build_extension(op).loop(), opposite_loop(f));
    const auto lip = construct_lip_cocycle(fixture::corpus("lip6"), aut, rng);
    EXPECT_TRUE(check_rip_conditions(opposite_cocycle(lip)));
  }
  // the mirrored counterexample fails the RIP conditions
  const auto aut = fixture::aut({3});
  const auto id = aut->identity(), neg = negation(*aut);
  auto q = id_rows(2, id);
  q[1][1] = neg;
  const auto bad = make_cocycle(cyclic_loop(2), aut, id_rows(2, id), q);
  EXPECT_FALSE(check_rip_conditions(opposite_cocycle(bad)));
}

TEST(Extension, KernelIsNormal) {
  ChoiceSource rng(8);
  for (const auto& name : {"z4", "klein", "lip6", "noinv5"})
    for (const auto& orders : fixture::small_groups()) {
      const auto loop = fixture::corpus(name);
      const auto ext = build_extension(random_cocycle(loop, fixture::aut(orders), rng, false));
      EXPECT_TRUE(is_normal_subloop(ext.loop(), ext.kernel()));
      EXPECT_EQ(quotient_loop(ext.loop(), ext.kernel()), loop);
    }
}

}  // namespace
