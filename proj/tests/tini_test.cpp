// Copyright 2026 The loci Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "loci/tini.hpp"

#include <gtest/gtest.h>

#include "loci/catalog.hpp"
#include "loci/loci.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

namespace loci {
namespace {

using testing::Rng;

// d ~ e iff some element is Q-above both, straight from the definition.
oracle::Pairs compatible_by_definition(const Rel& q) {
  oracle::Pairs out;
  for (Index d = 0; d < q.size(); ++d) {
    for (Index e = 0; e < q.size(); ++e) {
      for (Index u = 0; u < q.size(); ++u) {
        if (q.contains(d, u) && q.contains(e, u)) out.emplace(d, e);
      }
    }
  }
  return out;
}

TEST(CompatibleExtension, DiamondRelatesOppositeCorners) {
  const PosetPtr two = Poset::chain({"bot", "*"});
  const PosetPtr d = product(two, two);
  const Rel c = compatible_extension(Rel::order(d));
  EXPECT_TRUE(c.contains(d->at("(bot,*)"), d->at("(*,bot)")));
  EXPECT_EQ(c, Rel::all(d));
}

TEST(CompatibleExtension, AllAndLiftedBool) {
  const PosetPtr b = lift(Poset::discrete({"T", "F"}));
  EXPECT_EQ(compatible_extension(Rel::all(b)), Rel::all(b));
  const Rel c = compatible_extension(Rel::order(b));
  EXPECT_EQ(oracle::pairs_of(c), compatible_by_definition(Rel::order(b)));
  EXPECT_FALSE(c.contains(b->at("T"), b->at("F")));
  EXPECT_TRUE(c.contains(b->at("T"), b->at("bot")));
  EXPECT_TRUE(c.contains(b->at("bot"), b->at("F")));
  EXPECT_EQ(c.pair_count(), 7u);
}

TEST(CompatibleExtension, Properties) {
  Rng rng(201);
  for (int i = 0; i < 500; ++i) {
    const PosetPtr a = testing::random_poset(rng, testing::uniform(rng, 1, 6));
    const Rel q = testing::random_preorder(rng, a);
    const Rel c = compatible_extension(q);
    EXPECT_EQ(oracle::pairs_of(c), compatible_by_definition(q));
    EXPECT_TRUE(c.is_reflexive());
    EXPECT_TRUE(c.is_symmetric());
    EXPECT_TRUE(q.subset_of(c));
    const Rel bigger = close(unite(q, testing::random_relation(rng, a, 0.1)),
                             Closure::kReflexiveTransitive);
    EXPECT_TRUE(c.subset_of(compatible_extension(bigger)));
  }
  const PosetPtr a = Poset::discrete({"x", "y"});
  EXPECT_THROW(compatible_extension(Rel::empty(a)), InvalidArgument);
}

TEST(CompatibleExtension, NotTransitiveInGeneral) {
  const PosetPtr b = lift(Poset::discrete({"T", "F"}));
  EXPECT_FALSE(compatible_extension(Rel::order(b)).is_transitive());
}

class Kite : public ::testing::Test {
 protected:
  ExampleBundle b = get_example("kite");
  PosetPtr kite = b.poset("Kite");
  PosetPtr bools = b.poset("Bool");
  Rel all = Rel::all(bools);
  Rel order = Rel::order(kite);
  Rel id = Rel::identity(kite);
};

TEST_F(Kite, Shape) {
  EXPECT_EQ(kite->size(), 6u);
  EXPECT_EQ(kite->bottom(), kite->at("bot"));
  EXPECT_TRUE(kite->lt(kite->at("Body(bot,bot)"), kite->at("Body(*,*)")));
  EXPECT_FALSE(kite->leq(kite->at("Tail"), kite->at("Body(*,*)")));
}

TEST_F(Kite, TerminationInsensitiveChecks) {
  EXPECT_TRUE(ti_flow_check(b.fn("f_kite"), all, order).holds());
  const FlowResult g = ti_flow_check(b.fn("g_kite"), all, order);
  ASSERT_FALSE(g.holds());
  EXPECT_EQ(*g.violation(), (Violation{bools->at("True"), bools->at("False")}));
  EXPECT_FALSE(ti_flow_check(b.fn("g_kite_mirror"), all, order).holds());
}

TEST_F(Kite, NoObserverSeparatesBothOrientations) {
  const Mapping bad[] = {b.fn("g_kite"), b.fn("g_kite_mirror")};
  const ObserverSearch s = observer_impossibility_search(b.fn("f_kite"), bad, all, id);
  EXPECT_FALSE(s.separating.has_value());
  EXPECT_EQ(s.examined, 203u);
}

// A fixed g can be separated by an observer tailored to it.
TEST_F(Kite, SingleOrientationIsSeparable) {
  const ObserverSearch s = observer_impossibility_search(b.fn("f_kite"), b.fn("g_kite"), all, id);
  ASSERT_TRUE(s.separating.has_value());
  EXPECT_TRUE(ti_via_observer(b.fn("f_kite"), all, id, *s.separating).holds());
  EXPECT_FALSE(ti_via_observer(b.fn("g_kite"), all, id, *s.separating).holds());
}

TEST(DiamondCounterexample, CompatibleExtensionDoesNotCompose) {
  const ExampleBundle b = get_example("diamond-counterexample");
  const PosetPtr a = b.poset("A");
  const FnTable& g = b.fn("g_dia");
  const FnTable& id = b.fn("id");
  const Rel& q = b.rel("Q_dia");
  const Rel order = Rel::order(a);
  EXPECT_TRUE(is_complete_preorder(q));
  EXPECT_EQ(er(q), Rel::identity(a));
  EXPECT_TRUE(flow_check(g, q, compatible_extension(order)).holds());
  EXPECT_FALSE(ti_flow_check(g, q, order).holds());
  EXPECT_EQ(compatible_extension(q), Rel::all(a));
  // P = All, f = id: both halves hold, the composite does not.
  const Rel all = Rel::all(a);
  EXPECT_TRUE(flow_check(id, all, compatible_extension(q)).holds());
  EXPECT_FALSE(flow_check(compose(g, id), all, compatible_extension(order)).holds());
}

TEST(Parity, TerminationInsensitivity) {
  const ExampleBundle b = get_example("parity");
  const FnTable& f0 = b.fn("f0");
  const FnTable& f1 = b.fn("f1");
  const Rel all = Rel::all(f0.dom());
  const Rel order = Rel::order(f0.cod());
  EXPECT_TRUE(ti_flow_check(f0, all, order).holds());
  const FlowResult r = ti_flow_check(f1, all, order);
  ASSERT_FALSE(r.holds());
  EXPECT_NE(r.violation()->input % 2, r.violation()->other_input % 2);
}

TEST(TerminationObserver, FlatShapes) {
  const PosetPtr b = lift(Poset::discrete({"T", "F"}));
  const ElementSet bool_blocks[] = {ElementSet::singleton(b->at("bot")),
                                    b->all() - ElementSet::singleton(b->at("bot"))};
  EXPECT_EQ(flat_termination_observer(b), Rel::from_blocks(b, bool_blocks));
  const PosetPtr one = lift(Poset::discrete({"*"}));
  EXPECT_EQ(flat_termination_observer(one), Rel::identity(one));
  const PosetPtr z = lift(get_example("parity").poset("Z"));
  const Rel t = flat_termination_observer(z);
  EXPECT_EQ(t.row(z->at("bot")), ElementSet::singleton(z->at("bot")));
  EXPECT_EQ(t.row(z->at("7")).size(), 10u);
  EXPECT_THROW(flat_termination_observer(Poset::chain({"0", "1", "2"})), InvalidArgument);
  EXPECT_THROW(flat_termination_observer(Poset::discrete({"x", "y"})), InvalidArgument);
}

struct ObserverFixture {
  PosetPtr z = Poset::discrete({"0", "1", "2", "3"});
  PosetPtr lz = lift(z);
  Rel t = flat_termination_observer(lz);
  // even -> 1, odd -> bot
  FnTable parity0 = FnTable(z, lz, {lz->at("1"), lz->at("bot"), lz->at("1"), lz->at("bot")});
  // even -> itself, odd -> bot
  FnTable leaky = FnTable(z, lz, {lz->at("0"), lz->at("bot"), lz->at("2"), lz->at("bot")});
};

TEST(ObserverEncoding, ParityHoldsLeakFails) {
  ObserverFixture fx;
  const Rel all = Rel::all(fx.z);
  const Rel id = Rel::identity(fx.lz);
  EXPECT_TRUE(ti_via_observer(fx.parity0, all, id, fx.t).holds());
  EXPECT_FALSE(ti_via_observer(fx.leaky, all, id, fx.t).holds());
  EXPECT_TRUE(ti_via_observer(fx.leaky, all, Rel::all(fx.lz), fx.t).holds());
  EXPECT_THROW(ti_via_observer(fx.leaky, all, Rel::order(fx.lz), fx.t), InvalidArgument);
}

TEST(ObserverSearch, FindsSeparatorAndHandlesIdenticalPair) {
  ObserverFixture fx;
  const Rel all = Rel::all(fx.z);
  const Rel id = Rel::identity(fx.lz);
  const ObserverSearch s = observer_impossibility_search(fx.parity0, fx.leaky, all, id);
  ASSERT_TRUE(s.separating.has_value());
  EXPECT_TRUE(ti_via_observer(fx.parity0, all, id, *s.separating).holds());
  EXPECT_FALSE(ti_via_observer(fx.leaky, all, id, *s.separating).holds());
  const ObserverSearch same = observer_impossibility_search(fx.leaky, fx.leaky, all, id);
  EXPECT_FALSE(same.separating.has_value());
  EXPECT_EQ(same.examined, 52u);  // Bell(5)
}

TEST(ObserverSearch, CodomainCap) {
  const PosetPtr z = lift(get_example("parity").poset("Z"));
  const FnTable f = FnTable::constant(z, z, 0);
  EXPECT_THROW(observer_impossibility_search(f, f, Rel::all(z), Rel::identity(z)), CapExceeded);
}

TEST(Laws, WeakeningSubAndComp) {
  Rng rng(211);
  for (int i = 0; i < 500; ++i) {
    const PosetPtr a = testing::random_poset(rng, testing::uniform(rng, 1, 5));
    const PosetPtr b = testing::random_poset(rng, testing::uniform(rng, 1, 5));
    const PosetPtr c = testing::random_poset(rng, testing::uniform(rng, 1, 5));
    const FnTable f = testing::random_monotone(rng, a, b);
    const FnTable g = testing::random_monotone(rng, b, c);
    const Rel p = testing::random_complete(rng, a);
    const Rel q = testing::coin(rng) ? loci_pushforward(f, p) : testing::random_complete(rng, b);
    const Rel r = testing::random_complete(rng, c);
    if (flow_check(f, p, q).holds()) {
      EXPECT_TRUE(ti_flow_check(f, p, q).holds());
    }
    const Rel p_strong = loci_join(p, testing::random_complete(rng, a));
    const Rel q_weak = loci_meet(q, testing::random_complete(rng, b));
    if (ti_flow_check(f, p, q).holds()) {
      EXPECT_TRUE(ti_flow_check(f, p_strong, q_weak).holds());
    }
    if (ti_flow_check(f, p, q).holds() && ti_flow_check(g, q, r).holds()) {
      EXPECT_TRUE(ti_flow_check(compose(g, f), p, r).holds());
    }
  }
}

}  // namespace
}  // namespace loci
