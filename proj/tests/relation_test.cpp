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

#include "loci/relation.hpp"

#include <gtest/gtest.h>

#include "loci/catalog.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

namespace loci {
namespace {

using testing::Rng;

Rel pairs(const PosetPtr& a, std::initializer_list<std::pair<const char*, const char*>> ps) {
  Rel r(a);
  for (auto [x, y] : ps) r.insert(a->at(x), a->at(y));
  return r;
}

TEST(Close, ReflexiveTransitiveOfChainPairs) {
  const PosetPtr a = Poset::discrete({"a", "b", "c"});
  const Rel r = pairs(a, {{"a", "b"}, {"b", "c"}});
  const Rel c = close(r, Closure::kReflexiveTransitive);
  EXPECT_EQ(oracle::pairs_of(c), oracle::refl_trans(oracle::pairs_of(r), 3));
  EXPECT_EQ(c.pair_count(), 6u);
  EXPECT_TRUE(c.contains(a->at("a"), a->at("c")));
  EXPECT_FALSE(c.contains(a->at("c"), a->at("a")));
}

TEST(Close, Equivalence) {
  const PosetPtr a = Poset::discrete({"a", "b", "c"});
  const Rel c = close(pairs(a, {{"a", "b"}}), Closure::kEquivalence);
  EXPECT_EQ(c, pairs(a, {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "a"}}));
}

TEST(Close, IsAClosureOperator) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const PosetPtr a = testing::random_poset(rng, testing::uniform(rng, 1, 6));
    const Rel r = testing::random_relation(rng, a);
    const Rel s = unite(r, testing::random_relation(rng, a, 0.1));
    for (Closure kind : {Closure::kReflexiveTransitive, Closure::kEquivalence}) {
      const Rel cr = close(r, kind);
      EXPECT_TRUE(r.subset_of(cr));
      EXPECT_EQ(close(cr, kind), cr);
      EXPECT_TRUE(cr.subset_of(close(s, kind)));
    }
    const auto n = a->size();
    EXPECT_EQ(oracle::pairs_of(close(r, Closure::kEquivalence)),
              oracle::equivalence(oracle::pairs_of(r), n));
  }
}

TEST(Algebra, Identities) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const PosetPtr a = testing::random_poset(rng, testing::uniform(rng, 1, 6));
    const Rel r = testing::random_relation(rng, a);
    const Rel s = testing::random_relation(rng, a);
    EXPECT_EQ(intersect(Rel::all(a), r), r);
    EXPECT_EQ(invert(invert(r)), r);
    EXPECT_EQ(intersect(Rel::order(a), invert(Rel::order(a))), Rel::identity(a));
    EXPECT_EQ(compose(Rel::identity(a), r), r);
    oracle::Pairs rs;
    for (auto [x, y] : oracle::pairs_of(r)) {
      for (auto [u, v] : oracle::pairs_of(s)) {
        if (y == u) rs.emplace(x, v);
      }
    }
    EXPECT_EQ(oracle::pairs_of(compose(r, s)), rs);
  }
}

TEST(Algebra, CarrierMismatch) {
  const PosetPtr a = Poset::discrete({"x", "y"});
  const PosetPtr b = Poset::chain({"x", "y"});
  EXPECT_THROW(intersect(Rel::all(a), Rel::all(b)), CarrierMismatch);
  EXPECT_THROW(unite(Rel::all(a), Rel::all(b)), CarrierMismatch);
}

TEST(OrderedPartition, AllIsOneBlock) {
  const PosetPtr a = Poset::discrete({"a", "b"});
  const OrderedPartition op = to_ordered_partition(Rel::all(a));
  EXPECT_EQ(op.block_count(), 1u);
  EXPECT_EQ(op.block(0), a->all());
}

TEST(OrderedPartition, OrderOfVIsSingletons) {
  const PosetPtr v = get_example("V").poset("V");
  const OrderedPartition op = to_ordered_partition(Rel::order(v));
  ASSERT_EQ(op.block_count(), 4u);
  for (Index x = 0; x < 4; ++x) {
    for (Index y = 0; y < 4; ++y) {
      EXPECT_EQ(op.block_leq(op.block_of(x), op.block_of(y)), v->leq(x, y));
    }
  }
}

TEST(OrderedPartition, MergesMutualPairs) {
  const PosetPtr a = Poset::discrete({"x", "y", "z"});
  const Rel q = close(pairs(a, {{"x", "z"}, {"y", "z"}, {"x", "y"}, {"y", "x"}}),
                      Closure::kReflexiveTransitive);
  const OrderedPartition op = to_ordered_partition(q);
  ASSERT_EQ(op.block_count(), 2u);
  const Index xy = op.block_of(a->at("x"));
  const Index z = op.block_of(a->at("z"));
  EXPECT_EQ(op.block_of(a->at("y")), xy);
  EXPECT_EQ(op.block(xy).size(), 2u);
  EXPECT_TRUE(op.block_leq(xy, z));
  EXPECT_FALSE(op.block_leq(z, xy));
}

TEST(OrderedPartition, RejectsNonPreorder) {
  const PosetPtr a = Poset::discrete({"x", "y"});
  EXPECT_THROW(to_ordered_partition(pairs(a, {{"x", "y"}})), InvalidArgument);
}

TEST(OrderedPartition, RoundTripsEveryPreorderOnSmallCarriers) {
  Rng rng(13);
  for (std::size_t n = 1; n <= 4; ++n) {
    const PosetPtr a = testing::random_poset(rng, n);
    const auto cs = oracle::all_pairs(n);
    const std::vector<std::pair<Index, Index>> all(cs.begin(), cs.end());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << all.size()); ++m) {
      oracle::Pairs ps;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((m >> i) & 1U) ps.insert(all[i]);
      }
      if (oracle::refl_trans(ps, n) != ps) continue;
      const Rel q = oracle::to_rel(a, ps);
      const OrderedPartition op = to_ordered_partition(q);
      EXPECT_EQ(from_ordered_partition(op), q);
      EXPECT_EQ(to_ordered_partition(from_ordered_partition(op)), op);
      EXPECT_TRUE(intersect(q, invert(q)).is_equivalence());
    }
  }
}

TEST(OrderedPartition, FromSingletonsAndOneBlock) {
  const PosetPtr v = get_example("V").poset("V");
  std::vector<ElementSet> singles;
  std::vector<ElementSet> ups;
  for (Index x = 0; x < v->size(); ++x) {
    singles.push_back(ElementSet::singleton(x));
    ups.push_back(v->up_set(x));
  }
  EXPECT_EQ(from_ordered_partition(OrderedPartition(v, singles, ups)), Rel::order(v));
  const std::vector<ElementSet> one = {v->all()};
  const std::vector<ElementSet> one_up = {ElementSet::singleton(0)};
  EXPECT_EQ(from_ordered_partition(OrderedPartition(v, one, one_up)), Rel::all(v));
}

TEST(OrderedPartition, RejectsMalformed) {
  const PosetPtr a = Poset::discrete({"x", "y"});
  const std::vector<ElementSet> overlap = {a->all(), ElementSet::singleton(0)};
  const std::vector<ElementSet> ups = {ElementSet::singleton(0), ElementSet::singleton(1)};
  EXPECT_THROW(OrderedPartition(a, overlap, ups), InvalidArgument);
  const std::vector<ElementSet> split = {ElementSet::singleton(0), ElementSet::singleton(1)};
  const std::vector<ElementSet> cyclic = {ElementSet(3), ElementSet(3)};
  EXPECT_THROW(OrderedPartition(a, split, cyclic), InvalidArgument);
}

TEST(CanonicalOrder, IsStrictAndTotalOnDistinctRelations) {
  const PosetPtr a = Poset::discrete({"x", "y"});
  const Rel id = Rel::identity(a);
  const Rel all = Rel::all(a);
  EXPECT_NE(canonical_less(id, all), canonical_less(all, id));
  EXPECT_FALSE(canonical_less(id, id));
}

}  // namespace
}  // namespace loci
