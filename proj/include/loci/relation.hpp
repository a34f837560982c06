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

#ifndef LOCI_RELATION_HPP
#define LOCI_RELATION_HPP

#include <span>
#include <utility>
#include <vector>

#include "loci/element_set.hpp"
#include "loci/poset.hpp"

namespace loci {

/// A binary relation on the carrier of a poset, stored as one bit row per
/// element: `row(a)` is the set of b with a R b.
///
/// Rel is a plain value. Whether it is reflexive, an equivalence, a
/// preorder, etc. is computed on demand.
class Rel {
 public:
  explicit Rel(PosetPtr carrier);
  Rel(PosetPtr carrier, std::vector<ElementSet> rows);
  static Rel from_pairs(PosetPtr carrier, std::span<const std::pair<Index, Index>> pairs);

  static Rel empty(const PosetPtr& carrier) { return Rel(carrier); }
  static Rel identity(const PosetPtr& carrier);
  static Rel all(const PosetPtr& carrier);
  /// The carrier's own partial order.
  static Rel order(const PosetPtr& carrier);
  /// The equivalence relation whose classes are `blocks`. Throws
  /// InvalidArgument unless the blocks partition the carrier.
  static Rel from_blocks(const PosetPtr& carrier, std::span<const ElementSet> blocks);

  const PosetPtr& carrier() const { return carrier_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<ElementSet>& rows() const { return rows_; }

  bool contains(Index a, Index b) const { return rows_[a].contains(b); }
  bool operator()(Index a, Index b) const { return contains(a, b); }
  void insert(Index a, Index b) { rows_[a].insert(b); }
  void erase(Index a, Index b) { rows_[a].erase(b); }

  /// {b | a R b}
  ElementSet row(Index a) const { return rows_[a]; }
  /// {a | a R b}
  ElementSet column(Index b) const;

  std::size_t pair_count() const;
  std::vector<std::pair<Index, Index>> pairs() const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;
  bool is_preorder() const { return is_reflexive() && is_transitive(); }
  bool is_equivalence() const { return is_preorder() && is_symmetric(); }

  /// Set inclusion. Throws CarrierMismatch across carriers.
  bool subset_of(const Rel& other) const;

  /// Equal carriers and equal pairs.
  friend bool operator==(const Rel& a, const Rel& b);

 private:
  PosetPtr carrier_;
  std::vector<ElementSet> rows_;
};

/// Strict "canonical" order on relations over one carrier: lexicographic on
/// the row-major bit string, pair (0,0) first, absent < present.
bool canonical_less(const Rel& a, const Rel& b);

/// Throws CarrierMismatch unless both relations live on the same carrier.
void require_same_carrier(const Rel& a, const Rel& b);

enum class Closure { kReflexiveTransitive, kEquivalence };

/// The least relation of the requested kind containing `r`.
Rel close(const Rel& r, Closure kind);

Rel intersect(const Rel& r, const Rel& s);
Rel unite(const Rel& r, const Rel& s);
Rel invert(const Rel& r);
/// Relational composition: a (r;s) c iff a r b and b s c for some b.
Rel compose(const Rel& r, const Rel& s);

/// A partition of a carrier with a partial order on its blocks; the
/// one-to-one counterpart of a preorder.
class OrderedPartition {
 public:
  /// Throws InvalidArgument when `blocks` does not partition the carrier or
  /// `block_up` is not a partial order on block indices.
  OrderedPartition(PosetPtr carrier, std::vector<ElementSet> blocks,
                   std::vector<ElementSet> block_up);

  const PosetPtr& carrier() const { return carrier_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  ElementSet block(Index i) const { return blocks_[i]; }
  /// Index of the block containing element `a`.
  Index block_of(Index a) const { return block_index_[a]; }
  bool block_leq(Index i, Index j) const { return block_up_[i].contains(j); }
  const std::vector<ElementSet>& block_up_sets() const { return block_up_; }

  friend bool operator==(const OrderedPartition& a, const OrderedPartition& b);

 private:
  PosetPtr carrier_;
  std::vector<ElementSet> blocks_;
  std::vector<ElementSet> block_up_;
  std::vector<Index> block_index_;
};

/// Blocks are the classes of Q ∩ Q⁻¹, listed by least member; [a] <= [b]
/// iff a Q b. Throws InvalidArgument if `q` is not a preorder.
OrderedPartition to_ordered_partition(const Rel& q);

/// a Q a' iff block(a) <= block(a').
Rel from_ordered_partition(const OrderedPartition& op);

/// The block poset (⟦Q⟧, ≤_Q); a block named "[x,y,...]" lists its members.
PosetPtr block_poset(const OrderedPartition& op);

}  // namespace loci

#endif  // LOCI_RELATION_HPP
