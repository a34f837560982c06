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

#ifndef LOCI_POSET_HPP
#define LOCI_POSET_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loci/element_set.hpp"
#include "loci/error.hpp"

namespace loci {

class Poset;
using PosetPtr = std::shared_ptr<const Poset>;

/// An ordered pair of element names, read as `lower <= upper`.
struct NamedPair {
  std::string lower;
  std::string upper;
};

/// A finite, non-empty partially ordered set.
///
/// Elements are identified by their declaration index; every enumeration in
/// the library walks elements in that order. Instances are immutable and
/// are shared through `PosetPtr`.
class Poset {
 public:
  /// Builds the reflexive-transitive closure of `covers` over `names`.
  /// Throws InvalidArgument on duplicate or unknown names, on an empty
  /// carrier, and when the closure is not antisymmetric.
  static PosetPtr build(std::vector<std::string> names, std::span<const NamedPair> covers);

  /// Validates an explicit order given as up-sets (`up[a]` holds every b with
  /// a <= b). Throws InvalidArgument unless the relation is a partial order.
  static PosetPtr from_up_sets(std::vector<std::string> names, std::vector<ElementSet> up);

  static PosetPtr discrete(std::vector<std::string> names);
  /// `names[0] < names[1] < ...`.
  static PosetPtr chain(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Index i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Index> find(std::string_view name) const;
  /// Like find() but throws InvalidArgument for unknown names.
  Index at(std::string_view name) const;

  bool leq(Index a, Index b) const { return up_[a].contains(b); }
  bool lt(Index a, Index b) const { return a != b && leq(a, b); }
  ElementSet up_set(Index a) const { return up_[a]; }
  ElementSet down_set(Index a) const { return down_[a]; }
  ElementSet all() const { return ElementSet::full(size()); }

  /// Pairs (a, b) with a < b and nothing strictly between, ordered by (a, b).
  std::vector<std::pair<Index, Index>> covering_pairs() const;

  /// Common upper bounds of `xs` (the whole carrier for the empty set).
  ElementSet upper_bounds(ElementSet xs) const;
  /// The least element of `xs`, if any.
  std::optional<Index> least_of(ElementSet xs) const;
  std::optional<Index> greatest_of(ElementSet xs) const;
  std::optional<Index> supremum(ElementSet xs) const;
  std::optional<Index> bottom() const { return least_of(all()); }
  std::optional<Index> top() const { return greatest_of(all()); }

  /// Non-empty and every pair of members has an upper bound inside `xs`.
  bool is_directed(ElementSet xs) const;
  bool is_convex(ElementSet xs) const;
  bool is_discrete() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  Poset(std::vector<std::string> names, std::vector<ElementSet> up);

  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

/// Structural equality with a pointer fast path.
bool same_carrier(const PosetPtr& a, const PosetPtr& b);

/// Adds a fresh bottom element named `bottom_name` below everything in `a`.
PosetPtr lift(const PosetPtr& a, std::string bottom_name = "bot");

/// Componentwise order on pairs; element (x, y) is named "(x,y)" and pairs
/// are enumerated with the first component varying slowest.
PosetPtr product(const PosetPtr& a, const PosetPtr& b);

/// A total function between the carriers of two posets, given by its table.
/// No monotonicity is implied; see FnTable.
class Mapping {
 public:
  /// Throws InvalidArgument if the table is not total over `dom` or mentions
  /// indices outside `cod`.
  Mapping(PosetPtr dom, PosetPtr cod, std::vector<Index> table);

  const PosetPtr& dom() const { return dom_; }
  const PosetPtr& cod() const { return cod_; }
  const std::vector<Index>& table() const { return table_; }
  Index operator()(Index a) const { return table_[a]; }

  ElementSet image(ElementSet xs) const;
  ElementSet range() const { return image(dom_->all()); }
  ElementSet preimage(ElementSet ys) const;

  /// First pair x <= y (in row-major index order) with f(x) not below f(y).
  std::optional<std::pair<Index, Index>> monotonicity_violation() const;
  bool is_monotone() const { return !monotonicity_violation().has_value(); }

  friend bool operator==(const Mapping& a, const Mapping& b) {
    return same_carrier(a.dom_, b.dom_) && same_carrier(a.cod_, b.cod_) && a.table_ == b.table_;
  }

 private:
  PosetPtr dom_;
  PosetPtr cod_;
  std::vector<Index> table_;
};

/// A monotone total function between finite posets. On finite posets
/// monotonicity coincides with Scott continuity, so every FnTable is a
/// continuous map.
class FnTable : public Mapping {
 public:
  /// Throws NotMonotone with the first violating pair.
  FnTable(PosetPtr dom, PosetPtr cod, std::vector<Index> table);
  explicit FnTable(Mapping m);

  static FnTable identity(const PosetPtr& a);
  static FnTable constant(const PosetPtr& dom, const PosetPtr& cod, Index value);
};

/// Validates a name-keyed table. Throws InvalidArgument for a partial table
/// or unknown names and NotMonotone (message names the witness pair) for a
/// non-monotone one.
FnTable check_monotone(const PosetPtr& dom, const PosetPtr& cod,
                       std::span<const std::pair<std::string, std::string>> table);

/// `g ∘ f`. Monotone when both arguments are.
Mapping compose(const Mapping& g, const Mapping& f);
FnTable compose(const FnTable& g, const FnTable& f);

}  // namespace loci

#endif  // LOCI_POSET_HPP
