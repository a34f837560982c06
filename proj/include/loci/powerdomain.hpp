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

#ifndef LOCI_POWERDOMAIN_HPP
#define LOCI_POWERDOMAIN_HPP

#include <optional>
#include <vector>

#include "loci/poset.hpp"
#include "loci/relation.hpp"

namespace loci {

/// {b | a ⊑ b ⊑ c for some a, c in xs}
ElementSet convex_closure(const Poset& a, ElementSet xs);

/// X EM(R) Y iff every x in X is R-below some y in Y and every y in Y is
/// R-above some x in X.
bool em_related(const Rel& r, ElementSet xs, ElementSet ys);

/// The Egli-Milner extension of a relation, as a predicate on subsets of
/// the relation's carrier.
class EgliMilner {
 public:
  explicit EgliMilner(Rel r) : r_(std::move(r)) {}
  bool operator()(ElementSet xs, ElementSet ys) const { return em_related(r_, xs, ys); }
  const Rel& base() const { return r_; }

 private:
  Rel r_;
};

inline EgliMilner em_extension(Rel r) { return EgliMilner(std::move(r)); }

/// A non-empty convex subset of a poset.
class PdElement {
 public:
  /// Throws InvalidArgument if `members` is empty or not convex.
  PdElement(PosetPtr base, ElementSet members);

  const PosetPtr& base() const { return base_; }
  ElementSet members() const { return members_; }

  friend bool operator==(const PdElement& a, const PdElement& b) {
    return same_carrier(a.base_, b.base_) && a.members_ == b.members_;
  }

 private:
  PosetPtr base_;
  ElementSet members_;
};

/// Cv(X ∪ Y).
PdElement pd_union(const PdElement& x, const PdElement& y);

inline constexpr std::size_t kDefaultPowerdomainCap = 5;

/// The finite Plotkin powerdomain of a poset: its non-empty convex subsets
/// ordered by EM(⊑). Elements are listed by size, then by member indices,
/// and named "[x,y,...]".
class Powerdomain {
 public:
  /// Throws CapExceeded when `base` has more than `cap` elements or the
  /// powerdomain would not fit in a carrier.
  explicit Powerdomain(PosetPtr base, std::size_t cap = kDefaultPowerdomainCap);

  const PosetPtr& base() const { return base_; }
  const PosetPtr& poset() const { return poset_; }
  std::size_t size() const { return sets_.size(); }

  ElementSet members(Index i) const { return sets_[i]; }
  PdElement element(Index i) const { return PdElement(base_, sets_[i]); }
  std::optional<Index> find(ElementSet convex) const;
  /// Index of a convex set; throws InvalidArgument for non-convex or empty sets.
  Index index_of(ElementSet convex) const;
  Index index_of(const PdElement& x) const;

  /// x ↦ {x}, as a monotone map base → powerdomain.
  FnTable unit() const;

 private:
  PosetPtr base_;
  std::vector<ElementSet> sets_;
  PosetPtr poset_;
};

/// f†(X) = Cv(⋃_{x∈X} f(x)) for f: A → P(B). `from` is P(A), `to` is P(B).
FnTable kleisli_extend(const FnTable& f, const Powerdomain& from, const Powerdomain& to);

/// f;g = g† ∘ f for f: A → P(B) and g: B → P(C). `mid` is P(B), `to` is P(C).
FnTable kleisli_compose(const FnTable& f, const FnTable& g, const Powerdomain& mid,
                        const Powerdomain& to);

/// EM(R) restricted to the powerdomain's elements, for any relation R on
/// the base carrier.
Rel pd_restrict(const Powerdomain& pd, const Rel& r);

/// P(P) for a complete preorder P on the base; the result is complete.
Rel pd_lift_relation(const Powerdomain& pd, const Rel& p);

}  // namespace loci

#endif  // LOCI_POWERDOMAIN_HPP
