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

#ifndef LOCI_LOCI_HPP
#define LOCI_LOCI_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "loci/loi.hpp"
#include "loci/poset.hpp"
#include "loci/relation.hpp"

namespace loci {

// Lattice of computable information over a finite poset A: the complete
// preorders on A ordered by reverse inclusion. The carrier's own order is
// the top, All the bottom.

/// A preorder containing the carrier's order. On a finite poset this is
/// exactly the directed-completeness condition; see
/// satisfies_directed_completeness() for the definitional check.
bool is_complete_preorder(const Rel& q);

/// Checks the two completeness clauses literally, over every directed subset
/// of the carrier. Exponential; throws CapExceeded above `max_carrier`.
bool satisfies_directed_completeness(const Rel& q, std::size_t max_carrier = 16);

void require_complete(const Rel& q, const char* what);

/// P ⊑ Q iff Q ⊆ P, on complete preorders.
bool loci_leq(const Rel& p, const Rel& q);
/// Intersection; complete whenever both arguments are.
Rel loci_join(const Rel& p, const Rel& q);
/// Reflexive-transitive closure of the union: the greatest complete
/// preorder below both arguments.
Rel loci_meet(const Rel& p, const Rel& q);

/// x pker(f) y iff f(x) ⊑ f(y).
Rel ordered_kernel(const Mapping& f);
/// {a' | f(a) ⊑ f(a')}
ElementSet ordered_knowledge_set(const Mapping& f, Index a);

/// f ⪯ g in the kernel preorder: ker(f) ⊑ ker(g).
bool info_leq(const Mapping& f, const Mapping& g);
/// The ordered counterpart: pker(f) ⊑ pker(g).
bool ordered_info_leq(const Mapping& f, const Mapping& g);

/// f*(Q) for a complete Q on cod(f); the result is complete.
Rel loci_pullback(const FnTable& f, const Rel& q);
/// The greatest complete Q on cod(f) with f: P ⇒ Q, computed as the
/// reflexive-transitive closure of f(P) ∪ ⊑.
Rel loci_pushforward(const FnTable& f, const Rel& p);

/// Greatest complete preorder containing the equivalence relation `r`.
Rel cp(const Rel& r);
/// Underlying equivalence relation P ∩ P⁻¹ of a preorder.
Rel er(const Rel& p);
/// er(cp(r)) == r.
bool is_realisable(const Rel& r);

/// Monotone quotient map a ↦ [a]_Q onto the block poset of a complete
/// preorder. Its ordered kernel is Q.
FnTable quotient_map(const Rel& q);

struct Realisable {
  /// Blocks of R ordered by the transitive closure of φ.
  PosetPtr quotient;
  /// a ↦ [a]_R; monotone, with kernel R.
  FnTable map;
};

struct Unrealisable {
  /// Distinct blocks B1 φ B2 φ ... φ Bn φ B1, n > 1.
  std::vector<ElementSet> cycle;
};

using PhiResult = std::variant<Realisable, Unrealisable>;

/// Decides realisability of an equivalence relation through the block graph
/// φ, where [a] φ [b] iff some x in [a] is below some y in [b].
PhiResult phi_realisability(const Rel& r);

inline constexpr std::size_t kDefaultEnumerationCap = 6;

/// All complete preorders on `a`, sorted by canonical_less. Throws
/// CapExceeded when the carrier has more than `cap` elements.
std::vector<Rel> enumerate_loci(const PosetPtr& a, std::size_t cap = kDefaultEnumerationCap);
/// All equivalence relations on the carrier of `a`, sorted by
/// canonical_less.
std::vector<Rel> enumerate_loi(const PosetPtr& a, std::size_t cap = kDefaultEnumerationCap);

/// Visits every monotone table dom → cod in lexicographic order of the table
/// vector. Entries of `fixed` that hold a value pin that input's image.
/// The visitor returns false to stop. Returns the number of tables visited.
std::size_t for_each_monotone_table(const PosetPtr& dom, const PosetPtr& cod,
                                    std::span<const std::optional<Index>> fixed,
                                    const std::function<bool(const std::vector<Index>&)>& visit);

inline constexpr std::uint64_t kDefaultPostprocessorBound = 10'000'000;

/// First monotone p: cod(g) → cod(f) (lexicographic table order) with
/// f = p ∘ g, if any. Throws CapExceeded when |cod f|^|cod g| exceeds
/// `bound`.
std::optional<FnTable> find_monotone_postprocessor(
    const Mapping& f, const Mapping& g, std::uint64_t bound = kDefaultPostprocessorBound);

}  // namespace loci

#endif  // LOCI_LOCI_HPP
