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

#ifndef LOCI_TINI_HPP
#define LOCI_TINI_HPP

#include <optional>
#include <span>

#include "loci/loi.hpp"
#include "loci/poset.hpp"
#include "loci/relation.hpp"

namespace loci {

/// d ~Q d' iff d Q e and d' Q e for some e. Reflexive and symmetric, but in
/// general not transitive. Throws InvalidArgument unless `q` is a preorder.
Rel compatible_extension(const Rel& q);

/// Termination-insensitive flow: f: P ⇒ti Q iff f: ~P ⇒ ~Q. P and Q must be
/// complete preorders on dom(f) and cod(f).
FlowResult ti_flow_check(const Mapping& f, const Rel& p, const Rel& q);

/// The observer that only sees whether a flat lifted value is defined:
/// blocks {⊥} and everything else. Throws InvalidArgument unless `b` is a
/// bottom below an antichain.
Rel flat_termination_observer(const PosetPtr& b);

/// f: P ⊔ f*(T) ⇒ Q, with P, Q, T equivalence relations.
FlowResult ti_via_observer(const Mapping& f, const Rel& p, const Rel& q, const Rel& t);

inline constexpr std::size_t kObserverSearchCap = 8;

struct ObserverSearch {
  /// First separating observer in canonical order, if one exists.
  std::optional<Rel> separating;
  /// How many candidate observers were examined.
  std::size_t examined = 0;
};

/// Looks for an equivalence relation T on the shared codomain that accepts
/// `good` (ti_via_observer holds) while rejecting every function in `bad`.
/// Exhaustive over all equivalence relations; throws CapExceeded when the
/// codomain has more than kObserverSearchCap elements.
ObserverSearch observer_impossibility_search(const Mapping& good, std::span<const Mapping> bad,
                                             const Rel& p, const Rel& s);
ObserverSearch observer_impossibility_search(const Mapping& good, const Mapping& bad,
                                             const Rel& p, const Rel& s);

}  // namespace loci

#endif  // LOCI_TINI_HPP
