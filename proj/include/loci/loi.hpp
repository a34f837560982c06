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

#ifndef LOCI_LOI_HPP
#define LOCI_LOI_HPP

#include <optional>

#include "loci/poset.hpp"
#include "loci/relation.hpp"

namespace loci {

// Lattice of information: equivalence relations on a carrier, ordered by
// reverse inclusion. All is the bottom, Id the top.

/// P ⊑ Q iff Q ⊆ P. Both arguments must be equivalence relations.
bool loi_leq(const Rel& p, const Rel& q);
/// Intersection.
Rel loi_join(const Rel& p, const Rel& q);
/// Equivalence closure of the union.
Rel loi_meet(const Rel& p, const Rel& q);

/// a ker(f) b iff f(a) = f(b).
Rel kernel(const Mapping& f);
/// {a' | f(a') = f(a)}
ElementSet knowledge_set(const Mapping& f, Index a);

/// Two inputs related by the precondition whose images are not related by
/// the postcondition.
struct Violation {
  Index input;
  Index other_input;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of a flow check: either the property holds or the canonically
/// first witness pair (row-major over the domain) is reported.
class FlowResult {
 public:
  static FlowResult holding() { return FlowResult(); }
  static FlowResult violated(Violation v) { return FlowResult(v); }

  bool holds() const { return !violation_.has_value(); }
  explicit operator bool() const { return holds(); }
  const std::optional<Violation>& violation() const { return violation_; }

 private:
  FlowResult() = default;
  explicit FlowResult(Violation v) : violation_(v) {}
  std::optional<Violation> violation_;
};

/// f: P ⇒ Q, i.e. a P a' implies f(a) Q f(a'). P and Q may be arbitrary
/// relations on dom(f) and cod(f).
FlowResult flow_check(const Mapping& f, const Rel& p, const Rel& q);

/// Generalised kernel: x f*(R) y iff f(x) R f(y). Preserves reflexivity,
/// symmetry and transitivity.
Rel pullback(const Mapping& f, const Rel& r);

/// Largest Q in LoI(cod f) with f: P ⇒ Q, computed as the equivalence
/// closure of the image of P. P must be an equivalence relation.
Rel pushforward(const Mapping& f, const Rel& p);

/// Some p with f = p ∘ g, or nullopt when ker(f) is not below ker(g) in LoI.
/// Values outside range(g) go to the first codomain element. The result is
/// not required to be monotone.
std::optional<Mapping> find_postprocessor(const Mapping& f, const Mapping& g);

/// Throws InvalidArgument unless `r` is an equivalence relation.
void require_equivalence(const Rel& r, const char* what);

}  // namespace loci

#endif  // LOCI_LOI_HPP
