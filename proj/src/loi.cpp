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

#include "loci/loi.hpp"

#include <string>

namespace loci {

void require_equivalence(const Rel& r, const char* what) {
  if (!r.is_equivalence()) {
    throw InvalidArgument(std::string(what) + " is not an equivalence relation");
  }
}

bool loi_leq(const Rel& p, const Rel& q) {
  require_equivalence(p, "left operand");
  require_equivalence(q, "right operand");
  return q.subset_of(p);
}

Rel loi_join(const Rel& p, const Rel& q) {
  require_equivalence(p, "left operand");
  require_equivalence(q, "right operand");
  return intersect(p, q);
}

Rel loi_meet(const Rel& p, const Rel& q) {
  require_equivalence(p, "left operand");
  require_equivalence(q, "right operand");
  return close(unite(p, q), Closure::kEquivalence);
}

Rel kernel(const Mapping& f) { return pullback(f, Rel::identity(f.cod())); }

ElementSet knowledge_set(const Mapping& f, Index a) {
  if (a >= f.dom()->size()) throw InvalidArgument("unknown input element");
  return f.preimage(ElementSet::singleton(f(a)));
}

FlowResult flow_check(const Mapping& f, const Rel& p, const Rel& q) {
  if (!same_carrier(p.carrier(), f.dom())) {
    throw CarrierMismatch("precondition is not a relation on the function's domain");
  }
  if (!same_carrier(q.carrier(), f.cod())) {
    throw CarrierMismatch("postcondition is not a relation on the function's codomain");
  }
  for (Index a = 0; a < p.size(); ++a) {
    // Inputs whose images are q-related to f(a).
    const ElementSet ok = f.preimage(q.row(f(a)));
    const ElementSet bad = p.row(a) - ok;
    if (!bad.empty()) return FlowResult::violated({a, bad.first()});
  }
  return FlowResult::holding();
}

Rel pullback(const Mapping& f, const Rel& r) {
  if (!same_carrier(r.carrier(), f.cod())) {
    throw CarrierMismatch("relation is not on the function's codomain");
  }
  std::vector<ElementSet> rows(f.dom()->size());
  for (Index x = 0; x < rows.size(); ++x) rows[x] = f.preimage(r.row(f(x)));
  return Rel(f.dom(), std::move(rows));
}

Rel pushforward(const Mapping& f, const Rel& p) {
  if (!same_carrier(p.carrier(), f.dom())) {
    throw CarrierMismatch("relation is not on the function's domain");
  }
  require_equivalence(p, "precondition");
  Rel image(f.cod());
  for (auto [a, b] : p.pairs()) image.insert(f(a), f(b));
  return close(image, Closure::kEquivalence);
}

std::optional<Mapping> find_postprocessor(const Mapping& f, const Mapping& g) {
  if (!same_carrier(f.dom(), g.dom())) {
    throw CarrierMismatch("postprocessing needs functions with a common domain");
  }
  if (!kernel(g).subset_of(kernel(f))) return std::nullopt;
  std::vector<Index> table(g.cod()->size(), 0);
  for (Index y = 0; y < table.size(); ++y) {
    const ElementSet pre = g.preimage(ElementSet::singleton(y));
    if (!pre.empty()) table[y] = f(pre.first());
  }
  return Mapping(g.cod(), f.cod(), std::move(table));
}

}  // namespace loci
