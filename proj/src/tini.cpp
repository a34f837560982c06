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

#include "loci/loci.hpp"

namespace loci {

Rel compatible_extension(const Rel& q) {
  if (!q.is_preorder()) throw InvalidArgument("compatible extension needs a preorder");
  std::vector<ElementSet> rows(q.size());
  for (Index d = 0; d < q.size(); ++d) {
    for (Index e = 0; e < q.size(); ++e) {
      if (q.row(d).intersects(q.row(e))) rows[d].insert(e);
    }
  }
  return Rel(q.carrier(), std::move(rows));
}

FlowResult ti_flow_check(const Mapping& f, const Rel& p, const Rel& q) {
  require_complete(p, "precondition");
  require_complete(q, "postcondition");
  return flow_check(f, compatible_extension(p), compatible_extension(q));
}

Rel flat_termination_observer(const PosetPtr& b) {
  const auto bot = b->bottom();
  if (!bot) throw InvalidArgument("termination observer needs a codomain with a bottom element");
  const ElementSet defined = b->all() - ElementSet::singleton(*bot);
  bool flat = true;
  defined.for_each([&](Index x) { flat = flat && b->up_set(x) == ElementSet::singleton(x); });
  if (!flat || defined.empty()) {
    throw InvalidArgument("termination observer needs a lifted flat codomain");
  }
  const ElementSet blocks[] = {ElementSet::singleton(*bot), defined};
  return Rel::from_blocks(b, blocks);
}

FlowResult ti_via_observer(const Mapping& f, const Rel& p, const Rel& q, const Rel& t) {
  require_equivalence(p, "precondition");
  require_equivalence(q, "postcondition");
  require_equivalence(t, "observer");
  return flow_check(f, loi_join(p, pullback(f, t)), q);
}

ObserverSearch observer_impossibility_search(const Mapping& good, std::span<const Mapping> bad,
                                             const Rel& p, const Rel& s) {
  for (const Mapping& g : bad) {
    if (!same_carrier(g.cod(), good.cod())) {
      throw CarrierMismatch("observer search needs functions with a shared codomain");
    }
  }
  if (good.cod()->size() > kObserverSearchCap) {
    throw CapExceeded("observer search is limited to codomains of " +
                      std::to_string(kObserverSearchCap) + " elements");
  }
  ObserverSearch result;
  for (const Rel& t : enumerate_loi(good.cod(), kObserverSearchCap)) {
    ++result.examined;
    if (!ti_via_observer(good, p, s, t).holds()) continue;
    bool rejects_all = true;
    for (const Mapping& g : bad) {
      if (ti_via_observer(g, p, s, t).holds()) {
        rejects_all = false;
        break;
      }
    }
    if (rejects_all) {
      result.separating = t;
      return result;
    }
  }
  return result;
}

ObserverSearch observer_impossibility_search(const Mapping& good, const Mapping& bad,
                                             const Rel& p, const Rel& s) {
  return observer_impossibility_search(good, std::span<const Mapping>(&bad, 1), p, s);
}

}  // namespace loci
