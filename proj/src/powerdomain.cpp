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

#include "loci/powerdomain.hpp"

#include <algorithm>
#include <string>

#include "loci/loci.hpp"

namespace loci {

ElementSet convex_closure(const Poset& a, ElementSet xs) {
  ElementSet above;
  ElementSet below;
  xs.for_each([&](Index x) {
    above |= a.up_set(x);
    below |= a.down_set(x);
  });
  return above & below;
}

bool em_related(const Rel& r, ElementSet xs, ElementSet ys) {
  bool ok = true;
  xs.for_each([&](Index x) { ok = ok && r.row(x).intersects(ys); });
  ys.for_each([&](Index y) { ok = ok && r.column(y).intersects(xs); });
  return ok;
}

PdElement::PdElement(PosetPtr base, ElementSet members)
    : base_(std::move(base)), members_(members) {
  if (members_.empty()) throw InvalidArgument("powerdomain elements are non-empty");
  if (!members_.subset_of(base_->all())) throw InvalidArgument("set mentions unknown elements");
  if (!base_->is_convex(members_)) throw InvalidArgument("powerdomain elements are convex sets");
}

PdElement pd_union(const PdElement& x, const PdElement& y) {
  if (!same_carrier(x.base(), y.base())) {
    throw CarrierMismatch("union of powerdomain elements over different posets");
  }
  return PdElement(x.base(), convex_closure(*x.base(), x.members() | y.members()));
}

Powerdomain::Powerdomain(PosetPtr base, std::size_t cap) : base_(std::move(base)) {
  if (base_->size() > cap) {
    throw CapExceeded("powerdomain of a " + std::to_string(base_->size()) +
                      "-element poset exceeds the cap of " + std::to_string(cap));
  }
  if (base_->size() >= 63) throw CapExceeded("powerdomain base is too large");
  const std::uint64_t limit = std::uint64_t{1} << base_->size();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const ElementSet s(bits);
    if (base_->is_convex(s)) {
      if (sets_.size() == kMaxCarrier) {
        throw CapExceeded("powerdomain has more than " + std::to_string(kMaxCarrier) + " elements");
      }
      sets_.push_back(s);
    }
  }
  std::sort(sets_.begin(), sets_.end(), [](ElementSet a, ElementSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  std::vector<std::string> names;
  for (ElementSet s : sets_) {
    std::string n = "[";
    bool first = true;
    s.for_each([&](Index x) {
      if (!first) n += ",";
      n += base_->name(x);
      first = false;
    });
    names.push_back(n + "]");
  }
  const Rel order = Rel::order(base_);
  std::vector<ElementSet> up(sets_.size());
  for (Index i = 0; i < sets_.size(); ++i) {
    for (Index j = 0; j < sets_.size(); ++j) {
      if (em_related(order, sets_[i], sets_[j])) up[i].insert(j);
    }
  }
  poset_ = Poset::from_up_sets(std::move(names), std::move(up));
}

std::optional<Index> Powerdomain::find(ElementSet convex) const {
  auto it = std::find(sets_.begin(), sets_.end(), convex);
  if (it == sets_.end()) return std::nullopt;
  return static_cast<Index>(it - sets_.begin());
}

Index Powerdomain::index_of(ElementSet convex) const {
  if (auto i = find(convex)) return *i;
  throw InvalidArgument("set is not an element of the powerdomain");
}

Index Powerdomain::index_of(const PdElement& x) const {
  if (!same_carrier(x.base(), base_)) throw CarrierMismatch("element of a different powerdomain");
  return index_of(x.members());
}

FnTable Powerdomain::unit() const {
  std::vector<Index> t(base_->size());
  for (Index x = 0; x < t.size(); ++x) t[x] = index_of(ElementSet::singleton(x));
  return FnTable(base_, poset_, std::move(t));
}

FnTable kleisli_extend(const FnTable& f, const Powerdomain& from, const Powerdomain& to) {
  if (!same_carrier(f.dom(), from.base())) {
    throw CarrierMismatch(
        "Kleisli extension: source powerdomain is not over the function's domain");
  }
  if (!same_carrier(f.cod(), to.poset())) {
    throw CarrierMismatch("Kleisli extension: function does not map into the target powerdomain");
  }
  std::vector<Index> t(from.size());
  for (Index i = 0; i < t.size(); ++i) {
    ElementSet u;
    from.members(i).for_each([&](Index x) { u |= to.members(f(x)); });
    t[i] = to.index_of(convex_closure(*to.base(), u));
  }
  return FnTable(from.poset(), to.poset(), std::move(t));
}

FnTable kleisli_compose(const FnTable& f, const FnTable& g, const Powerdomain& mid,
                        const Powerdomain& to) {
  if (!same_carrier(f.cod(), mid.poset())) {
    throw CarrierMismatch("Kleisli composition: first function does not map into P(B)");
  }
  return compose(kleisli_extend(g, mid, to), f);
}

Rel pd_restrict(const Powerdomain& pd, const Rel& r) {
  if (!same_carrier(r.carrier(), pd.base())) {
    throw CarrierMismatch("relation is not on the powerdomain's base");
  }
  std::vector<ElementSet> rows(pd.size());
  for (Index i = 0; i < pd.size(); ++i) {
    for (Index j = 0; j < pd.size(); ++j) {
      if (em_related(r, pd.members(i), pd.members(j))) rows[i].insert(j);
    }
  }
  return Rel(pd.poset(), std::move(rows));
}

Rel pd_lift_relation(const Powerdomain& pd, const Rel& p) {
  require_complete(p, "lifted relation");
  return pd_restrict(pd, p);
}

}  // namespace loci
