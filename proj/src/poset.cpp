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

#include "loci/poset.hpp"

#include <algorithm>
#include <unordered_set>

namespace loci {

namespace {

void check_names(const std::vector<std::string>& names) {
  if (names.empty()) {
    throw InvalidArgument("poset carrier must be non-empty");
  }
  if (names.size() > kMaxCarrier) {
    throw CapExceeded("poset has " + std::to_string(names.size()) + " elements; at most " +
                      std::to_string(kMaxCarrier) + " are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw InvalidArgument("duplicate element name '" + n + "'");
    }
  }
}

}  // namespace

Poset::Poset(std::vector<std::string> names, std::vector<ElementSet> up)
    : names_(std::move(names)), up_(std::move(up)), down_(names_.size()) {
  for (Index a = 0; a < size(); ++a) {
    up_[a].for_each([&](Index b) { down_[b].insert(a); });
  }
}

PosetPtr Poset::build(std::vector<std::string> names, std::span<const NamedPair> covers) {
  check_names(names);
  const std::size_t n = names.size();
  auto lookup = [&](const std::string& s) -> Index {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) {
      throw InvalidArgument("unknown element '" + s + "' in order");
    }
    return static_cast<Index>(it - names.begin());
  };
  std::vector<ElementSet> up(n);
  for (Index a = 0; a < n; ++a) up[a].insert(a);
  for (const auto& c : covers) up[lookup(c.lower)].insert(lookup(c.upper));
  // Warshall over bit rows.
  for (Index k = 0; k < n; ++k) {
    for (Index i = 0; i < n; ++i) {
      if (up[i].contains(k)) up[i] |= up[k];
    }
  }
  return from_up_sets(std::move(names), std::move(up));
}

PosetPtr Poset::from_up_sets(std::vector<std::string> names, std::vector<ElementSet> up) {
  check_names(names);
  const std::size_t n = names.size();
  if (up.size() != n) {
    throw InvalidArgument("order matrix does not match carrier size");
  }
  const ElementSet carrier = ElementSet::full(n);
  for (Index a = 0; a < n; ++a) {
    if (!up[a].subset_of(carrier)) throw InvalidArgument("order mentions unknown index");
    if (!up[a].contains(a)) throw InvalidArgument("order is not reflexive at '" + names[a] + "'");
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b : up[a].members()) {
      if (!up[b].subset_of(up[a])) {
        throw InvalidArgument("order is not transitive at '" + names[a] + "' <= '" + names[b] +
                              "'");
      }
      if (b != a && up[b].contains(a)) {
        throw InvalidArgument("antisymmetry violation: '" + names[a] + "' and '" + names[b] +
                              "' are distinct but mutually ordered");
      }
    }
  }
  return PosetPtr(new Poset(std::move(names), std::move(up)));
}

PosetPtr Poset::discrete(std::vector<std::string> names) {
  std::vector<ElementSet> up;
  for (Index a = 0; a < names.size(); ++a) up.push_back(ElementSet::singleton(a));
  return from_up_sets(std::move(names), std::move(up));
}

PosetPtr Poset::chain(std::vector<std::string> names) {
  const std::size_t n = names.size();
  std::vector<ElementSet> up;
  for (Index a = 0; a < n; ++a) up.push_back(ElementSet::full(n) - ElementSet::full(a));
  return from_up_sets(std::move(names), std::move(up));
}

std::optional<Index> Poset::find(std::string_view name) const {
  for (Index i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Index Poset::at(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InvalidArgument("unknown element '" + std::string(name) + "'");
}

std::vector<std::pair<Index, Index>> Poset::covering_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index a = 0; a < size(); ++a) {
    ElementSet strictly_above = up_[a] - ElementSet::singleton(a);
    strictly_above.for_each([&](Index b) {
      // b covers a iff no c strictly between them.
      ElementSet between = strictly_above & down_[b];
      between.erase(b);
      if (between.empty()) out.emplace_back(a, b);
    });
  }
  return out;
}

ElementSet Poset::upper_bounds(ElementSet xs) const {
  ElementSet out = all();
  xs.for_each([&](Index x) { out &= up_[x]; });
  return out;
}

std::optional<Index> Poset::least_of(ElementSet xs) const {
  std::optional<Index> found;
  xs.for_each([&](Index x) {
    if (!found && xs.subset_of(up_[x])) found = x;
  });
  return found;
}

std::optional<Index> Poset::greatest_of(ElementSet xs) const {
  std::optional<Index> found;
  xs.for_each([&](Index x) {
    if (!found && xs.subset_of(down_[x])) found = x;
  });
  return found;
}

std::optional<Index> Poset::supremum(ElementSet xs) const { return least_of(upper_bounds(xs)); }

bool Poset::is_directed(ElementSet xs) const {
  if (xs.empty()) return false;
  bool ok = true;
  xs.for_each([&](Index a) {
    xs.for_each([&](Index b) {
      if (ok && !(up_[a] & up_[b]).intersects(xs)) ok = false;
    });
  });
  return ok;
}

bool Poset::is_convex(ElementSet xs) const {
  // Everything between two members is a member.
  bool ok = true;
  xs.for_each([&](Index lo) {
    xs.for_each([&](Index hi) {
      if (ok && !(up_[lo] & down_[hi]).subset_of(xs)) ok = false;
    });
  });
  return ok;
}

bool Poset::is_discrete() const {
  return std::all_of(up_.begin(), up_.end(), [](ElementSet s) { return s.size() == 1; });
}

bool same_carrier(const PosetPtr& a, const PosetPtr& b) { return a == b || (a && b && *a == *b); }

PosetPtr lift(const PosetPtr& a, std::string bottom_name) {
  const std::size_t n = a->size();
  std::vector<std::string> names;
  names.reserve(n + 1);
  names.push_back(std::move(bottom_name));
  names.insert(names.end(), a->names().begin(), a->names().end());
  std::vector<ElementSet> up(n + 1);
  up[0] = ElementSet::full(n + 1);
  for (Index i = 0; i < n; ++i) up[i + 1] = ElementSet(a->up_set(i).bits() << 1);
  return Poset::from_up_sets(std::move(names), std::move(up));
}

PosetPtr product(const PosetPtr& a, const PosetPtr& b) {
  const std::size_t na = a->size();
  const std::size_t nb = b->size();
  if (na * nb > kMaxCarrier) {
    throw CapExceeded("product carrier would exceed " + std::to_string(kMaxCarrier) + " elements");
  }
  std::vector<std::string> names;
  std::vector<ElementSet> up(na * nb);
  for (Index i = 0; i < na; ++i) {
    for (Index j = 0; j < nb; ++j) names.push_back("(" + a->name(i) + "," + b->name(j) + ")");
  }
  for (Index i = 0; i < na; ++i) {
    for (Index j = 0; j < nb; ++j) {
      a->up_set(i).for_each([&](Index i2) {
        b->up_set(j).for_each([&](Index j2) { up[i * nb + j].insert(i2 * nb + j2); });
      });
    }
  }
  return Poset::from_up_sets(std::move(names), std::move(up));
}

Mapping::Mapping(PosetPtr dom, PosetPtr cod, std::vector<Index> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (!dom_ || !cod_) throw InvalidArgument("mapping needs both a domain and a codomain");
  if (table_.size() != dom_->size()) {
    throw InvalidArgument("function table is partial: " + std::to_string(table_.size()) + " of " +
                          std::to_string(dom_->size()) + " inputs mapped");
  }
  for (Index v : table_) {
    if (v >= cod_->size()) throw InvalidArgument("function table maps outside its codomain");
  }
}

ElementSet Mapping::image(ElementSet xs) const {
  ElementSet out;
  xs.for_each([&](Index x) { out.insert(table_[x]); });
  return out;
}

ElementSet Mapping::preimage(ElementSet ys) const {
  ElementSet out;
  for (Index x = 0; x < table_.size(); ++x) {
    if (ys.contains(table_[x])) out.insert(x);
  }
  return out;
}

std::optional<std::pair<Index, Index>> Mapping::monotonicity_violation() const {
  for (Index x = 0; x < dom_->size(); ++x) {
    for (Index y : dom_->up_set(x).members()) {
      if (!cod_->leq(table_[x], table_[y])) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

FnTable::FnTable(PosetPtr dom, PosetPtr cod, std::vector<Index> table)
    : FnTable(Mapping(std::move(dom), std::move(cod), std::move(table))) {}

FnTable::FnTable(Mapping m) : Mapping(std::move(m)) {
  if (auto v = monotonicity_violation()) {
    const auto [x, y] = *v;
    throw NotMonotone("function is not monotone: " + dom()->name(x) + " <= " + dom()->name(y) +
                          " but " + cod()->name((*this)(x)) + " is not below " +
                          cod()->name((*this)(y)),
                      x, y);
  }
}

FnTable FnTable::identity(const PosetPtr& a) {
  std::vector<Index> t(a->size());
  for (Index i = 0; i < t.size(); ++i) t[i] = i;
  return FnTable(a, a, std::move(t));
}

FnTable FnTable::constant(const PosetPtr& dom, const PosetPtr& cod, Index value) {
  return FnTable(dom, cod, std::vector<Index>(dom->size(), value));
}

FnTable check_monotone(const PosetPtr& dom, const PosetPtr& cod,
                       std::span<const std::pair<std::string, std::string>> table) {
  constexpr Index kUnset = static_cast<Index>(-1);
  std::vector<Index> t(dom->size(), kUnset);
  for (const auto& [x, y] : table) {
    const Index xi = dom->at(x);
    const Index yi = cod->at(y);
    if (t[xi] != kUnset && t[xi] != yi) {
      throw InvalidArgument("input '" + x + "' is mapped twice");
    }
    t[xi] = yi;
  }
  for (Index i = 0; i < t.size(); ++i) {
    if (t[i] == kUnset) {
      throw InvalidArgument("function table is partial: no image for '" + dom->name(i) + "'");
    }
  }
  return FnTable(dom, cod, std::move(t));
}

Mapping compose(const Mapping& g, const Mapping& f) {
  if (!same_carrier(f.cod(), g.dom())) {
    throw CarrierMismatch(
        "cannot compose: codomain of the inner function is not the domain of the outer");
  }
  std::vector<Index> t(f.dom()->size());
  for (Index x = 0; x < t.size(); ++x) t[x] = g(f(x));
  return Mapping(f.dom(), g.cod(), std::move(t));
}

FnTable compose(const FnTable& g, const FnTable& f) {
  return FnTable(compose(static_cast<const Mapping&>(g), static_cast<const Mapping&>(f)));
}

}  // namespace loci
