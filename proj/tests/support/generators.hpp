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

// Seeded generators shared by the property tests.

#ifndef LOCI_TESTS_GENERATORS_HPP
#define LOCI_TESTS_GENERATORS_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "loci/catalog.hpp"
#include "loci/loci.hpp"
#include "loci/poset.hpp"
#include "loci/relation.hpp"

namespace loci::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::vector<std::string> element_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

/// Random poset on n elements; covers only go from lower to higher index.
inline PosetPtr random_poset(Rng& rng, std::size_t n, double density = 0.35) {
  const auto names = element_names(n);
  std::vector<NamedPair> covers;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng, density)) covers.push_back({names[i], names[j]});
    }
  }
  return Poset::build(names, covers);
}

/// Every labelled poset on n elements, by brute force over the off-diagonal
/// pairs. Practical up to four elements.
inline std::vector<PosetPtr> all_posets(std::size_t n) {
  std::vector<std::pair<Index, Index>> offdiag;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i != j) offdiag.emplace_back(i, j);
    }
  }
  std::vector<PosetPtr> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << offdiag.size()); ++mask) {
    std::vector<ElementSet> up(n);
    for (Index i = 0; i < n; ++i) up[i].insert(i);
    for (std::size_t k = 0; k < offdiag.size(); ++k) {
      if ((mask >> k) & 1U) up[offdiag[k].first].insert(offdiag[k].second);
    }
    bool order = true;
    for (Index i = 0; i < n && order; ++i) {
      for (Index j = 0; j < n && order; ++j) {
        if (i != j && up[i].contains(j) && up[j].contains(i)) order = false;
        if (up[i].contains(j) && !up[j].subset_of(up[i])) order = false;
      }
    }
    if (order) out.push_back(Poset::from_up_sets(element_names(n), up));
  }
  return out;
}

/// Indices ordered so that every element follows everything below it.
inline std::vector<Index> linear_extension(const Poset& a) {
  std::vector<Index> order(a.size());
  for (Index i = 0; i < a.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) {
    return a.down_set(x).size() < a.down_set(y).size();
  });
  return order;
}

/// Uniform choice among the values still consistent with monotonicity, in a
/// linear extension of the domain. Falls back to a constant table when a
/// choice leaves no upper bound.
inline FnTable random_monotone(Rng& rng, const PosetPtr& dom, const PosetPtr& cod) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Index> table(dom->size());
    bool ok = true;
    for (Index x : linear_extension(*dom)) {
      ElementSet allowed = cod->all();
      (dom->down_set(x) - ElementSet::singleton(x)).for_each([&](Index y) {
        allowed = allowed & cod->up_set(table[y]);
      });
      if (allowed.empty()) {
        ok = false;
        break;
      }
      const auto members = allowed.members();
      table[x] = members[uniform(rng, 0, members.size() - 1)];
    }
    if (ok) return FnTable(dom, cod, table);
  }
  return FnTable::constant(dom, cod, uniform(rng, 0, cod->size() - 1));
}

inline Rel random_relation(Rng& rng, const PosetPtr& a, double density = 0.3) {
  Rel r(a);
  for (Index x = 0; x < a->size(); ++x) {
    for (Index y = 0; y < a->size(); ++y) {
      if (coin(rng, density)) r.insert(x, y);
    }
  }
  return r;
}

inline Rel random_equivalence(Rng& rng, const PosetPtr& a) {
  const std::size_t k = uniform(rng, 1, a->size());
  std::vector<ElementSet> blocks(k);
  for (Index x = 0; x < a->size(); ++x) blocks[uniform(rng, 0, k - 1)].insert(x);
  std::erase_if(blocks, [](ElementSet b) { return b.empty(); });
  return Rel::from_blocks(a, blocks);
}

inline Rel random_preorder(Rng& rng, const PosetPtr& a) {
  return close(random_relation(rng, a, 0.2), Closure::kReflexiveTransitive);
}

inline Rel random_complete(Rng& rng, const PosetPtr& a) {
  return close(unite(random_relation(rng, a, 0.15), Rel::order(a)),
               Closure::kReflexiveTransitive);
}

/// Distinct posets from the catalog with at most `max_size` elements, plus
/// the four-element diamond and short chains.
inline std::vector<PosetPtr> catalog_posets(std::size_t max_size, std::size_t n = 4) {
  std::vector<PosetPtr> out;
  auto add = [&](const PosetPtr& p) {
    if (p->size() > max_size) return;
    for (const auto& q : out) {
      if (*q == *p) return;
    }
    out.push_back(p);
  };
  for (const auto& name : list_examples()) {
    for (const auto& [_, p] : get_example(name, n).posets) add(p);
  }
  const PosetPtr two = Poset::chain({"bot", "*"});
  add(product(two, two));
  add(Poset::chain({"0", "1"}));
  add(Poset::chain({"0", "1", "2", "3"}));
  add(Poset::discrete({"x"}));
  return out;
}

/// Every function with its domain and codomain drawn from the catalog.
inline std::vector<FnTable> catalog_functions(std::size_t n = 4) {
  std::vector<FnTable> out;
  for (const auto& name : list_examples()) {
    for (const auto& [_, f] : get_example(name, n).functions) out.push_back(f);
  }
  return out;
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[uniform(rng, 0, items.size() - 1)];
}

}  // namespace loci::testing

#endif  // LOCI_TESTS_GENERATORS_HPP
