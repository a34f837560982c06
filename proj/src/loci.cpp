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

#include "loci/loci.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace loci {

bool is_complete_preorder(const Rel& q) {
  return q.is_preorder() && Rel::order(q.carrier()).subset_of(q);
}

bool satisfies_directed_completeness(const Rel& q, std::size_t max_carrier) {
  const Poset& a = *q.carrier();
  if (a.size() > max_carrier) {
    throw CapExceeded("directed-set enumeration is limited to " + std::to_string(max_carrier) +
                      " elements");
  }
  if (!q.is_preorder()) return false;
  const std::uint64_t limit = std::uint64_t{1} << a.size();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const ElementSet xs(bits);
    if (!a.is_directed(xs)) continue;
    const auto sup = a.supremum(xs);
    if (!sup) continue;
    // (1) every member is Q-below the supremum.
    bool below = true;
    xs.for_each([&](Index x) { below = below && q(x, *sup); });
    if (!below) return false;
    // (2) every common Q-upper bound of the members is Q-above the supremum.
    ElementSet q_bounds = a.all();
    xs.for_each([&](Index x) { q_bounds &= q.row(x); });
    if (!q_bounds.subset_of(q.row(*sup))) return false;
  }
  return true;
}

void require_complete(const Rel& q, const char* what) {
  if (!is_complete_preorder(q)) {
    throw InvalidArgument(std::string(what) + " is not a complete preorder");
  }
}

bool loci_leq(const Rel& p, const Rel& q) {
  require_complete(p, "left operand");
  require_complete(q, "right operand");
  return q.subset_of(p);
}

Rel loci_join(const Rel& p, const Rel& q) {
  require_complete(p, "left operand");
  require_complete(q, "right operand");
  return intersect(p, q);
}

Rel loci_meet(const Rel& p, const Rel& q) {
  require_complete(p, "left operand");
  require_complete(q, "right operand");
  return close(unite(p, q), Closure::kReflexiveTransitive);
}

Rel ordered_kernel(const Mapping& f) { return pullback(f, Rel::order(f.cod())); }

ElementSet ordered_knowledge_set(const Mapping& f, Index a) {
  if (a >= f.dom()->size()) throw InvalidArgument("unknown input element");
  return f.preimage(f.cod()->up_set(f(a)));
}

bool info_leq(const Mapping& f, const Mapping& g) { return loi_leq(kernel(f), kernel(g)); }

bool ordered_info_leq(const Mapping& f, const Mapping& g) {
  return loci_leq(ordered_kernel(f), ordered_kernel(g));
}

Rel loci_pullback(const FnTable& f, const Rel& q) {
  require_complete(q, "postcondition");
  return pullback(f, q);
}

Rel loci_pushforward(const FnTable& f, const Rel& p) {
  if (!same_carrier(p.carrier(), f.dom())) {
    throw CarrierMismatch("relation is not on the function's domain");
  }
  require_complete(p, "precondition");
  Rel image = Rel::order(f.cod());
  for (auto [a, b] : p.pairs()) image.insert(f(a), f(b));
  return close(image, Closure::kReflexiveTransitive);
}

Rel cp(const Rel& r) {
  require_equivalence(r, "argument of cp");
  return close(unite(r, Rel::order(r.carrier())), Closure::kReflexiveTransitive);
}

Rel er(const Rel& p) {
  if (!p.is_preorder()) throw InvalidArgument("argument of er is not a preorder");
  return intersect(p, invert(p));
}

bool is_realisable(const Rel& r) { return er(cp(r)) == r; }

FnTable quotient_map(const Rel& q) {
  const OrderedPartition op = to_ordered_partition(q);
  std::vector<Index> table(q.size());
  for (Index a = 0; a < table.size(); ++a) table[a] = op.block_of(a);
  return FnTable(q.carrier(), block_poset(op), std::move(table));
}

namespace {

// Shortest cycle through `start` in the block graph, ignoring self loops.
// Returns an empty vector when `start` lies on no such cycle.
std::vector<Index> shortest_cycle(const std::vector<ElementSet>& succ, Index start) {
  const std::size_t k = succ.size();
  constexpr Index kNone = static_cast<Index>(-1);
  std::vector<Index> parent(k, kNone);
  std::deque<Index> queue;
  (succ[start] - ElementSet::singleton(start)).for_each([&](Index s) {
    parent[s] = start;
    queue.push_back(s);
  });
  while (!queue.empty()) {
    const Index u = queue.front();
    queue.pop_front();
    if (succ[u].contains(start)) {
      std::vector<Index> path{u};
      for (Index v = parent[u]; v != start; v = parent[v]) path.push_back(v);
      path.push_back(start);
      std::reverse(path.begin(), path.end());
      return path;
    }
    (succ[u] - ElementSet::singleton(u)).for_each([&](Index v) {
      if (v != start && parent[v] == kNone) {
        parent[v] = u;
        queue.push_back(v);
      }
    });
  }
  return {};
}

}  // namespace

PhiResult phi_realisability(const Rel& r) {
  require_equivalence(r, "argument of phi_realisability");
  const OrderedPartition classes = to_ordered_partition(r);
  const Poset& a = *r.carrier();
  const std::size_t k = classes.block_count();

  std::vector<ElementSet> phi(k);
  for (Index i = 0; i < k; ++i) {
    classes.block(i).for_each([&](Index x) {
      a.up_set(x).for_each([&](Index y) { phi[i].insert(classes.block_of(y)); });
    });
  }
  std::vector<ElementSet> closure = phi;
  for (Index m = 0; m < k; ++m) {
    for (Index i = 0; i < k; ++i) {
      if (closure[i].contains(m)) closure[i] |= closure[m];
    }
  }
  for (Index i = 0; i < k; ++i) {
    ElementSet mutual;
    closure[i].for_each([&](Index j) {
      if (j != i && closure[j].contains(i)) mutual.insert(j);
    });
    if (!mutual.empty()) {
      Unrealisable out;
      for (Index b : shortest_cycle(phi, i)) out.cycle.push_back(classes.block(b));
      return out;
    }
  }
  const OrderedPartition ordered(r.carrier(), classes.blocks(), closure);
  std::vector<Index> table(a.size());
  for (Index x = 0; x < table.size(); ++x) table[x] = classes.block_of(x);
  PosetPtr quotient = block_poset(ordered);
  FnTable map(r.carrier(), quotient, std::move(table));
  return Realisable{std::move(quotient), std::move(map)};
}

namespace {

void check_cap(const PosetPtr& a, std::size_t cap) {
  if (a->size() > cap) {
    throw CapExceeded("carrier has " + std::to_string(a->size()) +
                      " elements; enumeration cap is " + std::to_string(cap));
  }
}

struct PreorderSearch {
  const PosetPtr& carrier;
  std::vector<std::pair<Index, Index>> candidates;
  std::vector<ElementSet> excluded;
  std::vector<Rel> out;

  void run(std::vector<ElementSet> rows, std::size_t k) {
    while (k < candidates.size() && rows[candidates[k].first].contains(candidates[k].second)) ++k;
    if (k == candidates.size()) {
      out.emplace_back(carrier, std::move(rows));
      return;
    }
    const auto [i, j] = candidates[k];

    // Include (i, j): the closure adds x R y for every x R i and j R y.
    std::vector<ElementSet> with = rows;
    const ElementSet above_j = rows[j];
    bool consistent = true;
    for (Index x = 0; x < with.size(); ++x) {
      if (with[x].contains(i)) {
        with[x] |= above_j;
        if (with[x].intersects(excluded[x])) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) run(std::move(with), k + 1);

    excluded[i].insert(j);
    run(std::move(rows), k + 1);
    excluded[i].erase(j);
  }
};

}  // namespace

std::vector<Rel> enumerate_loci(const PosetPtr& a, std::size_t cap) {
  check_cap(a, cap);
  PreorderSearch search{a, {}, std::vector<ElementSet>(a->size()), {}};
  for (Index i = 0; i < a->size(); ++i) {
    for (Index j = 0; j < a->size(); ++j) {
      if (!a->leq(i, j)) search.candidates.emplace_back(i, j);
    }
  }
  search.run(Rel::order(a).rows(), 0);
  std::sort(search.out.begin(), search.out.end(), canonical_less);
  return std::move(search.out);
}

std::vector<Rel> enumerate_loi(const PosetPtr& a, std::size_t cap) {
  check_cap(a, cap);
  const std::size_t n = a->size();
  std::vector<Rel> out;
  // Restricted growth strings: label[i] <= 1 + max(label[0..i)).
  std::vector<Index> label(n, 0);
  std::function<void(Index, Index)> grow = [&](Index i, Index blocks) {
    if (i == n) {
      std::vector<ElementSet> parts(blocks);
      for (Index x = 0; x < n; ++x) parts[label[x]].insert(x);
      out.push_back(Rel::from_blocks(a, parts));
      return;
    }
    for (Index b = 0; b <= blocks; ++b) {
      label[i] = b;
      grow(i + 1, std::max(blocks, b + 1));
    }
  };
  grow(0, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::size_t for_each_monotone_table(const PosetPtr& dom, const PosetPtr& cod,
                                    std::span<const std::optional<Index>> fixed,
                                    const std::function<bool(const std::vector<Index>&)>& visit) {
  const std::size_t n = dom->size();
  if (!fixed.empty() && fixed.size() != n) {
    throw InvalidArgument("pinned values do not match the domain size");
  }
  auto pinned = [&](Index x) -> std::optional<Index> {
    return fixed.empty() ? std::nullopt : fixed[x];
  };
  std::vector<Index> table(n, 0);
  std::size_t visited = 0;
  bool stop = false;

  auto compatible = [&](Index x, Index v) {
    for (Index y = 0; y < n; ++y) {
      std::optional<Index> w;
      if (y < x) {
        w = table[y];
      } else if (y > x) {
        w = pinned(y);
      }
      if (!w) continue;
      if (dom->leq(y, x) && !cod->leq(*w, v)) return false;
      if (dom->leq(x, y) && !cod->leq(v, *w)) return false;
    }
    return true;
  };

  std::function<void(Index)> assign = [&](Index x) {
    if (stop) return;
    if (x == n) {
      ++visited;
      if (!visit(table)) stop = true;
      return;
    }
    if (auto p = pinned(x)) {
      if (compatible(x, *p)) {
        table[x] = *p;
        assign(x + 1);
      }
      return;
    }
    for (Index v = 0; v < cod->size() && !stop; ++v) {
      if (compatible(x, v)) {
        table[x] = v;
        assign(x + 1);
      }
    }
  };
  assign(0);
  return visited;
}

std::optional<FnTable> find_monotone_postprocessor(const Mapping& f, const Mapping& g,
                                                   std::uint64_t bound) {
  if (!same_carrier(f.dom(), g.dom())) {
    throw CarrierMismatch("postprocessing needs functions with a common domain");
  }
  const double space = std::pow(static_cast<double>(f.cod()->size()),
                                static_cast<double>(g.cod()->size()));
  if (space > static_cast<double>(bound)) {
    throw CapExceeded("postprocessor search space of " + std::to_string(f.cod()->size()) + "^" +
                      std::to_string(g.cod()->size()) + " tables exceeds the bound of " +
                      std::to_string(bound));
  }
  // p(g(a)) must be f(a) for every input a.
  std::vector<std::optional<Index>> fixed(g.cod()->size());
  for (Index a = 0; a < f.dom()->size(); ++a) {
    auto& slot = fixed[g(a)];
    if (slot && *slot != f(a)) return std::nullopt;
    slot = f(a);
  }
  std::optional<FnTable> found;
  for_each_monotone_table(g.cod(), f.cod(), fixed, [&](const std::vector<Index>& t) {
    found.emplace(g.cod(), f.cod(), t);
    return false;
  });
  return found;
}

}  // namespace loci
