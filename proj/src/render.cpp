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

#include "loci/render.hpp"

#include <algorithm>

namespace loci {
namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string dot(std::string_view title, const std::vector<std::string>& labels,
                const std::vector<std::pair<Index, Index>>& edges) {
  std::string out = "digraph " + quoted(title) + " {\n  rankdir=BT;\n";
  for (Index i = 0; i < labels.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=" + quoted(labels[i]) + "];\n";
  }
  std::vector<std::string> lines;
  for (const auto& [lo, hi] : edges) {
    lines.push_back("  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n");
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out += l;
  return out + "}\n";
}

// Strict pairs (i, j) with `below(i, j)`, reduced to covers unless `full`.
template <typename Below>
std::vector<std::pair<Index, Index>> hasse_edges(std::size_t n, Below below, bool full) {
  std::vector<std::pair<Index, Index>> edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j || !below(i, j)) continue;
      bool cover = true;
      for (Index k = 0; k < n && cover && !full; ++k) {
        if (k != i && k != j && below(i, k) && below(k, j)) cover = false;
      }
      if (cover) edges.emplace_back(i, j);
    }
  }
  return edges;
}

}  // namespace

std::string render_set(const Poset& a, ElementSet xs) {
  std::string out = "{";
  bool first = true;
  xs.for_each([&](Index x) {
    if (!first) out += " ";
    out += a.name(x);
    first = false;
  });
  return out + "}";
}

std::string render_relation(const Rel& r) {
  const Poset& a = *r.carrier();
  if (!r.is_preorder()) {
    std::string out = "pairs:";
    bool first = true;
    for (const auto& [x, y] : r.pairs()) {
      out += (first ? " " : ", ") + a.name(x) + " <= " + a.name(y);
      first = false;
    }
    return out;
  }
  const OrderedPartition op = to_ordered_partition(r);
  const std::size_t k = op.block_count();
  std::vector<std::string> names;
  for (ElementSet b : op.blocks()) names.push_back(render_set(a, b));

  bool antichain = true;
  bool chain = true;
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      const bool le = op.block_leq(i, j);
      const bool ge = op.block_leq(j, i);
      if (i != j && (le || ge)) antichain = false;
      if (!le && !ge) chain = false;
    }
  }
  std::string out;
  if (chain) {
    std::vector<Index> order(k);
    for (Index i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](Index i, Index j) {
      return op.block_leq(i, j) && i != j;
    });
    for (Index i = 0; i < k; ++i) out += (i ? " <= " : "") + names[order[i]];
    return out;
  }
  if (antichain) {
    for (Index i = 0; i < k; ++i) out += (i ? " | " : "") + names[i];
    return out;
  }
  const auto covers = hasse_edges(k, [&](Index i, Index j) { return op.block_leq(i, j); }, false);
  ElementSet touched;
  for (const auto& [lo, hi] : covers) {
    out += (out.empty() ? "" : ", ") + names[lo] + " <= " + names[hi];
    touched.insert(lo);
    touched.insert(hi);
  }
  for (Index i = 0; i < k; ++i) {
    if (!touched.contains(i)) out += ", " + names[i];
  }
  return out;
}

std::string render_violation(const Mapping& f, const Violation& v) {
  const Poset& d = *f.dom();
  const Poset& c = *f.cod();
  return "VIOLATION: a=" + d.name(v.input) + " a'=" + d.name(v.other_input) +
         " f(a)=" + c.name(f(v.input)) + " f(a')=" + c.name(f(v.other_input));
}

std::string emit_dot(std::string_view title, const Poset& p, bool full) {
  return dot(title, p.names(),
             hasse_edges(p.size(), [&](Index i, Index j) { return p.leq(i, j); }, full));
}

std::string emit_dot(std::string_view title, const OrderedPartition& op, bool full) {
  std::vector<std::string> labels;
  for (ElementSet b : op.blocks()) labels.push_back(render_set(*op.carrier(), b));
  return dot(title, labels,
             hasse_edges(op.block_count(), [&](Index i, Index j) { return op.block_leq(i, j); },
                         full));
}

std::string emit_lattice_dot(std::string_view title, const std::vector<Rel>& elements, bool full) {
  std::vector<std::string> labels;
  for (const Rel& r : elements) labels.push_back(render_relation(r));
  auto below = [&](Index i, Index j) { return elements[j].subset_of(elements[i]); };
  return dot(title, labels, hasse_edges(elements.size(), below, full));
}

}  // namespace loci
