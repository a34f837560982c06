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

#include "loci/relation.hpp"

#include <algorithm>
#include <string>

namespace loci {

Rel::Rel(PosetPtr carrier) : carrier_(std::move(carrier)), rows_(carrier_->size()) {}

Rel::Rel(PosetPtr carrier, std::vector<ElementSet> rows)
    : carrier_(std::move(carrier)), rows_(std::move(rows)) {
  if (rows_.size() != carrier_->size()) {
    throw InvalidArgument("relation matrix does not match carrier size");
  }
  const ElementSet universe = carrier_->all();
  for (ElementSet r : rows_) {
    if (!r.subset_of(universe)) {
      throw InvalidArgument("relation mentions an index outside its carrier");
    }
  }
}

Rel Rel::from_pairs(PosetPtr carrier, std::span<const std::pair<Index, Index>> pairs) {
  Rel r(std::move(carrier));
  for (auto [a, b] : pairs) {
    if (a >= r.size() || b >= r.size()) {
      throw InvalidArgument("relation mentions an index outside its carrier");
    }
    r.insert(a, b);
  }
  return r;
}

Rel Rel::identity(const PosetPtr& carrier) {
  Rel r(carrier);
  for (Index a = 0; a < r.size(); ++a) r.insert(a, a);
  return r;
}

Rel Rel::all(const PosetPtr& carrier) {
  return Rel(carrier, std::vector<ElementSet>(carrier->size(), carrier->all()));
}

Rel Rel::order(const PosetPtr& carrier) {
  std::vector<ElementSet> rows;
  for (Index a = 0; a < carrier->size(); ++a) rows.push_back(carrier->up_set(a));
  return Rel(carrier, std::move(rows));
}

Rel Rel::from_blocks(const PosetPtr& carrier, std::span<const ElementSet> blocks) {
  ElementSet covered;
  Rel r(carrier);
  for (ElementSet b : blocks) {
    if (b.empty()) throw InvalidArgument("partition block is empty");
    if (b.intersects(covered)) throw InvalidArgument("partition blocks overlap");
    covered |= b;
    b.for_each([&](Index a) { r.rows_[a] = b; });
  }
  if (covered != carrier->all()) throw InvalidArgument("partition blocks do not cover the carrier");
  return r;
}

ElementSet Rel::column(Index b) const {
  ElementSet out;
  for (Index a = 0; a < size(); ++a) {
    if (rows_[a].contains(b)) out.insert(a);
  }
  return out;
}

std::size_t Rel::pair_count() const {
  std::size_t n = 0;
  for (ElementSet r : rows_) n += r.size();
  return n;
}

std::vector<std::pair<Index, Index>> Rel::pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index a = 0; a < size(); ++a) {
    rows_[a].for_each([&](Index b) { out.emplace_back(a, b); });
  }
  return out;
}

bool Rel::is_reflexive() const {
  for (Index a = 0; a < size(); ++a) {
    if (!rows_[a].contains(a)) return false;
  }
  return true;
}

bool Rel::is_symmetric() const {
  for (Index a = 0; a < size(); ++a) {
    if (rows_[a] != column(a)) return false;
  }
  return true;
}

bool Rel::is_transitive() const {
  for (Index a = 0; a < size(); ++a) {
    bool ok = true;
    rows_[a].for_each([&](Index b) { ok = ok && rows_[b].subset_of(rows_[a]); });
    if (!ok) return false;
  }
  return true;
}

bool Rel::is_antisymmetric() const {
  for (Index a = 0; a < size(); ++a) {
    ElementSet mutual = rows_[a] & column(a);
    mutual.erase(a);
    if (!mutual.empty()) return false;
  }
  return true;
}

void require_same_carrier(const Rel& a, const Rel& b) {
  if (!same_carrier(a.carrier(), b.carrier())) {
    throw CarrierMismatch("relations live on different carriers");
  }
}

bool Rel::subset_of(const Rel& other) const {
  require_same_carrier(*this, other);
  for (Index a = 0; a < size(); ++a) {
    if (!rows_[a].subset_of(other.rows_[a])) return false;
  }
  return true;
}

bool operator==(const Rel& a, const Rel& b) {
  return same_carrier(a.carrier_, b.carrier_) && a.rows_ == b.rows_;
}

bool canonical_less(const Rel& a, const Rel& b) {
  for (Index i = 0; i < a.size(); ++i) {
    const ElementSet diff(a.row(i).bits() ^ b.row(i).bits());
    if (!diff.empty()) return b.row(i).contains(diff.first());
  }
  return false;
}

Rel close(const Rel& r, Closure kind) {
  std::vector<ElementSet> rows = r.rows();
  const std::size_t n = rows.size();
  for (Index a = 0; a < n; ++a) rows[a].insert(a);
  if (kind == Closure::kEquivalence) {
    for (Index a = 0; a < n; ++a) {
      rows[a].for_each([&](Index b) { rows[b].insert(a); });
    }
  }
  for (Index k = 0; k < n; ++k) {
    for (Index i = 0; i < n; ++i) {
      if (rows[i].contains(k)) rows[i] |= rows[k];
    }
  }
  return Rel(r.carrier(), std::move(rows));
}

Rel intersect(const Rel& r, const Rel& s) {
  require_same_carrier(r, s);
  std::vector<ElementSet> rows(r.size());
  for (Index a = 0; a < r.size(); ++a) rows[a] = r.row(a) & s.row(a);
  return Rel(r.carrier(), std::move(rows));
}

Rel unite(const Rel& r, const Rel& s) {
  require_same_carrier(r, s);
  std::vector<ElementSet> rows(r.size());
  for (Index a = 0; a < r.size(); ++a) rows[a] = r.row(a) | s.row(a);
  return Rel(r.carrier(), std::move(rows));
}

Rel invert(const Rel& r) {
  std::vector<ElementSet> rows(r.size());
  for (Index a = 0; a < r.size(); ++a) rows[a] = r.column(a);
  return Rel(r.carrier(), std::move(rows));
}

Rel compose(const Rel& r, const Rel& s) {
  require_same_carrier(r, s);
  std::vector<ElementSet> rows(r.size());
  for (Index a = 0; a < r.size(); ++a) {
    r.row(a).for_each([&](Index b) { rows[a] |= s.row(b); });
  }
  return Rel(r.carrier(), std::move(rows));
}

OrderedPartition::OrderedPartition(PosetPtr carrier, std::vector<ElementSet> blocks,
                                   std::vector<ElementSet> block_up)
    : carrier_(std::move(carrier)),
      blocks_(std::move(blocks)),
      block_up_(std::move(block_up)),
      block_index_(carrier_->size()) {
  const std::size_t k = blocks_.size();
  if (block_up_.size() != k) throw InvalidArgument("block order does not match block count");
  ElementSet covered;
  for (Index i = 0; i < k; ++i) {
    if (blocks_[i].empty()) throw InvalidArgument("partition block is empty");
    if (blocks_[i].intersects(covered)) throw InvalidArgument("partition blocks overlap");
    covered |= blocks_[i];
    blocks_[i].for_each([&](Index a) { block_index_[a] = i; });
  }
  if (covered != carrier_->all()) {
    throw InvalidArgument("partition blocks do not cover the carrier");
  }
  const ElementSet block_universe = ElementSet::full(k);
  for (Index i = 0; i < k; ++i) {
    if (!block_up_[i].subset_of(block_universe)) {
      throw InvalidArgument("block order mentions unknown block");
    }
    if (!block_up_[i].contains(i)) throw InvalidArgument("block order is not reflexive");
    block_up_[i].for_each([&](Index j) {
      if (!block_up_[j].subset_of(block_up_[i])) {
        throw InvalidArgument("block order is not transitive");
      }
      if (j != i && block_up_[j].contains(i)) {
        throw InvalidArgument("block order is not antisymmetric");
      }
    });
  }
}

bool operator==(const OrderedPartition& a, const OrderedPartition& b) {
  return same_carrier(a.carrier_, b.carrier_) && a.blocks_ == b.blocks_ &&
         a.block_up_ == b.block_up_;
}

OrderedPartition to_ordered_partition(const Rel& q) {
  if (!q.is_preorder()) throw InvalidArgument("relation is not a preorder");
  const std::size_t n = q.size();
  std::vector<ElementSet> blocks;
  std::vector<Index> block_of(n);
  ElementSet assigned;
  for (Index a = 0; a < n; ++a) {
    if (assigned.contains(a)) continue;
    const ElementSet cls = q.row(a) & q.column(a);
    cls.for_each([&](Index x) { block_of[x] = blocks.size(); });
    blocks.push_back(cls);
    assigned |= cls;
  }
  std::vector<ElementSet> block_up(blocks.size());
  for (Index i = 0; i < blocks.size(); ++i) {
    q.row(blocks[i].first()).for_each([&](Index b) { block_up[i].insert(block_of[b]); });
  }
  return OrderedPartition(q.carrier(), std::move(blocks), std::move(block_up));
}

Rel from_ordered_partition(const OrderedPartition& op) {
  const std::size_t n = op.carrier()->size();
  std::vector<ElementSet> rows(n);
  for (Index a = 0; a < n; ++a) {
    op.block_up_sets()[op.block_of(a)].for_each([&](Index j) { rows[a] |= op.block(j); });
  }
  return Rel(op.carrier(), std::move(rows));
}

PosetPtr block_poset(const OrderedPartition& op) {
  std::vector<std::string> names;
  for (ElementSet b : op.blocks()) {
    std::string s = "[";
    bool first = true;
    b.for_each([&](Index a) {
      if (!first) s += ",";
      s += op.carrier()->name(a);
      first = false;
    });
    names.push_back(s + "]");
  }
  return Poset::from_up_sets(std::move(names), op.block_up_sets());
}

}  // namespace loci
