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

#ifndef LOCI_RENDER_HPP
#define LOCI_RENDER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "loci/loi.hpp"
#include "loci/poset.hpp"
#include "loci/relation.hpp"

namespace loci {

/// "{a b c}", members in declaration order.
std::string render_set(const Poset& a, ElementSet xs);

/// Preorders as ordered partitions: "{bot} <= {b c} <= {a}" for a chain of
/// blocks, "{a b} | {c}" for unordered blocks, otherwise the covering pairs
/// between blocks followed by any isolated blocks. Other relations as
/// "pairs: a <= b, ...".
std::string render_relation(const Rel& r);

/// "VIOLATION: a=<x> a'=<y> f(a)=<u> f(a')=<v>"
std::string render_violation(const Mapping& f, const Violation& v);

/// GraphViz digraph of the covering relation (every strict pair with
/// `full`), edges pointing upwards. Node lines follow declaration order and
/// edge lines are sorted, so output is byte-stable.
std::string emit_dot(std::string_view title, const Poset& p, bool full = false);
std::string emit_dot(std::string_view title, const OrderedPartition& op, bool full = false);

/// Hasse diagram of relations ordered by reverse inclusion, as in LoI and
/// LoCI. Nodes are labelled with render_relation.
std::string emit_lattice_dot(std::string_view title, const std::vector<Rel>& elements,
                             bool full = false);

}  // namespace loci

#endif  // LOCI_RENDER_HPP
