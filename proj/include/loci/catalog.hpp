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

#ifndef LOCI_CATALOG_HPP
#define LOCI_CATALOG_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loci/poset.hpp"
#include "loci/relation.hpp"

namespace loci {

template <typename T>
using Named = std::vector<std::pair<std::string, T>>;

/// A named group of posets, functions and relations, in declaration order.
struct ExampleBundle {
  std::string name;
  Named<PosetPtr> posets;
  Named<FnTable> functions;
  Named<Rel> relations;
  std::string notes;

  /// Lookups throw InvalidArgument for unknown names.
  const PosetPtr& poset(std::string_view n) const;
  const FnTable& fn(std::string_view n) const;
  const Rel& rel(std::string_view n) const;
};

inline constexpr std::size_t kDefaultIntegerCarrier = 10;

/// Builds a registered bundle. `n` sizes integer-like carriers. Throws
/// InvalidArgument for unknown names, listing the registered ones.
ExampleBundle get_example(std::string_view name, std::size_t n = kDefaultIntegerCarrier);

/// Registered bundle names, sorted.
std::vector<std::string> list_examples();

}  // namespace loci

#endif  // LOCI_CATALOG_HPP
