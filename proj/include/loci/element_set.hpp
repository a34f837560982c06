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

#ifndef LOCI_ELEMENT_SET_HPP
#define LOCI_ELEMENT_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace loci {

using Index = std::size_t;

/// Largest carrier the library handles. Every relation row and element set is
/// a single machine word.
inline constexpr std::size_t kMaxCarrier = 64;

/// A subset of a carrier, stored as a bitset over element indices.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet singleton(Index i) { return ElementSet(std::uint64_t{1} << i); }

  /// The first `n` indices.
  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Index i) const { return (bits_ >> i) & 1U; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  /// Smallest member; undefined on the empty set.
  constexpr Index first() const { return static_cast<Index>(std::countr_zero(bits_)); }

  constexpr void insert(Index i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(Index i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const ElementSet&) const = default;

  /// Members in increasing index order.
  std::vector<Index> members() const {
    std::vector<Index> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Index>(std::countr_zero(b)));
    }
    return out;
  }

  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      fn(static_cast<Index>(std::countr_zero(b)));
    }
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace loci

#endif  // LOCI_ELEMENT_SET_HPP
