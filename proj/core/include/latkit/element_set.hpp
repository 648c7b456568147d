// Copyright 2026 The latkit Authors
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

#ifndef LATKIT_ELEMENT_SET_HPP
#define LATKIT_ELEMENT_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace latkit {

/// Largest lattice the library accepts. ElementSet is a single 64-bit word.
inline constexpr std::size_t kMaxElements = 64;

/// Dense index of a lattice element. Only meaningful relative to the lattice
/// that produced it.
class ElementId {
public:
  constexpr ElementId() = default;
  constexpr explicit ElementId(std::size_t index)
      : index_(static_cast<std::uint32_t>(index)) {}

  constexpr std::size_t index() const { return index_; }

  friend constexpr auto operator<=>(ElementId, ElementId) = default;

private:
  std::uint32_t index_ = 0;
};

/// A subset of the elements of one lattice, stored as a bit vector.
class ElementSet {
public:
  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = ElementId;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr ElementId operator*() const {
      return ElementId(static_cast<std::size_t>(std::countr_zero(rest_)));
    }
    constexpr iterator &operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint64_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr ElementSet of(ElementId a) {
    return from_bits(std::uint64_t{1} << a.index());
  }
  /// {0, ..., n-1}.
  static constexpr ElementSet all(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(ElementId a) const {
    return (bits_ >> a.index()) & 1U;
  }
  constexpr void insert(ElementId a) { bits_ |= std::uint64_t{1} << a.index(); }
  constexpr void erase(ElementId a) { bits_ &= ~(std::uint64_t{1} << a.index()); }

  /// Smallest member; undefined on the empty set.
  constexpr ElementId first() const {
    return ElementId(static_cast<std::size_t>(std::countr_zero(bits_)));
  }

  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<ElementId> members() const { return {begin(), end()}; }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  constexpr ElementSet &operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet &operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;

private:
  std::uint64_t bits_ = 0;
};

/// Ordering used wherever families of sets are listed: by cardinality, then
/// by the sorted member-id sequence.
bool set_order_less(ElementSet a, ElementSet b);

} // namespace latkit

#endif
