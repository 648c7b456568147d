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

#ifndef LATKIT_LATTICE_HPP
#define LATKIT_LATTICE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <latkit/element_set.hpp>

namespace latkit {

struct Cover {
  std::string lower;
  std::string upper;
};

/// A finite bounded lattice with 0 != 1.
///
/// The order, meet and join are fully tabulated at construction; all queries
/// are table lookups. Instances are immutable and may be shared freely across
/// threads.
class BoundedLattice {
public:
  /// Builds the lattice whose order is the reflexive-transitive closure of
  /// the given cover pairs (indices into labels).
  ///
  /// Throws Error with CycleDetected, NoBounds, NotALattice or
  /// TrivialLattice, checked in that order. NotALattice names the first pair
  /// (row-major by id) lacking a glb or lub.
  static BoundedLattice
  from_covers(std::vector<std::string> labels,
              const std::vector<std::pair<std::size_t, std::size_t>> &covers);

  /// Builds from a full order matrix: upsets[a] holds every b with a <= b.
  /// The relation must already be a partial order.
  static BoundedLattice from_order(std::vector<std::string> labels,
                                   std::vector<ElementSet> upsets);

  std::size_t size() const { return labels_.size(); }
  const std::string &label(ElementId a) const { return labels_[a.index()]; }
  const std::vector<std::string> &labels() const { return labels_; }
  std::optional<ElementId> find(std::string_view label) const;

  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }

  bool leq(ElementId a, ElementId b) const {
    return upsets_[a.index()].contains(b);
  }
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  bool comparable(ElementId a, ElementId b) const {
    return leq(a, b) || leq(b, a);
  }
  ElementId meet(ElementId a, ElementId b) const {
    return meet_[a.index() * size() + b.index()];
  }
  ElementId join(ElementId a, ElementId b) const {
    return join_[a.index() * size() + b.index()];
  }

  /// {b : a <= b}
  ElementSet up_set(ElementId a) const { return upsets_[a.index()]; }
  /// {b : b <= a}
  ElementSet down_set(ElementId a) const { return downsets_[a.index()]; }

  ElementSet universe() const { return ElementSet::all(size()); }

  auto elements() const {
    return std::views::iota(std::size_t{0}, size()) |
           std::views::transform([](std::size_t i) { return ElementId(i); });
  }

  /// Hasse diagram edges (lower, upper) in row-major id order.
  std::vector<std::pair<ElementId, ElementId>> covers() const;

  /// Length of the longest chain from bottom to a.
  std::size_t height(ElementId a) const { return heights_[a.index()]; }

private:
  BoundedLattice() = default;

  std::vector<std::string> labels_;
  std::vector<ElementSet> upsets_;
  std::vector<ElementSet> downsets_;
  std::vector<ElementId> meet_;
  std::vector<ElementId> join_;
  std::vector<std::size_t> heights_;
  ElementId bottom_;
  ElementId top_;
};

/// Label-based construction used by the text format and the CLI.
BoundedLattice build_from_covers(std::vector<std::string> labels,
                                 const std::vector<Cover> &covers);

bool is_modular(const BoundedLattice &L);
bool is_distributive(const BoundedLattice &L);
bool is_complemented(const BoundedLattice &L);

/// True for the lattices M_n (n >= 2): every element other than the bounds
/// is an atom and a coatom.
bool is_Mn_shape(const BoundedLattice &L);

bool is_antichain(const BoundedLattice &L, ElementSet S);
bool is_convex(const BoundedLattice &L, ElementSet S);

/// (0, e, f, g, 1) with 0 < e < f < 1, 0 < g < 1 and g a common complement
/// of e and f, i.e. a pentagon through the bounds. First in id order of
/// (e, f, g).
std::optional<std::array<ElementId, 5>>
find_n5_through_bounds(const BoundedLattice &L);

} // namespace latkit

#endif
