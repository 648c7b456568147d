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

#ifndef LATKIT_RELATION_HPP
#define LATKIT_RELATION_HPP

#include <cstddef>
#include <vector>

#include <latkit/element_set.hpp>

namespace latkit {

/// A binary relation on the elements of one lattice, stored row-wise: row a
/// holds every b with (a, b) in the relation. No reflexivity, symmetry or
/// transitivity is assumed.
class Relation {
public:
  explicit Relation(std::size_t n) : rows_(n) {}

  static Relation identity(std::size_t n);
  static Relation full(std::size_t n);
  /// Equivalence whose classes are the given blocks (every element must be in
  /// exactly one block).
  static Relation from_partition(std::size_t n,
                                 const std::vector<ElementSet> &blocks);
  /// Equivalence with block[i] the class label of element i.
  static Relation from_labels(const std::vector<std::size_t> &block);

  std::size_t size() const { return rows_.size(); }
  bool contains(ElementId a, ElementId b) const {
    return rows_[a.index()].contains(b);
  }
  void insert(ElementId a, ElementId b) { rows_[a.index()].insert(b); }
  ElementSet row(ElementId a) const { return rows_[a.index()]; }
  void add_row(ElementId a, ElementSet to) { rows_[a.index()] |= to; }

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_equivalence() const {
    return is_reflexive() && is_symmetric() && is_transitive();
  }

  bool subset_of(const Relation &other) const;

  /// Smallest equivalence containing this relation.
  Relation equivalence_closure() const;

  /// Classes of an equivalence, ordered by smallest member.
  std::vector<ElementSet> classes() const;

  friend bool operator==(const Relation &, const Relation &) = default;

private:
  std::vector<ElementSet> rows_;
};

} // namespace latkit

#endif
