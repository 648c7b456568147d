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

#ifndef LATKIT_CANONICAL_HPP
#define LATKIT_CANONICAL_HPP

#include <cstdint>
#include <vector>

#include <latkit/lattice.hpp>

namespace latkit {

/// Isomorphism-invariant encoding of a lattice's order.
///
/// Elements are grouped by a vector of order invariants (height, depth,
/// up/down-set sizes, cover degrees). Among all orderings that respect the
/// grouping, the one whose order matrix encodes smallest is chosen by
/// branch-and-bound. Two lattices are isomorphic iff their forms are equal.
struct CanonicalForm {
  std::vector<std::uint64_t> invariants;
  std::vector<std::uint64_t> code;
  /// canonical position -> element of the source lattice
  std::vector<ElementId> labeling;

  friend bool operator==(const CanonicalForm &a, const CanonicalForm &b) {
    return a.invariants == b.invariants && a.code == b.code;
  }
  friend bool operator<(const CanonicalForm &a, const CanonicalForm &b) {
    if (a.invariants != b.invariants) {
      return a.invariants < b.invariants;
    }
    return a.code < b.code;
  }
};

CanonicalForm canonical_form(const BoundedLattice &L);

bool isomorphic(const BoundedLattice &a, const BoundedLattice &b);

} // namespace latkit

#endif
