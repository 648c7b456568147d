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

#ifndef LATKIT_SET_ALGEBRA_HPP
#define LATKIT_SET_ALGEBRA_HPP

#include <latkit/lattice.hpp>

namespace latkit {

// Pointwise lattice operations on subsets and the three ways of comparing
// subsets. Empty arguments follow the literal quantifier readings:
//   set_le   is vacuously true if either side is empty,
//   set_le1  fails only for A non-empty and B empty,
//   set_le2  fails only for B non-empty and A empty.

/// {x v y : x in A, y in B}
ElementSet set_join(const BoundedLattice &L, ElementSet A, ElementSet B);
/// {x ^ y : x in A, y in B}
ElementSet set_meet(const BoundedLattice &L, ElementSet A, ElementSet B);

/// x <= y for all x in A and all y in B.
bool set_le(const BoundedLattice &L, ElementSet A, ElementSet B);
/// Every x in A lies below some y in B.
bool set_le1(const BoundedLattice &L, ElementSet A, ElementSet B);
/// Every y in B lies above some x in A.
bool set_le2(const BoundedLattice &L, ElementSet A, ElementSet B);

inline ElementSet singleton(ElementId a) { return ElementSet::of(a); }
inline bool is_singleton_of(ElementSet S, ElementId a) {
  return S == ElementSet::of(a);
}

} // namespace latkit

#endif
