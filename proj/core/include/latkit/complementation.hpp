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

#ifndef LATKIT_COMPLEMENTATION_HPP
#define LATKIT_COMPLEMENTATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <latkit/lattice.hpp>
#include <latkit/report.hpp>

namespace latkit {

/// a+ : every x with a v x = 1 and a ^ x = 0. Empty only in lattices that
/// are not complemented.
ElementSet complements(const BoundedLattice &L, ElementId a);

/// A+ : the common complements of all members of A. plus(∅) = L and
/// plus(L) = ∅.
ElementSet plus(const BoundedLattice &L, ElementSet A);

/// Precomputed a+ for every element; plus() without recomputing joins and
/// meets. Keeps its own copy of the data, so it may outlive L.
class ComplementTable {
public:
  explicit ComplementTable(const BoundedLattice &L);

  ElementSet of(ElementId a) const { return complements_[a.index()]; }
  ElementSet plus(ElementSet A) const;
  ElementSet double_plus(ElementSet A) const { return plus(plus(A)); }

private:
  ElementSet universe_;
  std::vector<ElementSet> complements_;
};

inline ElementSet double_plus(const BoundedLattice &L, ElementSet A) {
  return plus(L, plus(L, A));
}
inline ElementSet double_plus(const BoundedLattice &L, ElementId a) {
  return double_plus(L, ElementSet::of(a));
}

inline bool is_closed(const BoundedLattice &L, ElementSet A) {
  return double_plus(L, A) == A;
}

/// The complete ortholattice of closed subsets, ordered by inclusion with
/// join (S u T)++, meet S n T and orthocomplement S+.
struct ClosureReport {
  /// Closed sets in set_order_less order; front() is ∅ and back() is L.
  std::vector<ElementSet> closedSets;
  /// k x k tables of indices into closedSets.
  std::vector<std::size_t> joinTable;
  std::vector<std::size_t> meetTable;
  std::vector<std::size_t> orthocomplement;
  /// Ortholattice axioms evaluated on the tables.
  PropertyReport axioms;

  std::size_t size() const { return closedSets.size(); }
  std::size_t join(std::size_t i, std::size_t j) const {
    return joinTable[i * size() + j];
  }
  std::size_t meet(std::size_t i, std::size_t j) const {
    return meetTable[i * size() + j];
  }
  std::optional<std::size_t> index_of(ElementSet S) const;
};

/// Enumerates {A+ : A ⊆ L} as the intersection closure of {a+ : a in L}
/// together with L, without visiting all 2^n subsets.
ClosureReport closure_lattice(const BoundedLattice &L);

/// First a (in id order) with a++ != {a}.
std::optional<ElementId> dblplus_identity_witness(const BoundedLattice &L);
inline bool satisfies_dblplus_identity(const BoundedLattice &L) {
  return !dblplus_identity_witness(L).has_value();
}

/// Whether a -> a++ is injective.
bool dblplus_injective(const BoundedLattice &L);

/// Some b in a++ with b++ = {b}, found by descending through
/// a++ ⊋ a1++ ⊋ a2++ ⊋ ... with each a(k+1) taken from ak++ \ {ak}. If the
/// chain stalls (possible only when a -> a++ is not injective) the members of
/// a++ are scanned directly, so the result is absent only if no such b
/// exists.
std::optional<ElementId> find_closed_element_in_dblplus(const BoundedLattice &L,
                                                        ElementId a);

struct SubsetSampling {
  /// Lattices up to this size are checked on every pair of subsets.
  std::size_t exhaustiveMaxSize = 6;
  /// Pairs drawn uniformly for larger lattices.
  std::size_t randomPairs = 10000;
  std::uint64_t seed = 20260101;
};

/// The Galois-connection laws of + on pairs of subsets, plus A+ n A++ = ∅.
PropertyReport check_galois_laws(const BoundedLattice &L,
                                 const SubsetSampling &sampling = {});

/// Basic properties of +: a in a++ and a+++ = a+; every a+ an antichain iff
/// no pentagon through the bounds; every a+ convex; a non-injective
/// a -> a++ rules out a++ = a. Asserted on complemented lattices.
PropertyReport check_plus_basics(const BoundedLattice &L);

/// In complemented modular lattices every a+, every A+ (A non-empty) and
/// every a++ is an antichain.
PropertyReport check_modular_antichains(const BoundedLattice &L);

/// For finite complemented lattices with injective a -> a++: whenever
/// a++ != {a} some b in a++ has b++ = {b}.
PropertyReport check_closed_element_exists(const BoundedLattice &L);

/// The three order-reversal statements
///   (i)   x+ v y+ <=1 (x ^ y)+,
///   (ii)  x <= y implies y+ <=1 x+,
///   (iii) (x v y)+ <=1 x+ ^ y+
/// are recorded individually (unasserted); the implications (i) => (ii) and
/// (ii) <=> (iii) are asserted on complemented lattices.
PropertyReport check_order_reversal_props(const BoundedLattice &L);

/// x++ = x for all x, against: for every x and y in x++ there is z in y+
/// with (x v y) ^ z = 0 or (x ^ y) v z = 1. The equivalence is asserted on
/// complemented modular lattices.
PropertyReport check_dblplus_characterization(const BoundedLattice &L);

} // namespace latkit

#endif
