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

#ifndef LATKIT_DEDUCTION_HPP
#define LATKIT_DEDUCTION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <latkit/lattice.hpp>
#include <latkit/relation.hpp>
#include <latkit/report.hpp>

namespace latkit {

/// Limits on the brute-force enumerations of this module. Inputs above a cap
/// raise SizeCapExceeded from the enumerators; the checks report them as
/// skipped instead.
struct DeductionCaps {
  /// Largest lattice whose deductive systems are enumerated.
  std::size_t maxSubsetElements = 20;
  /// Largest lattice whose meet-congruences are enumerated.
  std::size_t maxPartitionElements = 10;
  /// Up to this size every equivalence is tried when checking relations with
  /// the substitution property for ->; above it, equivalences generated from
  /// single collapsed pairs (and joins of two of them) are used.
  std::size_t exhaustiveEquivalenceMax = 6;
};

/// 1 in D, and a in D with a -> b ⊆ D forces b in D.
bool is_deductive_system(const BoundedLattice &L, ElementSet D);

/// The deductive systems of L ordered by inclusion. Systems are listed by
/// set_order_less, so front() is {1} and back() is L.
struct DSLattice {
  std::vector<ElementSet> systems;
  /// k x k tables of indices into systems.
  std::vector<std::size_t> meetTable;
  std::vector<std::size_t> joinTable;

  std::size_t size() const { return systems.size(); }
  bool leq(std::size_t i, std::size_t j) const {
    return systems[i].subset_of(systems[j]);
  }
  std::size_t meet(std::size_t i, std::size_t j) const {
    return meetTable[i * size() + j];
  }
  std::size_t join(std::size_t i, std::size_t j) const {
    return joinTable[i * size() + j];
  }

  /// The containment order as a lattice in its own right, elements labelled
  /// D0, D1, ... in list order.
  BoundedLattice as_lattice() const;
};

/// Every deductive system of L. Candidates are restricted to order filters
/// containing 1, which every deductive system is.
DSLattice all_deductive_systems(const BoundedLattice &L,
                                std::size_t maxElements = 20);

/// For L = M_n: Ded(L) has 2^n members and A -> (A = all atoms ? L : A u {1})
/// is an order isomorphism from the subsets of the atoms. The containment
/// order is additionally compared with the Boolean lattice 2^n by canonical
/// form. False for lattices not shaped like M_n.
bool ds_lattice_is_boolean_2n(const BoundedLattice &L);

bool is_order_filter(const BoundedLattice &L, ElementSet F);
bool is_filter(const BoundedLattice &L, ElementSet F);

/// {(x, y) : x -> y ⊆ D and y -> x ⊆ D}
Relation theta(const BoundedLattice &L, ElementSet D);

/// An equivalence with (a, b) in Phi implying (a ^ c, b ^ c) in Phi.
bool is_meet_congruence(const BoundedLattice &L, const Relation &Phi);

/// All meet-congruences, by backtracking over set partitions (restricted
/// growth strings) and pruning partial assignments that already violate
/// meet-compatibility.
std::vector<Relation> all_meet_congruences(const BoundedLattice &L,
                                           std::size_t maxElements = 10);

/// The class of 1.
ElementSet kernel(const BoundedLattice &L, const Relation &Phi);

/// (a, b) in Phi implies a+ x b+ ⊆ Phi.
bool has_sp_plus(const BoundedLattice &L, const Relation &Phi);
/// (a, b) in Phi implies (a -> c) x (b -> c) ⊆ Phi for every c.
bool has_sp_implies(const BoundedLattice &L, const Relation &Phi);

/// A deductive system D that also satisfies, for all a, b, c, d:
///  - a -> b ⊆ D and x -> (c -> d) ⊆ D for all x in a -> b imply c -> d ⊆ D;
///  - a -> b, b -> a ⊆ D imply x -> (b -> c) ⊆ D for all x in a -> c;
/// where x -> S is the union of x -> y over y in S.
bool is_compatible_ds(const BoundedLattice &L, ElementSet D);

std::optional<Relation>
find_meet_congruence_with_kernel(const BoundedLattice &L, ElementSet D,
                                 std::size_t maxElements = 10);

/// Smallest equivalence containing R that has the substitution property for
/// ->.
Relation sp_implies_closure(const BoundedLattice &L, const Relation &R);

/// Deductive systems versus filters: every deductive system is an order
/// filter; one closed under internal -> is a filter; on modular lattices
/// every filter is a deductive system.
PropertyReport check_filter_lemma(const BoundedLattice &L,
                                  const DeductionCaps &caps = {});

/// For every meet-congruence Phi of a complemented modular lattice: the
/// kernel of Phi is a deductive system and theta(kernel) ⊆ Phi.
PropertyReport check_congruence_kernels(const BoundedLattice &L,
                                        const DeductionCaps &caps = {});

/// For equivalences Phi with the substitution property for ->: Phi has the
/// substitution property for +, its kernel is a deductive system and
/// Phi ⊆ theta(kernel).
PropertyReport check_sp_equivalences(const BoundedLattice &L,
                                     const DeductionCaps &caps = {});

/// For every compatible deductive system D: theta(D) is an equivalence with
/// the substitution property for -> whose kernel is D.
PropertyReport check_compatible_systems(const BoundedLattice &L,
                                        const DeductionCaps &caps = {});

/// Structural facts about the families: deductive systems and compatible
/// deductive systems are closed under intersection; theta(D) is reflexive
/// and symmetric. Transitivity of theta(D) for incompatible systems is
/// recorded without being asserted.
PropertyReport check_system_families(const BoundedLattice &L,
                                     const DeductionCaps &caps = {});

} // namespace latkit

#endif
