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

#ifndef LATKIT_TESTS_ORACLE_HPP
#define LATKIT_TESTS_ORACLE_HPP

// Brute-force reference implementations. They read only the order relation
// of a lattice and evaluate every definition literally, so they share no
// code path with the library algorithms they are compared against.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include <latkit/lattice.hpp>
#include <latkit/relation.hpp>

namespace oracle {

using latkit::BoundedLattice;
using latkit::ElementId;
using latkit::ElementSet;

ElementId glb(const BoundedLattice &L, ElementId a, ElementId b);
ElementId lub(const BoundedLattice &L, ElementId a, ElementId b);

ElementSet complements(const BoundedLattice &L, ElementId a);
ElementSet plus(const BoundedLattice &L, ElementSet A);
ElementSet join_sets(const BoundedLattice &L, ElementSet A, ElementSet B);
ElementSet meet_sets(const BoundedLattice &L, ElementSet A, ElementSet B);
ElementSet implies(const BoundedLattice &L, ElementId a, ElementId b);
ElementSet odot(const BoundedLattice &L, ElementId a, ElementId b);

/// {A+ : A ⊆ L} over all 2^n subsets, sorted by set_order_less.
std::vector<ElementSet> closed_sets(const BoundedLattice &L);

bool is_deductive_system(const BoundedLattice &L, ElementSet D);
/// Every subset of L tested, sorted by set_order_less.
std::vector<ElementSet> deductive_systems(const BoundedLattice &L);

/// Block label per element for every set partition of n elements.
std::vector<std::vector<std::size_t>> all_partitions(std::size_t n);
bool is_meet_congruence(const BoundedLattice &L,
                        const std::vector<std::size_t> &labels);
/// Unpruned scan over all partitions, each as the sorted list of its classes.
std::set<std::vector<std::uint64_t>> meet_congruences(const BoundedLattice &L);
std::vector<std::uint64_t> classes_key(const latkit::Relation &R);

/// Order matrices of all lattices on n labelled elements, each reduced to its
/// lexicographically smallest relabelling. n <= 5.
std::set<std::vector<std::uint8_t>> lattice_classes(std::size_t n);

/// The same lattice with element i renamed to perm[i].
BoundedLattice relabel(const BoundedLattice &L,
                       const std::vector<std::size_t> &perm);

ElementSet set_of(const BoundedLattice &L,
                  std::initializer_list<const char *> labels);
ElementId id(const BoundedLattice &L, const char *label);

} // namespace oracle

#endif
