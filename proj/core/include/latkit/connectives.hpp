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

#ifndef LATKIT_CONNECTIVES_HPP
#define LATKIT_CONNECTIVES_HPP

#include <string_view>
#include <vector>

#include <latkit/complementation.hpp>
#include <latkit/lattice.hpp>
#include <latkit/report.hpp>

namespace latkit {

// Set-valued implication and conjunction built from +:
//
//   a -> b = a+ v (a ^ b)        A -> B = A+ v (A ^ B)
//   a (.) b = b ^ (a v b+)       A (.) B = B ^ (A v B+)
//
// Results are always sets, singletons included; compare against an element
// with is_singleton_of.

ElementSet implies(const BoundedLattice &L, ElementId a, ElementId b);
ElementSet implies_sets(const BoundedLattice &L, ElementSet A, ElementSet B);
ElementSet odot(const BoundedLattice &L, ElementId a, ElementId b);
ElementSet odot_sets(const BoundedLattice &L, ElementSet A, ElementSet B);

/// x -> B read as the union of x -> y over y in B.
ElementSet implies_union(const BoundedLattice &L, ElementId x, ElementSet B);

enum class Connective { Implies, Odot };

std::string_view to_string(Connective op);

/// Full operation table; entry (row, column) holds row op column.
class OpTable {
public:
  OpTable(Connective op, std::size_t n, std::vector<ElementSet> entries)
      : op_(op), n_(n), entries_(std::move(entries)) {}

  Connective op() const { return op_; }
  std::size_t size() const { return n_; }
  ElementSet at(ElementId row, ElementId col) const {
    return entries_[row.index() * n_ + col.index()];
  }

private:
  Connective op_;
  std::size_t n_;
  std::vector<ElementSet> entries_;
};

OpTable op_table(const BoundedLattice &L, Connective op);

/// No y < a lies in a++.
bool is_minimal_in_dblplus(const BoundedLattice &L, ElementId a);

/// a (.) b <= c  iff  a <= b -> c, for all triples. Asserted on complemented
/// modular lattices.
PropertyReport check_adjointness(const BoundedLattice &L);

/// (i) a <=1 b -> c implies a ^ b <= c;
/// (ii) a ^ b <= c iff a ^ b <=1 b -> c.
/// On M_n also the converse of (i): a ^ b <= c iff a <=1 b -> c.
PropertyReport check_implies_meet_theorem(const BoundedLattice &L);

/// The seven laws of -> on complemented lattices, plus the pinned converse
/// failure of "a <= b implies a -> b = 1" when a witness exists.
PropertyReport check_implication_laws(const BoundedLattice &L);

/// a is minimal in a++ iff (a -> x = 1 exactly when a <= x), for every a.
PropertyReport check_minimality_equivalence(const BoundedLattice &L);

/// Modus Ponens, Modus Tollens and the absorption laws of -> on
/// complemented modular lattices.
PropertyReport check_modus_laws(const BoundedLattice &L);

/// Bounds, monotonicity and idempotence of (.); the modular items are
/// asserted only on modular lattices.
PropertyReport check_odot_laws(const BoundedLattice &L);

} // namespace latkit

#endif
