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

#include <latkit/complementation.hpp>

#include <algorithm>
#include <map>
#include <random>

#include <latkit/set_algebra.hpp>

namespace latkit {

ElementSet complements(const BoundedLattice &L, ElementId a) {
  ElementSet out;
  for (ElementId x : L.elements()) {
    if (L.join(a, x) == L.top() && L.meet(a, x) == L.bottom()) {
      out.insert(x);
    }
  }
  return out;
}

ElementSet plus(const BoundedLattice &L, ElementSet A) {
  ElementSet out = L.universe();
  for (ElementId a : A) {
    out &= complements(L, a);
  }
  return out;
}

ComplementTable::ComplementTable(const BoundedLattice &L)
    : universe_(L.universe()) {
  complements_.reserve(L.size());
  for (ElementId a : L.elements()) {
    complements_.push_back(complements(L, a));
  }
}

ElementSet ComplementTable::plus(ElementSet A) const {
  ElementSet out = universe_;
  for (ElementId a : A) {
    out &= complements_[a.index()];
  }
  return out;
}

std::optional<std::size_t> ClosureReport::index_of(ElementSet S) const {
  auto it = std::lower_bound(closedSets.begin(), closedSets.end(), S,
                             set_order_less);
  if (it == closedSets.end() || *it != S) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - closedSets.begin());
}

ClosureReport closure_lattice(const BoundedLattice &L) {
  const ComplementTable comp(L);
  std::vector<ElementSet> family{L.universe()};
  for (ElementId a : L.elements()) {
    const std::size_t known = family.size();
    for (std::size_t i = 0; i < known; ++i) {
      const ElementSet cut = family[i] & comp.of(a);
      if (std::find(family.begin(), family.end(), cut) == family.end()) {
        family.push_back(cut);
      }
    }
  }
  std::sort(family.begin(), family.end(), set_order_less);

  ClosureReport r;
  r.closedSets = std::move(family);
  const std::size_t k = r.size();
  r.joinTable.assign(k * k, 0);
  r.meetTable.assign(k * k, 0);
  r.orthocomplement.assign(k, 0);
  r.axioms = PropertyReport("closure lattice");

  std::optional<std::vector<ElementSet>> notClosed;
  std::optional<std::vector<ElementSet>> notInFamily;
  auto lookup = [&](ElementSet S) -> std::size_t {
    if (auto idx = r.index_of(S)) {
      return *idx;
    }
    if (!notInFamily) {
      notInFamily = std::vector<ElementSet>{S};
    }
    return 0;
  };
  for (std::size_t i = 0; i < k; ++i) {
    const ElementSet S = r.closedSets[i];
    if (comp.double_plus(S) != S && !notClosed) {
      notClosed = std::vector<ElementSet>{S};
    }
    r.orthocomplement[i] = lookup(comp.plus(S));
    for (std::size_t j = 0; j < k; ++j) {
      const ElementSet T = r.closedSets[j];
      r.joinTable[i * k + j] = lookup(comp.double_plus(S | T));
      r.meetTable[i * k + j] = lookup(S & T);
    }
  }
  r.axioms.add(make_check("closure.sets_closed", true, notClosed));
  r.axioms.add(make_check("closure.operations_total", true, notInFamily));

  // Join and meet are the least upper and greatest lower bounds under ⊆.
  std::optional<std::vector<ElementSet>> badJoin;
  std::optional<std::vector<ElementSet>> badMeet;
  for (std::size_t i = 0; i < k && !(badJoin && badMeet); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const ElementSet S = r.closedSets[i];
      const ElementSet T = r.closedSets[j];
      const ElementSet J = r.closedSets[r.join(i, j)];
      const ElementSet M = r.closedSets[r.meet(i, j)];
      bool joinOk = S.subset_of(J) && T.subset_of(J);
      bool meetOk = M.subset_of(S) && M.subset_of(T);
      for (const ElementSet U : r.closedSets) {
        if (S.subset_of(U) && T.subset_of(U) && !J.subset_of(U)) {
          joinOk = false;
        }
        if (U.subset_of(S) && U.subset_of(T) && !U.subset_of(M)) {
          meetOk = false;
        }
      }
      if (!joinOk && !badJoin) {
        badJoin = std::vector<ElementSet>{S, T};
      }
      if (!meetOk && !badMeet) {
        badMeet = std::vector<ElementSet>{S, T};
      }
    }
  }
  r.axioms.add(make_check("closure.join_is_lub", true, badJoin));
  r.axioms.add(make_check("closure.meet_is_glb", true, badMeet));

  std::optional<std::vector<ElementSet>> badOrtho;
  const std::size_t topIdx = k - 1;
  for (std::size_t i = 0; i < k && !badOrtho; ++i) {
    const ElementSet S = r.closedSets[i];
    const std::size_t o = r.orthocomplement[i];
    bool ok = r.orthocomplement[o] == i && !S.intersects(r.closedSets[o]) &&
              r.join(i, o) == topIdx && r.closedSets[r.meet(i, o)].empty();
    for (std::size_t j = 0; j < k && ok; ++j) {
      if (S.subset_of(r.closedSets[j]) &&
          !r.closedSets[r.orthocomplement[j]].subset_of(r.closedSets[o])) {
        ok = false;
      }
    }
    if (!ok) {
      badOrtho = std::vector<ElementSet>{S};
    }
  }
  r.axioms.add(make_check("closure.orthocomplement", true, badOrtho,
                          "antitone involution with S ^ S+ = ∅, S v S+ = L"));
  const bool bounds = k >= 1 && r.closedSets.front().empty() &&
                      r.closedSets.back() == L.universe();
  r.axioms.add(make_check(
      "closure.bounds", true,
      bounds ? std::nullopt : std::optional(std::vector<ElementSet>{})));
  return r;
}

std::optional<ElementId> dblplus_identity_witness(const BoundedLattice &L) {
  const ComplementTable comp(L);
  for (ElementId a : L.elements()) {
    if (comp.double_plus(ElementSet::of(a)) != ElementSet::of(a)) {
      return a;
    }
  }
  return std::nullopt;
}

bool dblplus_injective(const BoundedLattice &L) {
  const ComplementTable comp(L);
  std::vector<std::uint64_t> seen;
  for (ElementId a : L.elements()) {
    seen.push_back(comp.double_plus(ElementSet::of(a)).bits());
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::optional<ElementId> find_closed_element_in_dblplus(const BoundedLattice &L,
                                                        ElementId a) {
  const ComplementTable comp(L);
  auto dp = [&](ElementId x) { return comp.double_plus(ElementSet::of(x)); };

  ElementId current = a;
  ElementSet closure = dp(a);
  while (closure != ElementSet::of(current)) {
    const ElementSet rest = closure - ElementSet::of(current);
    if (rest.empty()) {
      break;
    }
    const ElementId next = rest.first();
    const ElementSet nextClosure = dp(next);
    // The chain must shrink strictly; otherwise fall back to a scan.
    if (!(nextClosure.subset_of(closure) && nextClosure != closure)) {
      break;
    }
    current = next;
    closure = nextClosure;
  }
  if (closure == ElementSet::of(current)) {
    return current;
  }
  for (ElementId b : dp(a)) {
    if (dp(b) == ElementSet::of(b)) {
      return b;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<ElementSet> witness(std::initializer_list<ElementSet> sets) {
  return std::vector<ElementSet>(sets);
}

std::vector<ElementSet> witness_ids(std::initializer_list<ElementId> ids) {
  std::vector<ElementSet> out;
  for (ElementId x : ids) {
    out.push_back(ElementSet::of(x));
  }
  return out;
}

} // namespace

PropertyReport check_galois_laws(const BoundedLattice &L,
                                 const SubsetSampling &sampling) {
  const ComplementTable comp(L);
  std::optional<std::vector<ElementSet>> extensive, antitone, triple, swap,
      disjoint;

  auto visit = [&](ElementSet A, ElementSet B) {
    const ElementSet Ap = comp.plus(A);
    const ElementSet App = comp.plus(Ap);
    const ElementSet Bp = comp.plus(B);
    if (!extensive && !A.subset_of(App)) {
      extensive = witness({A});
    }
    if (!antitone && A.subset_of(B) && !Bp.subset_of(Ap)) {
      antitone = witness({A, B});
    }
    if (!triple && comp.plus(App) != Ap) {
      triple = witness({A});
    }
    if (!swap && A.subset_of(Bp) != B.subset_of(Ap)) {
      swap = witness({A, B});
    }
    if (!disjoint && Ap.intersects(App)) {
      disjoint = witness({A});
    }
  };

  const std::size_t n = L.size();
  std::string note;
  if (n <= sampling.exhaustiveMaxSize) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = 0; b < count; ++b) {
        visit(ElementSet::from_bits(a), ElementSet::from_bits(b));
      }
    }
    note = "all subset pairs";
  } else {
    std::mt19937_64 rng(sampling.seed);
    const std::uint64_t mask = L.universe().bits();
    for (std::size_t i = 0; i < sampling.randomPairs; ++i) {
      const ElementSet A = ElementSet::from_bits(rng() & mask);
      const ElementSet B = ElementSet::from_bits(rng() & mask);
      visit(A, B);
      // Random pairs are rarely nested; also exercise B ⊇ A.
      visit(A, A | B);
    }
    note = std::to_string(sampling.randomPairs) + " random subset pairs";
  }

  PropertyReport r("galois laws");
  r.add(make_check("galois.extensive", true, extensive, note));
  r.add(make_check("galois.antitone", true, antitone, note));
  r.add(make_check("galois.triple_plus", true, triple, note));
  r.add(make_check("galois.swap", true, swap, note));
  r.add(make_check("galois.plus_disjoint_dblplus", true, disjoint, note));
  return r;
}

PropertyReport check_plus_basics(const BoundedLattice &L) {
  const ComplementTable comp(L);
  const bool complemented = is_complemented(L);
  PropertyReport r("plus basics");

  std::optional<std::vector<ElementSet>> selfIn;
  std::optional<std::vector<ElementSet>> notConvex;
  std::optional<ElementId> nonAntichain;
  for (ElementId a : L.elements()) {
    const ElementSet ap = comp.of(a);
    const ElementSet app = comp.plus(ap);
    if (!selfIn && (!app.contains(a) || comp.plus(app) != ap)) {
      selfIn = witness_ids({a});
    }
    if (!notConvex && !is_convex(L, ap)) {
      notConvex = witness_ids({a});
    }
    if (!nonAntichain && !is_antichain(L, ap)) {
      nonAntichain = a;
    }
  }
  r.add(make_check("plus.self_in_dblplus", complemented, selfIn));

  const auto n5 = find_n5_through_bounds(L);
  std::optional<std::vector<ElementSet>> biconditional;
  if (nonAntichain.has_value() != n5.has_value()) {
    if (nonAntichain) {
      biconditional = witness_ids({*nonAntichain});
    } else {
      biconditional = witness_ids({(*n5)[0], (*n5)[1], (*n5)[2], (*n5)[3],
                                   (*n5)[4]});
    }
  }
  Check bic = make_check("plus.antichain_iff_no_pentagon", complemented,
                         biconditional);
  bic.note = nonAntichain ? "some x+ is not an antichain"
                          : "every x+ is an antichain";
  r.add(std::move(bic));
  r.add(make_check("plus.convex", complemented, notConvex));

  std::optional<std::vector<ElementSet>> injectivity;
  if (!dblplus_injective(L) && satisfies_dblplus_identity(L)) {
    injectivity = std::vector<ElementSet>{};
  }
  r.add(make_check("plus.non_injective_breaks_identity", complemented,
                   injectivity));
  return r;
}

PropertyReport check_modular_antichains(const BoundedLattice &L) {
  const bool hypothesis = is_complemented(L) && is_modular(L);
  const ComplementTable comp(L);
  std::optional<std::vector<ElementSet>> single, setPlus, dbl;
  for (ElementId a : L.elements()) {
    if (!single && !is_antichain(L, comp.of(a))) {
      single = witness_ids({a});
    }
    if (!dbl && !is_antichain(L, comp.plus(comp.of(a)))) {
      dbl = witness_ids({a});
    }
  }
  // {A+ : A non-empty} is exactly the closed family without L, so scanning
  // the closed sets covers every non-empty A.
  for (ElementSet S : closure_lattice(L).closedSets) {
    if (S != L.universe() && !setPlus && !is_antichain(L, S)) {
      setPlus = witness({S});
    }
  }
  PropertyReport r("modular antichains");
  r.add(make_check("modular.antichain_plus", hypothesis, single));
  r.add(make_check("modular.antichain_set_plus", hypothesis, setPlus,
                   "via the closed-set family"));
  r.add(make_check("modular.antichain_dblplus", hypothesis, dbl));
  return r;
}

PropertyReport check_closed_element_exists(const BoundedLattice &L) {
  const bool hypothesis = is_complemented(L) && dblplus_injective(L);
  const ComplementTable comp(L);
  std::optional<std::vector<ElementSet>> missing;
  for (ElementId a : L.elements()) {
    if (comp.double_plus(ElementSet::of(a)) == ElementSet::of(a)) {
      continue;
    }
    if (!find_closed_element_in_dblplus(L, a)) {
      missing = witness_ids({a});
      break;
    }
  }
  PropertyReport r("closed element in a++");
  r.add(make_check("plus.closed_element_exists", hypothesis, missing));
  return r;
}

PropertyReport check_order_reversal_props(const BoundedLattice &L) {
  const ComplementTable comp(L);
  std::optional<std::vector<ElementSet>> s1, s2, s3;
  for (ElementId x : L.elements()) {
    for (ElementId y : L.elements()) {
      const ElementSet xp = comp.of(x);
      const ElementSet yp = comp.of(y);
      if (!s1 && !set_le1(L, set_join(L, xp, yp), comp.of(L.meet(x, y)))) {
        s1 = witness_ids({x, y});
      }
      if (!s2 && L.leq(x, y) && !set_le1(L, yp, xp)) {
        s2 = witness_ids({x, y});
      }
      if (!s3 && !set_le1(L, comp.of(L.join(x, y)), set_meet(L, xp, yp))) {
        s3 = witness_ids({x, y});
      }
    }
  }
  const bool complemented = is_complemented(L);
  PropertyReport r("order reversal");
  r.add(make_check("order_reversal.i", false, s1));
  r.add(make_check("order_reversal.ii", false, s2));
  r.add(make_check("order_reversal.iii", false, s3));

  std::optional<std::vector<ElementSet>> implication;
  if (!s1 && s2) {
    implication = *s2;
  }
  std::optional<std::vector<ElementSet>> equivalence;
  if (s2.has_value() != s3.has_value()) {
    equivalence = s2 ? *s2 : *s3;
  }
  r.add(make_check("order_reversal.i_implies_ii", complemented, implication));
  r.add(make_check("order_reversal.ii_iff_iii", complemented, equivalence));
  return r;
}

PropertyReport check_dblplus_characterization(const BoundedLattice &L) {
  const ComplementTable comp(L);
  const auto identityWitness = dblplus_identity_witness(L);

  std::optional<std::vector<ElementSet>> conditionFails;
  for (ElementId x : L.elements()) {
    for (ElementId y : comp.double_plus(ElementSet::of(x))) {
      bool found = false;
      for (ElementId z : comp.of(y)) {
        if (L.meet(L.join(x, y), z) == L.bottom() ||
            L.join(L.meet(x, y), z) == L.top()) {
          found = true;
          break;
        }
      }
      if (!found && !conditionFails) {
        conditionFails = witness_ids({x, y});
      }
    }
  }

  const bool hypothesis = is_complemented(L) && is_modular(L);
  PropertyReport r("x++ characterization");
  r.add(make_check("dblplus.identity", false,
                   identityWitness
                       ? std::optional(witness_ids({*identityWitness}))
                       : std::nullopt));
  r.add(make_check("dblplus.condition", false, conditionFails));
  std::optional<std::vector<ElementSet>> mismatch;
  if (identityWitness.has_value() != conditionFails.has_value()) {
    mismatch = identityWitness ? witness_ids({*identityWitness})
                               : *conditionFails;
  }
  r.add(make_check("dblplus.characterization", hypothesis, mismatch));
  return r;
}

} // namespace latkit
