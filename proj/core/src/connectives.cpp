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

#include <latkit/connectives.hpp>

#include <latkit/set_algebra.hpp>

namespace latkit {

ElementSet implies(const BoundedLattice &L, ElementId a, ElementId b) {
  return set_join(L, complements(L, a), ElementSet::of(L.meet(a, b)));
}

ElementSet implies_sets(const BoundedLattice &L, ElementSet A, ElementSet B) {
  return set_join(L, plus(L, A), set_meet(L, A, B));
}

ElementSet odot(const BoundedLattice &L, ElementId a, ElementId b) {
  return set_meet(L, ElementSet::of(b),
                  set_join(L, ElementSet::of(a), complements(L, b)));
}

ElementSet odot_sets(const BoundedLattice &L, ElementSet A, ElementSet B) {
  return set_meet(L, B, set_join(L, A, plus(L, B)));
}

ElementSet implies_union(const BoundedLattice &L, ElementId x, ElementSet B) {
  ElementSet out;
  for (ElementId y : B) {
    out |= implies(L, x, y);
  }
  return out;
}

std::string_view to_string(Connective op) {
  return op == Connective::Implies ? "implies" : "odot";
}

OpTable op_table(const BoundedLattice &L, Connective op) {
  const ComplementTable comp(L);
  std::vector<ElementSet> entries;
  entries.reserve(L.size() * L.size());
  for (ElementId x : L.elements()) {
    for (ElementId y : L.elements()) {
      if (op == Connective::Implies) {
        entries.push_back(set_join(L, comp.of(x), ElementSet::of(L.meet(x, y))));
      } else {
        entries.push_back(set_meet(L, ElementSet::of(y),
                                   set_join(L, ElementSet::of(x), comp.of(y))));
      }
    }
  }
  return OpTable(op, L.size(), std::move(entries));
}

bool is_minimal_in_dblplus(const BoundedLattice &L, ElementId a) {
  const ElementSet below = L.down_set(a) - ElementSet::of(a);
  return !below.intersects(double_plus(L, a));
}

namespace {

std::vector<ElementSet> ids(std::initializer_list<ElementId> xs) {
  std::vector<ElementSet> out;
  for (ElementId x : xs) {
    out.push_back(ElementSet::of(x));
  }
  return out;
}

// Both connectives tabulated once; the law checks below are triple scans.
struct Tables {
  explicit Tables(const BoundedLattice &L)
      : comp(L), imp(op_table(L, Connective::Implies)),
        od(op_table(L, Connective::Odot)) {}
  ComplementTable comp;
  OpTable imp;
  OpTable od;
};

} // namespace

PropertyReport check_adjointness(const BoundedLattice &L) {
  const Tables t(L);
  auto scan = [&]() -> std::optional<std::vector<ElementSet>> {
    for (ElementId a : L.elements()) {
      for (ElementId b : L.elements()) {
        const ElementSet ab = t.od.at(a, b);
        for (ElementId c : L.elements()) {
          const bool left = set_le(L, ab, ElementSet::of(c));
          const bool right = set_le(L, ElementSet::of(a), t.imp.at(b, c));
          if (left != right) {
            return ids({a, b, c});
          }
        }
      }
    }
    return std::nullopt;
  };
  PropertyReport r("adjointness");
  r.add(make_check("adjoint.residuation", is_complemented(L) && is_modular(L),
                   scan()));
  return r;
}

PropertyReport check_implies_meet_theorem(const BoundedLattice &L) {
  const Tables t(L);
  std::optional<std::vector<ElementSet>> first, second, converse;
  for (ElementId a : L.elements()) {
    for (ElementId b : L.elements()) {
      const ElementId ab = L.meet(a, b);
      for (ElementId c : L.elements()) {
        const ElementSet bc = t.imp.at(b, c);
        const bool aBelow = set_le1(L, ElementSet::of(a), bc);
        const bool meetBelow = L.leq(ab, c);
        if (!first && aBelow && !meetBelow) {
          first = ids({a, b, c});
        }
        if (!second && meetBelow != set_le1(L, ElementSet::of(ab), bc)) {
          second = ids({a, b, c});
        }
        if (!converse && meetBelow != aBelow) {
          converse = ids({a, b, c});
        }
      }
    }
  }
  const bool hypothesis = is_complemented(L) && is_modular(L);
  PropertyReport r("implication and meet");
  r.add(make_check("implies_meet.i", hypothesis, first));
  r.add(make_check("implies_meet.ii", hypothesis, second));
  r.add(make_check("implies_meet.mn_residuation", is_Mn_shape(L), converse,
                   "a ^ b <= c iff a <=1 b -> c"));
  return r;
}

PropertyReport check_implication_laws(const BoundedLattice &L) {
  const Tables t(L);
  const ElementId zero = L.bottom();
  const ElementId one = L.top();
  const ElementSet unit = ElementSet::of(one);
  std::optional<std::vector<ElementSet>> i1, i2, i3, i4, i5, i6, i7;
  std::optional<std::vector<ElementSet>> converseWitness;

  for (ElementId a : L.elements()) {
    const ElementSet ap = t.comp.of(a);
    const ElementSet app = t.comp.plus(ap);
    bool appMeetClosed = true;
    for (ElementId x : app) {
      for (ElementId y : app) {
        appMeetClosed = appMeetClosed && app.contains(L.meet(x, y));
      }
    }
    if (!i1 && (t.imp.at(a, zero) != ap ||
                t.imp.at(one, a) != ElementSet::of(a))) {
      i1 = ids({a});
    }
    for (ElementId b : L.elements()) {
      const ElementSet ab = t.imp.at(a, b);
      if (!i2 && L.leq(a, b) && ab != unit) {
        i2 = ids({a, b});
      }
      if (!converseWitness && ab == unit && !L.leq(a, b)) {
        converseWitness = ids({a, b});
      }
      if (!i3 && (ab == unit) != app.contains(L.meet(a, b))) {
        i3 = ids({a, b});
      }
      if (!i4 && ap.contains(b) && ab != ap) {
        i4 = ids({a, b});
      }
      if (!i7 && ab == unit &&
          app.subset_of(t.comp.double_plus(ElementSet::of(b))) &&
          t.imp.at(b, a) != unit) {
        i7 = ids({a, b});
      }
      for (ElementId c : L.elements()) {
        const ElementSet ac = t.imp.at(a, c);
        if (!i5 && L.leq(b, c) &&
            !(set_le1(L, ab, ac) && set_le2(L, ab, ac))) {
          i5 = ids({a, b, c});
        }
        if (!i6 && appMeetClosed && ab == unit && ac == unit &&
            t.imp.at(a, L.meet(b, c)) != unit) {
          i6 = ids({a, b, c});
        }
      }
    }
  }

  const bool complemented = is_complemented(L);
  PropertyReport r("implication laws");
  r.add(make_check("implies.i_bounds", complemented, i1,
                   "a -> 0 = a+ and 1 -> a = a"));
  r.add(make_check("implies.ii_order", complemented, i2,
                   "a <= b implies a -> b = 1"));
  r.add(make_check("implies.iii_unit", complemented, i3,
                   "a -> b = 1 iff a ^ b in a++"));
  r.add(make_check("implies.iv_complement", complemented, i4,
                   "b in a+ implies a -> b = a+"));
  r.add(make_check("implies.v_monotone", complemented, i5,
                   "b <= c implies a -> b <=1,2 a -> c"));
  r.add(make_check("implies.vi_meet", complemented, i6,
                   "a -> b = a -> c = 1, a++ meet-closed: a -> (b ^ c) = 1"));
  r.add(make_check("implies.vii_swap", complemented, i7,
                   "a++ ⊆ b++ and a -> b = 1 imply b -> a = 1"));

  // Pinned non-theorem: a -> b = 1 does not force a <= b.
  Check pinned;
  pinned.name = "implies.ii_converse_fails";
  pinned.asserted = false;
  if (converseWitness) {
    pinned.verdict = Verdict::Pass;
    pinned.witness = *converseWitness;
    pinned.note = "a -> b = 1 although a is not below b";
  } else {
    pinned.verdict = Verdict::Skipped;
    pinned.note = "converse holds in this lattice";
  }
  r.add(std::move(pinned));
  return r;
}

PropertyReport check_minimality_equivalence(const BoundedLattice &L) {
  const Tables t(L);
  const ElementSet unit = ElementSet::of(L.top());
  std::optional<std::vector<ElementSet>> bad;
  for (ElementId a : L.elements()) {
    bool unitExactlyAbove = true;
    for (ElementId x : L.elements()) {
      if ((t.imp.at(a, x) == unit) != L.leq(a, x)) {
        unitExactlyAbove = false;
        break;
      }
    }
    if (unitExactlyAbove != is_minimal_in_dblplus(L, a)) {
      bad = ids({a});
      break;
    }
  }
  PropertyReport r("minimality");
  r.add(make_check("implies.minimality_equivalence", is_complemented(L), bad));
  return r;
}

PropertyReport check_modus_laws(const BoundedLattice &L) {
  const Tables t(L);
  std::optional<std::vector<ElementSet>> ponens, tollens, member, iterate,
      collapse;
  for (ElementId a : L.elements()) {
    const ElementSet ap = t.comp.of(a);
    for (ElementId b : L.elements()) {
      const ElementSet ab = t.imp.at(a, b);
      const ElementSet bp = t.comp.of(b);
      if (!ponens && set_meet(L, ElementSet::of(a), ab) !=
                         ElementSet::of(L.meet(a, b))) {
        ponens = ids({a, b});
      }
      if (!tollens && set_le(L, ap, bp) && set_meet(L, ab, bp) != ap) {
        tollens = ids({a, b});
      }
      for (ElementId c : ab) {
        if (!member && t.imp.at(a, c) != ab) {
          member = ids({a, b, c});
        }
      }
      if (!iterate && implies_sets(L, ElementSet::of(a), ab) != ab) {
        iterate = ids({a, b});
      }
      if (!collapse && set_le(L, ap, ElementSet::of(b)) &&
          ab != ElementSet::of(b)) {
        collapse = ids({a, b});
      }
    }
  }
  const bool hypothesis = is_complemented(L) && is_modular(L);
  PropertyReport r("modus laws");
  r.add(make_check("modus.ponens", hypothesis, ponens,
                   "a ^ (a -> b) = a ^ b"));
  r.add(make_check("modus.tollens", hypothesis, tollens,
                   "a+ <= b+ implies (a -> b) ^ b+ = a+"));
  r.add(make_check("modus.member", hypothesis, member,
                   "c in a -> b implies a -> c = a -> b"));
  r.add(make_check("modus.iterate", hypothesis, iterate,
                   "a -> (a -> b) = a -> b"));
  r.add(make_check("modus.collapse", hypothesis, collapse,
                   "a+ <= b implies a -> b = b"));
  return r;
}

PropertyReport check_odot_laws(const BoundedLattice &L) {
  const Tables t(L);
  const ElementId zero = L.bottom();
  const ElementId one = L.top();
  std::optional<std::vector<ElementSet>> zeroLaw, oneLaw, bounds, mono, idem,
      orderLaw, stable;
  for (ElementId a : L.elements()) {
    const ElementSet A = ElementSet::of(a);
    if (!zeroLaw && (t.od.at(zero, a) != ElementSet::of(zero) ||
                     t.od.at(a, zero) != ElementSet::of(zero))) {
      zeroLaw = ids({a});
    }
    if (!oneLaw && (t.od.at(one, a) != A || t.od.at(a, one) != A)) {
      oneLaw = ids({a});
    }
    if (!idem && t.od.at(a, a) != A) {
      idem = ids({a});
    }
    for (ElementId b : L.elements()) {
      const ElementSet ab = t.od.at(a, b);
      const bool boundsOk =
          set_le(L, ElementSet::of(L.meet(a, b)), ab) &&
          set_le(L, ab, ElementSet::of(b)) &&
          (!L.leq(b, a) || ab == ElementSet::of(b));
      if (!bounds && !boundsOk) {
        bounds = ids({a, b});
      }
      if (!orderLaw && L.leq(a, b) != (ab == A)) {
        orderLaw = ids({a, b});
      }
      if (!stable && odot_sets(L, ab, ElementSet::of(b)) != ab) {
        stable = ids({a, b});
      }
      if (L.leq(a, b)) {
        for (ElementId c : L.elements()) {
          const ElementSet ac = t.od.at(a, c);
          const ElementSet bc = t.od.at(b, c);
          if (!mono && !(set_le1(L, ac, bc) && set_le2(L, ac, bc))) {
            mono = ids({a, b, c});
          }
        }
      }
    }
  }
  const bool complemented = is_complemented(L);
  const bool modular = complemented && is_modular(L);
  PropertyReport r("odot laws");
  r.add(make_check("odot.i_zero", complemented, zeroLaw,
                   "0 (.) a = a (.) 0 = 0"));
  r.add(make_check("odot.ii_one", complemented, oneLaw,
                   "1 (.) a = a (.) 1 = a"));
  r.add(make_check("odot.iii_bounds", complemented, bounds,
                   "a ^ b <= a (.) b <= b; b <= a implies a (.) b = b"));
  r.add(make_check("odot.iv_monotone", complemented, mono,
                   "a <= b implies a (.) c <=1,2 b (.) c"));
  r.add(make_check("odot.idempotent", complemented, idem, "x (.) x = x"));
  r.add(make_check("odot.v_order", modular, orderLaw,
                   "a <= b iff a (.) b = a"));
  r.add(make_check("odot.v_stable", modular, stable,
                   "(a (.) b) (.) b = a (.) b"));
  return r;
}

} // namespace latkit
