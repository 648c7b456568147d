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

#include <latkit/deduction.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include <latkit/canonical.hpp>
#include <latkit/complementation.hpp>
#include <latkit/connectives.hpp>
#include <latkit/error.hpp>

namespace latkit {

namespace {

// -> tabulated once, plus x -> (c -> d) as a union for the compatibility
// conditions (filled on first use; n^3 sets).
class Context {
public:
  explicit Context(const BoundedLattice &L)
      : L_(L), comp_(L), imp_(op_table(L, Connective::Implies)) {}

  const BoundedLattice &lattice() const { return L_; }
  ElementSet arrow(ElementId a, ElementId b) const { return imp_.at(a, b); }
  ElementSet plus_of(ElementId a) const { return comp_.of(a); }
  const OpTable &table() const { return imp_; }

  ElementSet arrow_union(ElementId x, ElementSet B) const {
    ElementSet out;
    for (ElementId y : B) {
      out |= imp_.at(x, y);
    }
    return out;
  }

  // x -> (c -> d)
  ElementSet nested(ElementId x, ElementId c, ElementId d) {
    const std::size_t n = L_.size();
    if (nested_.empty()) {
      nested_.resize(n * n * n);
      for (ElementId y : L_.elements()) {
        for (ElementId p : L_.elements()) {
          for (ElementId q : L_.elements()) {
            nested_[(y.index() * n + p.index()) * n + q.index()] =
                arrow_union(y, imp_.at(p, q));
          }
        }
      }
    }
    return nested_[(x.index() * n + c.index()) * n + d.index()];
  }

private:
  const BoundedLattice &L_;
  ComplementTable comp_;
  OpTable imp_;
  std::vector<ElementSet> nested_;
};

bool is_ds(const Context &ctx, ElementSet D) {
  const BoundedLattice &L = ctx.lattice();
  if (!D.contains(L.top())) {
    return false;
  }
  const ElementSet outside = L.universe() - D;
  for (ElementId a : D) {
    for (ElementId b : outside) {
      if (ctx.arrow(a, b).subset_of(D)) {
        return false;
      }
    }
  }
  return true;
}

Relation theta_of(const Context &ctx, ElementSet D) {
  const BoundedLattice &L = ctx.lattice();
  Relation r(L.size());
  for (ElementId x : L.elements()) {
    for (ElementId y : L.elements()) {
      if (ctx.arrow(x, y).subset_of(D) && ctx.arrow(y, x).subset_of(D)) {
        r.insert(x, y);
      }
    }
  }
  return r;
}

bool sp_implies(const Context &ctx, const Relation &Phi) {
  const BoundedLattice &L = ctx.lattice();
  for (ElementId a : L.elements()) {
    for (ElementId b : Phi.row(a)) {
      for (ElementId c : L.elements()) {
        const ElementSet bc = ctx.arrow(b, c);
        for (ElementId x : ctx.arrow(a, c)) {
          if (!bc.subset_of(Phi.row(x))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool sp_plus(const Context &ctx, const Relation &Phi) {
  const BoundedLattice &L = ctx.lattice();
  for (ElementId a : L.elements()) {
    for (ElementId b : Phi.row(a)) {
      const ElementSet bp = ctx.plus_of(b);
      for (ElementId x : ctx.plus_of(a)) {
        if (!bp.subset_of(Phi.row(x))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool compatible(Context &ctx, ElementSet D) {
  if (!is_ds(ctx, D)) {
    return false;
  }
  const BoundedLattice &L = ctx.lattice();

  // Antecedents a -> b inside D, deduplicated.
  std::vector<ElementSet> premises;
  for (ElementId a : L.elements()) {
    for (ElementId b : L.elements()) {
      const ElementSet ab = ctx.arrow(a, b);
      if (ab.subset_of(D) &&
          std::find(premises.begin(), premises.end(), ab) == premises.end()) {
        premises.push_back(ab);
      }
    }
  }
  for (ElementId c : L.elements()) {
    for (ElementId d : L.elements()) {
      if (ctx.arrow(c, d).subset_of(D)) {
        continue;
      }
      ElementSet good;
      for (ElementId x : L.elements()) {
        if (ctx.nested(x, c, d).subset_of(D)) {
          good.insert(x);
        }
      }
      for (ElementSet p : premises) {
        if (p.subset_of(good)) {
          return false;
        }
      }
    }
  }

  for (ElementId a : L.elements()) {
    for (ElementId b : L.elements()) {
      if (!ctx.arrow(a, b).subset_of(D) || !ctx.arrow(b, a).subset_of(D)) {
        continue;
      }
      for (ElementId c : L.elements()) {
        for (ElementId x : ctx.arrow(a, c)) {
          if (!ctx.nested(x, b, c).subset_of(D)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

Relation sp_closure(const Context &ctx, const Relation &R) {
  const BoundedLattice &L = ctx.lattice();
  Relation cur = R.equivalence_closure();
  for (;;) {
    Relation next = cur;
    for (ElementId a : L.elements()) {
      for (ElementId b : cur.row(a)) {
        for (ElementId c : L.elements()) {
          const ElementSet bc = ctx.arrow(b, c);
          for (ElementId x : ctx.arrow(a, c)) {
            next.add_row(x, bc);
          }
        }
      }
    }
    next = next.equivalence_closure();
    if (next == cur) {
      return cur;
    }
    cur = std::move(next);
  }
}

void require_cap(const BoundedLattice &L, std::size_t cap, const char *what) {
  if (L.size() > cap) {
    std::ostringstream os;
    os << what << " limited to " << cap << " elements, lattice has "
       << L.size();
    throw Error(ErrorCode::SizeCapExceeded, os.str());
  }
}

Check skipped(std::string name, std::string note) {
  Check c;
  c.name = std::move(name);
  c.verdict = Verdict::Skipped;
  c.asserted = false;
  c.note = std::move(note);
  return c;
}

std::string cap_note(std::size_t n, std::size_t cap) {
  std::ostringstream os;
  os << "size " << n << " above cap " << cap;
  return os.str();
}

std::vector<ElementSet> one(ElementSet S) { return {S}; }

// Every restricted growth string of length n, as equivalences.
template <typename Visit>
void for_each_partition(std::size_t n, Visit &&visit) {
  std::vector<std::size_t> label(n, 0);
  auto rec = [&](auto &&self, std::size_t i, std::size_t blocks) -> void {
    if (i == n) {
      visit(Relation::from_labels(label));
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      label[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
}

std::vector<std::uint64_t> key_of(const Relation &R) {
  std::vector<std::uint64_t> key;
  for (std::size_t i = 0; i < R.size(); ++i) {
    key.push_back(R.row(ElementId(i)).bits());
  }
  return key;
}

BoundedLattice powerset_lattice(std::size_t k) {
  const std::size_t m = std::size_t{1} << k;
  std::vector<std::string> labels;
  std::vector<ElementSet> upsets(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < m; ++j) {
      if ((i & j) == i) {
        upsets[i].insert(ElementId(j));
      }
    }
  }
  return BoundedLattice::from_order(std::move(labels), std::move(upsets));
}

} // namespace

bool is_deductive_system(const BoundedLattice &L, ElementSet D) {
  return is_ds(Context(L), D);
}

BoundedLattice DSLattice::as_lattice() const {
  std::vector<std::string> labels;
  std::vector<ElementSet> upsets(size());
  for (std::size_t i = 0; i < size(); ++i) {
    labels.push_back("D" + std::to_string(i));
    for (std::size_t j = 0; j < size(); ++j) {
      if (leq(i, j)) {
        upsets[i].insert(ElementId(j));
      }
    }
  }
  return BoundedLattice::from_order(std::move(labels), std::move(upsets));
}

DSLattice all_deductive_systems(const BoundedLattice &L,
                                std::size_t maxElements) {
  require_cap(L, maxElements, "deductive-system enumeration");
  const Context ctx(L);

  // Larger up-sets first, so an element is decided after everything above it.
  std::vector<ElementId> order;
  for (ElementId x : L.elements()) {
    order.push_back(x);
  }
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return L.up_set(a).size() < L.up_set(b).size();
  });

  DSLattice out;
  auto rec = [&](auto &&self, std::size_t i, ElementSet S) -> void {
    if (i == order.size()) {
      if (is_ds(ctx, S)) {
        out.systems.push_back(S);
      }
      return;
    }
    const ElementId e = order[i];
    const ElementSet above = L.up_set(e) - ElementSet::of(e);
    if (above.subset_of(S)) {
      ElementSet with = S;
      with.insert(e);
      self(self, i + 1, with);
    }
    if (e != L.top()) {
      self(self, i + 1, S);
    }
  };
  rec(rec, 0, ElementSet{});
  std::sort(out.systems.begin(), out.systems.end(), set_order_less);

  const std::size_t k = out.size();
  out.meetTable.assign(k * k, 0);
  out.joinTable.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const ElementSet lo = out.systems[i] & out.systems[j];
      const ElementSet hi = out.systems[i] | out.systems[j];
      // Largest system inside lo and smallest containing hi; the family is
      // intersection-closed, so both are unique.
      std::size_t m = 0;
      std::size_t jn = k - 1;
      for (std::size_t t = 0; t < k; ++t) {
        if (out.systems[t].subset_of(lo) &&
            out.systems[t].size() > out.systems[m].size()) {
          m = t;
        }
        if (hi.subset_of(out.systems[t]) &&
            out.systems[t].size() < out.systems[jn].size()) {
          jn = t;
        }
      }
      out.meetTable[i * k + j] = m;
      out.joinTable[i * k + j] = jn;
    }
  }
  return out;
}

bool ds_lattice_is_boolean_2n(const BoundedLattice &L) {
  if (!is_Mn_shape(L)) {
    return false;
  }
  std::vector<ElementId> atoms;
  for (ElementId x : L.elements()) {
    if (x != L.bottom() && x != L.top()) {
      atoms.push_back(x);
    }
  }
  const std::size_t k = atoms.size();
  if (k >= 20) {
    throw Error(ErrorCode::SizeCapExceeded,
                "Boolean check limited to fewer than 20 atoms");
  }
  const DSLattice ded = all_deductive_systems(L, L.size());
  const std::size_t m = std::size_t{1} << k;
  if (ded.size() != m) {
    return false;
  }

  std::vector<ElementSet> image(m);
  for (std::size_t mask = 0; mask < m; ++mask) {
    if (mask == m - 1) {
      image[mask] = L.universe();
      continue;
    }
    image[mask] = ElementSet::of(L.top());
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1U) {
        image[mask].insert(atoms[i]);
      }
    }
  }
  for (std::size_t s = 0; s < m; ++s) {
    if (std::find(ded.systems.begin(), ded.systems.end(), image[s]) ==
        ded.systems.end()) {
      return false;
    }
    for (std::size_t t = 0; t < m; ++t) {
      if (((s & t) == s) != image[s].subset_of(image[t])) {
        return false;
      }
    }
  }
  if (m <= kMaxElements) {
    return isomorphic(ded.as_lattice(), powerset_lattice(k));
  }
  return true;
}

bool is_order_filter(const BoundedLattice &L, ElementSet F) {
  if (F.empty()) {
    return false;
  }
  for (ElementId x : F) {
    if (!L.up_set(x).subset_of(F)) {
      return false;
    }
  }
  return true;
}

bool is_filter(const BoundedLattice &L, ElementSet F) {
  if (!is_order_filter(L, F)) {
    return false;
  }
  for (ElementId x : F) {
    for (ElementId y : F) {
      if (!F.contains(L.meet(x, y))) {
        return false;
      }
    }
  }
  return true;
}

Relation theta(const BoundedLattice &L, ElementSet D) {
  return theta_of(Context(L), D);
}

bool is_meet_congruence(const BoundedLattice &L, const Relation &Phi) {
  if (!Phi.is_equivalence()) {
    return false;
  }
  for (ElementId a : L.elements()) {
    for (ElementId b : Phi.row(a)) {
      for (ElementId c : L.elements()) {
        if (!Phi.contains(L.meet(a, c), L.meet(b, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Relation> all_meet_congruences(const BoundedLattice &L,
                                           std::size_t maxElements) {
  require_cap(L, maxElements, "meet-congruence enumeration");
  const std::size_t n = L.size();
  std::vector<std::size_t> label(n, 0);
  std::vector<Relation> out;

  // Elements 0..i are assigned; any violation among them survives every
  // extension.
  auto consistent = [&](std::size_t i) {
    for (std::size_t a = 0; a <= i; ++a) {
      for (std::size_t b = a + 1; b <= i; ++b) {
        if (label[a] != label[b]) {
          continue;
        }
        for (std::size_t c = 0; c <= i; ++c) {
          const std::size_t p = L.meet(ElementId(a), ElementId(c)).index();
          const std::size_t q = L.meet(ElementId(b), ElementId(c)).index();
          if (p <= i && q <= i && label[p] != label[q]) {
            return false;
          }
        }
      }
    }
    return true;
  };
  auto rec = [&](auto &&self, std::size_t i, std::size_t blocks) -> void {
    if (i == n) {
      out.push_back(Relation::from_labels(label));
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      label[i] = b;
      if (consistent(i)) {
        self(self, i + 1, std::max(blocks, b + 1));
      }
    }
  };
  rec(rec, 0, 0);
  return out;
}

ElementSet kernel(const BoundedLattice &L, const Relation &Phi) {
  ElementSet out;
  for (ElementId x : L.elements()) {
    if (Phi.contains(x, L.top())) {
      out.insert(x);
    }
  }
  return out;
}

bool has_sp_plus(const BoundedLattice &L, const Relation &Phi) {
  return sp_plus(Context(L), Phi);
}

bool has_sp_implies(const BoundedLattice &L, const Relation &Phi) {
  return sp_implies(Context(L), Phi);
}

bool is_compatible_ds(const BoundedLattice &L, ElementSet D) {
  Context ctx(L);
  return compatible(ctx, D);
}

std::optional<Relation>
find_meet_congruence_with_kernel(const BoundedLattice &L, ElementSet D,
                                 std::size_t maxElements) {
  for (Relation &phi : all_meet_congruences(L, maxElements)) {
    if (kernel(L, phi) == D) {
      return std::move(phi);
    }
  }
  return std::nullopt;
}

Relation sp_implies_closure(const BoundedLattice &L, const Relation &R) {
  return sp_closure(Context(L), R);
}

PropertyReport check_filter_lemma(const BoundedLattice &L,
                                  const DeductionCaps &caps) {
  PropertyReport r("deductive systems and filters");
  if (L.size() > caps.maxSubsetElements) {
    const std::string note = cap_note(L.size(), caps.maxSubsetElements);
    r.add(skipped("filter.ds_is_order_filter", note));
    r.add(skipped("filter.closed_ds_is_filter", note));
    r.add(skipped("filter.filter_is_ds", note));
    return r;
  }
  const Context ctx(L);
  const DSLattice ded = all_deductive_systems(L, caps.maxSubsetElements);
  const bool complemented = is_complemented(L);

  std::optional<std::vector<ElementSet>> notOrderFilter, notFilter;
  for (ElementSet D : ded.systems) {
    if (!notOrderFilter && !is_order_filter(L, D)) {
      notOrderFilter = one(D);
    }
    bool closed = true;
    for (ElementId x : D) {
      for (ElementId y : D) {
        closed = closed && ctx.arrow(x, y).subset_of(D);
      }
    }
    if (!notFilter && closed && !is_filter(L, D)) {
      notFilter = one(D);
    }
  }
  r.add(make_check("filter.ds_is_order_filter", complemented, notOrderFilter));
  r.add(make_check("filter.closed_ds_is_filter", complemented, notFilter,
                   "x -> y ⊆ D for x, y in D"));

  if (!complemented || !is_modular(L)) {
    r.add(skipped("filter.filter_is_ds", "lattice is not complemented modular"));
    return r;
  }
  // In a finite lattice the filters are exactly the principal ones.
  std::optional<std::vector<ElementSet>> notDs;
  for (ElementId a : L.elements()) {
    if (!notDs && !is_ds(ctx, L.up_set(a))) {
      notDs = one(L.up_set(a));
    }
  }
  r.add(make_check("filter.filter_is_ds", true, notDs));
  return r;
}

PropertyReport check_congruence_kernels(const BoundedLattice &L,
                                        const DeductionCaps &caps) {
  PropertyReport r("meet-congruence kernels");
  if (L.size() > caps.maxPartitionElements) {
    const std::string note = cap_note(L.size(), caps.maxPartitionElements);
    r.add(skipped("congruence.kernel_is_ds", note));
    r.add(skipped("congruence.theta_within", note));
    return r;
  }
  const Context ctx(L);
  const bool hypothesis = is_complemented(L) && is_modular(L);
  std::optional<std::vector<ElementSet>> notDs, notWithin;
  const auto congruences = all_meet_congruences(L, caps.maxPartitionElements);
  for (const Relation &phi : congruences) {
    const ElementSet k = kernel(L, phi);
    if (!notDs && !is_ds(ctx, k)) {
      notDs = phi.classes();
    }
    if (!notWithin && !theta_of(ctx, k).subset_of(phi)) {
      notWithin = phi.classes();
    }
  }
  const std::string note =
      std::to_string(congruences.size()) + " meet-congruences";
  r.add(make_check("congruence.kernel_is_ds", hypothesis, notDs, note));
  r.add(make_check("congruence.theta_within", hypothesis, notWithin, note));
  return r;
}

PropertyReport check_sp_equivalences(const BoundedLattice &L,
                                     const DeductionCaps &caps) {
  PropertyReport r("equivalences with substitution for ->");
  if (L.size() > caps.maxSubsetElements) {
    const std::string note = cap_note(L.size(), caps.maxSubsetElements);
    r.add(skipped("sp.plus", note));
    r.add(skipped("sp.kernel_is_ds", note));
    r.add(skipped("sp.within_theta", note));
    return r;
  }
  const Context ctx(L);
  const std::size_t n = L.size();
  std::vector<Relation> candidates;
  std::string how;

  if (n <= caps.exhaustiveEquivalenceMax) {
    for_each_partition(n, [&](Relation phi) {
      if (sp_implies(ctx, phi)) {
        candidates.push_back(std::move(phi));
      }
    });
    how = "all partitions";
  } else {
    std::set<std::vector<std::uint64_t>> seen;
    auto keep = [&](Relation phi) {
      if (seen.insert(key_of(phi)).second) {
        candidates.push_back(std::move(phi));
      }
    };
    keep(sp_closure(ctx, Relation::identity(n)));
    for (ElementId a : L.elements()) {
      for (ElementId b : L.elements()) {
        if (a < b) {
          Relation seed = Relation::identity(n);
          seed.insert(a, b);
          keep(sp_closure(ctx, seed));
        }
      }
    }
    const std::size_t principal = candidates.size();
    for (std::size_t i = 0; i < principal; ++i) {
      for (std::size_t j = i + 1; j < principal; ++j) {
        Relation joined = candidates[i];
        for (ElementId x : L.elements()) {
          joined.add_row(x, candidates[j].row(x));
        }
        keep(sp_closure(ctx, joined));
      }
    }
    how = "generated from collapsed pairs";
  }

  std::optional<std::vector<ElementSet>> noPlus, notDs, notWithin;
  for (const Relation &phi : candidates) {
    const ElementSet k = kernel(L, phi);
    if (!noPlus && !sp_plus(ctx, phi)) {
      noPlus = phi.classes();
    }
    if (!notDs && !is_ds(ctx, k)) {
      notDs = phi.classes();
    }
    if (!notWithin && !phi.subset_of(theta_of(ctx, k))) {
      notWithin = phi.classes();
    }
  }
  const bool complemented = is_complemented(L);
  const std::string note =
      std::to_string(candidates.size()) + " equivalences, " + how;
  r.add(make_check("sp.plus", complemented, noPlus, note));
  r.add(make_check("sp.kernel_is_ds", complemented, notDs, note));
  r.add(make_check("sp.within_theta", complemented, notWithin, note));
  return r;
}

PropertyReport check_compatible_systems(const BoundedLattice &L,
                                        const DeductionCaps &caps) {
  PropertyReport r("compatible deductive systems");
  if (L.size() > caps.maxSubsetElements) {
    const std::string note = cap_note(L.size(), caps.maxSubsetElements);
    r.add(skipped("compatible.theta_equivalence", note));
    r.add(skipped("compatible.theta_sp_implies", note));
    r.add(skipped("compatible.kernel", note));
    return r;
  }
  Context ctx(L);
  const DSLattice ded = all_deductive_systems(L, caps.maxSubsetElements);
  std::optional<std::vector<ElementSet>> notEquiv, noSp, wrongKernel;
  std::size_t count = 0;
  for (ElementSet D : ded.systems) {
    if (!compatible(ctx, D)) {
      continue;
    }
    ++count;
    const Relation t = theta_of(ctx, D);
    const bool equivalence = t.is_equivalence();
    if (!notEquiv && !equivalence) {
      notEquiv = one(D);
    }
    if (!noSp && !sp_implies(ctx, t)) {
      noSp = one(D);
    }
    if (!wrongKernel && kernel(L, t) != D) {
      wrongKernel = one(D);
    }
  }
  const bool complemented = is_complemented(L);
  const std::string note = std::to_string(count) + " compatible systems";
  r.add(make_check("compatible.theta_equivalence", complemented, notEquiv,
                   note));
  r.add(make_check("compatible.theta_sp_implies", complemented, noSp, note));
  r.add(make_check("compatible.kernel", complemented, wrongKernel, note));
  return r;
}

PropertyReport check_system_families(const BoundedLattice &L,
                                     const DeductionCaps &caps) {
  PropertyReport r("deductive-system families");
  if (L.size() > caps.maxSubsetElements) {
    const std::string note = cap_note(L.size(), caps.maxSubsetElements);
    for (const char *name :
         {"ds.bounds", "ds.intersection_closed", "compatible.contains_top",
          "compatible.intersection_closed", "theta.reflexive_symmetric",
          "theta.transitive_incompatible"}) {
      r.add(skipped(name, note));
    }
    return r;
  }
  Context ctx(L);
  const DSLattice ded = all_deductive_systems(L, caps.maxSubsetElements);
  const bool complemented = is_complemented(L);

  std::optional<std::vector<ElementSet>> bounds;
  if (ded.systems.front() != ElementSet::of(L.top()) ||
      ded.systems.back() != L.universe()) {
    bounds = std::vector<ElementSet>{ded.systems.front(), ded.systems.back()};
  }
  r.add(make_check("ds.bounds", complemented, bounds,
                   "{1} and L are the least and greatest systems"));

  auto listed = [&](ElementSet S) {
    return std::binary_search(ded.systems.begin(), ded.systems.end(), S,
                              set_order_less);
  };
  std::vector<ElementSet> compatibleSystems;
  for (ElementSet D : ded.systems) {
    if (compatible(ctx, D)) {
      compatibleSystems.push_back(D);
    }
  }

  std::optional<std::vector<ElementSet>> notClosed;
  for (std::size_t i = 0; i < ded.size() && !notClosed; ++i) {
    for (std::size_t j = i + 1; j < ded.size(); ++j) {
      if (!listed(ded.systems[i] & ded.systems[j])) {
        notClosed = std::vector<ElementSet>{ded.systems[i], ded.systems[j]};
        break;
      }
    }
  }
  r.add(make_check("ds.intersection_closed", complemented, notClosed));

  std::optional<std::vector<ElementSet>> topMissing;
  if (std::find(compatibleSystems.begin(), compatibleSystems.end(),
                L.universe()) == compatibleSystems.end()) {
    topMissing = one(L.universe());
  }
  r.add(make_check("compatible.contains_top", complemented, topMissing));

  std::optional<std::vector<ElementSet>> compatNotClosed;
  for (std::size_t i = 0; i < compatibleSystems.size() && !compatNotClosed;
       ++i) {
    for (std::size_t j = i + 1; j < compatibleSystems.size(); ++j) {
      const ElementSet meet = compatibleSystems[i] & compatibleSystems[j];
      if (std::find(compatibleSystems.begin(), compatibleSystems.end(),
                    meet) == compatibleSystems.end()) {
        compatNotClosed =
            std::vector<ElementSet>{compatibleSystems[i], compatibleSystems[j]};
        break;
      }
    }
  }
  r.add(make_check("compatible.intersection_closed", complemented,
                   compatNotClosed));

  std::optional<std::vector<ElementSet>> notRefSym, notTransitive;
  std::size_t incompatible = 0;
  std::size_t transitive = 0;
  for (ElementSet D : ded.systems) {
    const Relation t = theta_of(ctx, D);
    if (!notRefSym && !(t.is_reflexive() && t.is_symmetric())) {
      notRefSym = one(D);
    }
    if (std::find(compatibleSystems.begin(), compatibleSystems.end(), D) !=
        compatibleSystems.end()) {
      continue;
    }
    ++incompatible;
    if (t.is_transitive()) {
      ++transitive;
    } else if (!notTransitive) {
      notTransitive = one(D);
    }
  }
  r.add(make_check("theta.reflexive_symmetric", complemented, notRefSym));
  std::ostringstream note;
  note << transitive << " of " << incompatible
       << " incompatible systems give a transitive relation";
  r.add(make_check("theta.transitive_incompatible", false, notTransitive,
                   note.str()));
  return r;
}

} // namespace latkit
