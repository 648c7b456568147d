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

// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <latkit/complementation.hpp>
#include <latkit/connectives.hpp>
#include <latkit/corpus.hpp>
#include <latkit/deduction.hpp>

#include "oracle.hpp"

using namespace latkit;
using oracle::id;
using oracle::set_of;

namespace {

class Failures {
public:
  void expect(bool ok, const std::string &what) {
    if (!ok && list_.size() < 10) {
      list_.push_back(what);
    }
    failed_ = failed_ || !ok;
  }
  void report(const PropertyReport &r, const std::string &where) {
    for (const Check &c : r.checks()) {
      expect(!(c.asserted && c.verdict == Verdict::Fail),
             where + ": " + c.name);
    }
  }
  // The named check exists and was asserted, so its hypotheses held.
  void asserted(const PropertyReport &r, const std::string &name,
                const std::string &where) {
    const Check *c = r.find(name);
    expect(c != nullptr && c->asserted && c->verdict == Verdict::Pass,
           where + ": " + name + " not asserted as pass");
  }
  bool failed() const { return failed_; }
  const std::vector<std::string> &list() const { return list_; }

private:
  bool failed_ = false;
  std::vector<std::string> list_;
};

struct Criterion {
  int number;
  std::string title;
  double limitSeconds;
  std::function<void(Failures &)> body;
};

std::vector<CorpusEntry> corpus() { return default_corpus(6); }

bool modular_complemented(const CorpusEntry &e) {
  return e.tags.has(Tag::Complemented) && e.tags.has(Tag::Modular);
}

void tables(Failures &f) {
  struct Row {
    const char *x;
    std::initializer_list<const char *> p, pp;
  };
  auto rows = [&f](const char *name, const BoundedLattice &L,
                   std::initializer_list<Row> rs) {
    for (const Row &r : rs) {
      f.expect(complements(L, id(L, r.x)) == set_of(L, r.p),
               std::string(name) + " x+ at " + r.x);
      f.expect(double_plus(L, id(L, r.x)) == set_of(L, r.pp),
               std::string(name) + " x++ at " + r.x);
    }
  };
  rows("N5", make_N5(),
       {{"0", {"1"}, {"0"}},
        {"a", {"b"}, {"a", "c"}},
        {"b", {"a", "c"}, {"b"}},
        {"c", {"b"}, {"a", "c"}},
        {"1", {"0"}, {"1"}}});
  rows("M3", make_M3(),
       {{"0", {"1"}, {"0"}},
        {"a", {"b", "c"}, {"a"}},
        {"b", {"a", "c"}, {"b"}},
        {"c", {"a", "b"}, {"c"}},
        {"1", {"0"}, {"1"}}});
  rows("fig2", make_fig2(),
       {{"0", {"1"}, {"0"}},
        {"a", {"h", "i", "j"}, {"a"}},
        {"b", {"g", "i", "j"}, {"b"}},
        {"c", {"g", "h", "j"}, {"c"}},
        {"d", {"g", "h", "i"}, {"d"}},
        {"e", {"f"}, {"e"}},
        {"f", {"e"}, {"f"}},
        {"g", {"b", "c", "d"}, {"g"}},
        {"h", {"a", "c", "d"}, {"h"}},
        {"i", {"a", "b", "d"}, {"i"}},
        {"j", {"a", "b", "c"}, {"j"}},
        {"1", {"0"}, {"1"}}});

  using Cell = std::initializer_list<const char *>;
  auto odot_rows = [&f](const char *name, const BoundedLattice &L,
                        std::vector<std::vector<Cell>> t) {
    for (ElementId x : L.elements()) {
      for (ElementId y : L.elements()) {
        f.expect(odot(L, x, y) == set_of(L, t[x.index()][y.index()]),
                 std::string(name) + " odot " + L.label(x) + "," +
                     L.label(y));
      }
    }
  };
  odot_rows("N5", make_N5(),
            {{{"0"}, {"0"}, {"0"}, {"0"}, {"0"}},
             {{"0"}, {"a"}, {"0"}, {"c"}, {"a"}},
             {{"0"}, {"0"}, {"b"}, {"0"}, {"b"}},
             {{"0"}, {"a"}, {"0"}, {"c"}, {"c"}},
             {{"0"}, {"a"}, {"b"}, {"c"}, {"1"}}});
  odot_rows("M3", make_M3(),
            {{{"0"}, {"0"}, {"0"}, {"0"}, {"0"}},
             {{"0"}, {"a"}, {"0", "b"}, {"0", "c"}, {"a"}},
             {{"0"}, {"0", "a"}, {"b"}, {"0", "c"}, {"b"}},
             {{"0"}, {"0", "a"}, {"0", "b"}, {"c"}, {"c"}},
             {{"0"}, {"a"}, {"b"}, {"c"}, {"1"}}});

  for (std::size_t n = 2; n <= 5; ++n) {
    const BoundedLattice L = make_Mn(n);
    const ElementSet one = ElementSet::of(L.top());
    for (ElementId x : L.elements()) {
      for (ElementId y : L.elements()) {
        ElementSet want;
        if (x == L.bottom() || y == L.top() || x == y) {
          want = one;
        } else if (x == L.top()) {
          want = ElementSet::of(y);
        } else {
          want = complements(L, x);
        }
        f.expect(implies(L, x, y) == want,
                 "M" + std::to_string(n) + " -> " + L.label(x) + "," +
                     L.label(y));
      }
    }
  }

  const BoundedLattice L = make_fig2();
  const ElementSet hij = set_of(L, {"h", "i", "j"});
  const ElementSet one = ElementSet::of(L.top());
  auto imp = [&L](const char *a, const char *b) {
    return implies(L, id(L, a), id(L, b));
  };
  f.expect(imp("a", "b") == hij, "fig2 a->b");
  f.expect(imp("a", "f") == one, "fig2 a->f");
  f.expect(imp("a", "g") == one, "fig2 a->g");
  f.expect(imp("a", "h") == hij, "fig2 a->h");
  f.expect(imp("f", "e") == set_of(L, {"e"}), "fig2 f->e");
  f.expect(imp("g", "h") == hij, "fig2 g->h");
}

void galois(Failures &f) {
  // Exhaustive on small corpus lattices with the brute-force plus.
  for (const CorpusEntry &e : corpus()) {
    const BoundedLattice &L = e.lattice;
    if (L.size() > 6) {
      continue;
    }
    const std::uint64_t count = std::uint64_t{1} << L.size();
    std::vector<ElementSet> p(count);
    for (std::uint64_t a = 0; a < count; ++a) {
      p[a] = oracle::plus(L, ElementSet::from_bits(a));
    }
    for (std::uint64_t a = 0; a < count; ++a) {
      const ElementSet A = ElementSet::from_bits(a);
      const ElementSet pp = p[p[a].bits()];
      f.expect(A.subset_of(pp), e.name + " extensive");
      f.expect(p[pp.bits()] == p[a], e.name + " triple");
      f.expect(!p[a].intersects(pp), e.name + " disjoint");
      for (std::uint64_t b = 0; b < count; ++b) {
        const ElementSet B = ElementSet::from_bits(b);
        if (A.subset_of(B)) {
          f.expect(p[b].subset_of(p[a]), e.name + " antitone");
        }
        f.expect(A.subset_of(p[b]) == B.subset_of(p[a]), e.name + " swap");
      }
    }
    f.report(check_galois_laws(L), e.name);
  }

  // Random pairs on named lattices up to 16 elements.
  std::mt19937_64 rng(20260101);
  for (const char *name : {"N5", "M3", "fig2", "M:6", "B:3", "B:4"}) {
    const BoundedLattice L = named_lattice(name).lattice;
    std::vector<ElementSet> comp;
    for (ElementId a : L.elements()) {
      comp.push_back(oracle::complements(L, a));
    }
    auto plus_of = [&](ElementSet A) {
      ElementSet out = L.universe();
      for (ElementId a : A) {
        out &= comp[a.index()];
      }
      return out;
    };
    std::uniform_int_distribution<std::uint64_t> pick(
        0, L.universe().bits());
    for (int i = 0; i < 10000; ++i) {
      const ElementSet A = ElementSet::from_bits(pick(rng));
      const ElementSet B = ElementSet::from_bits(pick(rng));
      const ElementSet Ap = plus_of(A), Bp = plus_of(B);
      const ElementSet App = plus_of(Ap);
      f.expect(A.subset_of(App), std::string(name) + " extensive");
      f.expect(plus_of(App) == Ap, std::string(name) + " triple");
      f.expect(!Ap.intersects(App), std::string(name) + " disjoint");
      f.expect(plus_of(A | B).subset_of(Ap), std::string(name) + " antitone");
      f.expect(A.subset_of(Bp) == B.subset_of(Ap),
               std::string(name) + " swap");
      // Library plus agrees on the sampled sets.
      f.expect(plus(L, A) == Ap, std::string(name) + " library plus");
    }
    f.report(check_galois_laws(L), name);
  }
}

void plus_basics(Failures &f) {
  for (const CorpusEntry &e : corpus()) {
    const PropertyReport r = check_plus_basics(e.lattice);
    f.report(r, e.name);
    for (const char *name :
         {"plus.self_in_dblplus", "plus.antichain_iff_no_pentagon",
          "plus.convex", "plus.non_injective_breaks_identity"}) {
      f.asserted(r, name, e.name);
    }
  }
  // The conditional fires on the pentagon.
  f.expect(!dblplus_injective(make_N5()) &&
               !satisfies_dblplus_identity(make_N5()),
           "N5 non-injective breaks identity");
}

void modular_suite(Failures &f, double &scanSeconds) {
  std::vector<CorpusEntry> lattices;
  for (CorpusEntry &e : corpus()) {
    if (modular_complemented(e) && e.lattice.size() <= 6) {
      lattices.push_back(std::move(e));
    }
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    lattices.push_back(named_lattice("M:" + std::to_string(n)));
  }
  lattices.push_back(named_lattice("fig2"));
  for (std::size_t k = 1; k <= 4; ++k) {
    lattices.push_back(named_lattice("B:" + std::to_string(k)));
  }
  for (const CorpusEntry &e : lattices) {
    const BoundedLattice &L = e.lattice;
    const PropertyReport anti = check_modular_antichains(L);
    const PropertyReport dbl = check_dblplus_characterization(L);
    const PropertyReport meet = check_implies_meet_theorem(L);
    const PropertyReport modus = check_modus_laws(L);
    const PropertyReport od = check_odot_laws(L);
    const PropertyReport adj = check_adjointness(L);
    for (const PropertyReport *r : {&anti, &dbl, &meet, &modus, &od, &adj}) {
      f.report(*r, e.name);
    }
    for (const char *name : {"modular.antichain_plus",
                             "modular.antichain_set_plus",
                             "modular.antichain_dblplus"}) {
      f.asserted(anti, name, e.name);
    }
    f.asserted(dbl, "dblplus.characterization", e.name);
    f.asserted(meet, "implies_meet.i", e.name);
    f.asserted(meet, "implies_meet.ii", e.name);
    f.asserted(adj, "adjoint.residuation", e.name);
    for (const Check &c : modus.checks()) {
      f.expect(c.asserted, e.name + ": " + c.name + " not asserted");
    }
    for (const Check &c : od.checks()) {
      f.expect(c.asserted, e.name + ": " + c.name + " not asserted");
    }
  }

  // Independent residuation scan of the twelve-element lattice.
  const BoundedLattice L = make_fig2();
  const auto start = std::chrono::steady_clock::now();
  const PropertyReport adj = check_adjointness(L);
  scanSeconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  f.asserted(adj, "adjoint.residuation", "fig2");
  std::size_t triples = 0;
  for (ElementId a : L.elements()) {
    for (ElementId b : L.elements()) {
      const ElementSet ab = oracle::odot(L, a, b);
      for (ElementId c : L.elements()) {
        const ElementSet bc = oracle::implies(L, b, c);
        bool lhs = true, rhs = true;
        for (ElementId x : ab) {
          lhs = lhs && L.leq(x, c);
        }
        for (ElementId y : bc) {
          rhs = rhs && L.leq(a, y);
        }
        f.expect(lhs == rhs, "fig2 residuation " + L.label(a) + "," +
                                 L.label(b) + "," + L.label(c));
        ++triples;
      }
    }
  }
  f.expect(triples == 1728, "fig2 triple count");
  f.expect(scanSeconds < 1.0, "fig2 scan over 1 s");
}

void implication_laws(Failures &f) {
  for (const CorpusEntry &e : corpus()) {
    const PropertyReport r = check_implication_laws(e.lattice);
    f.report(r, e.name);
    for (const char *name :
         {"implies.i_bounds", "implies.ii_order", "implies.iii_unit",
          "implies.iv_complement", "implies.v_monotone", "implies.vi_meet",
          "implies.vii_swap"}) {
      f.asserted(r, name, e.name);
    }
  }
  const BoundedLattice n5 = make_N5();
  f.expect(implies(n5, id(n5, "c"), id(n5, "a")) == ElementSet::of(n5.top()),
           "N5 c->a = {1}");
  f.expect(n5.less(id(n5, "a"), id(n5, "c")), "N5 c > a");
  const auto w = dblplus_identity_witness(n5);
  f.expect(!satisfies_dblplus_identity(n5), "N5 identity");
  f.expect(w.has_value() && *w == id(n5, "a"), "N5 witness a");
}

void deduction(Failures &f) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const BoundedLattice L = make_Mn(n);
    f.expect(all_deductive_systems(L).size() == (std::size_t{1} << n),
             "Ded(M" + std::to_string(n) + ") size");
    f.expect(ds_lattice_is_boolean_2n(L),
             "Ded(M" + std::to_string(n) + ") Boolean");
  }
  const BoundedLattice n5 = make_N5();
  const std::vector<ElementSet> want{set_of(n5, {"1"}), set_of(n5, {"b", "1"}),
                                     set_of(n5, {"a", "c", "1"}),
                                     n5.universe()};
  f.expect(oracle::deductive_systems(n5) == want, "Ded(N5) brute force");
  f.expect(all_deductive_systems(n5).systems == want, "Ded(N5)");

  const BoundedLattice m3 = make_M3();
  f.expect(!find_meet_congruence_with_kernel(m3, set_of(m3, {"a", "b", "1"}))
                .has_value(),
           "M3 kernel counterexample");

  for (const CorpusEntry &e : corpus()) {
    const BoundedLattice &L = e.lattice;
    const PropertyReport lemma = check_filter_lemma(L);
    const PropertyReport kernels = check_congruence_kernels(L);
    const PropertyReport sp = check_sp_equivalences(L);
    const PropertyReport compat = check_compatible_systems(L);
    const PropertyReport fam = check_system_families(L);
    for (const PropertyReport *r : {&lemma, &kernels, &sp, &compat, &fam}) {
      f.report(*r, e.name);
    }
    f.asserted(lemma, "filter.ds_is_order_filter", e.name);
    f.asserted(lemma, "filter.closed_ds_is_filter", e.name);
    if (modular_complemented(e)) {
      f.asserted(lemma, "filter.filter_is_ds", e.name);
    }
    if (modular_complemented(e) &&
        L.size() <= DeductionCaps{}.maxPartitionElements) {
      f.asserted(kernels, "congruence.kernel_is_ds", e.name);
      f.asserted(kernels, "congruence.theta_within", e.name);
    }
    for (const char *name : {"sp.plus", "sp.kernel_is_ds", "sp.within_theta"}) {
      f.asserted(sp, name, e.name);
    }
    for (const char *name :
         {"compatible.theta_equivalence", "compatible.theta_sp_implies",
          "compatible.kernel"}) {
      f.asserted(compat, name, e.name);
    }
  }
}

void oracles(Failures &f) {
  std::vector<CorpusEntry> lattices;
  for (CorpusEntry &e : corpus()) {
    if (e.lattice.size() <= 12) {
      lattices.push_back(std::move(e));
    }
  }
  for (const CorpusEntry &e : lattices) {
    f.expect(closure_lattice(e.lattice).closedSets ==
                 oracle::closed_sets(e.lattice),
             e.name + " closed sets");
    f.expect(all_deductive_systems(e.lattice).systems ==
                 oracle::deductive_systems(e.lattice),
             e.name + " deductive systems");
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    f.expect(enumerate_lattices(n).size() == oracle::lattice_classes(n).size(),
             "lattice count n=" + std::to_string(n));
  }
}

} // namespace

int main() {
  double scanSeconds = 0;
  const std::vector<Criterion> criteria{
      {1, "table reproduction", 1.0, tables},
      {2, "Galois laws", 30.0, galois},
      {3, "basic properties of x+", 60.0, plus_basics},
      {4, "modular theorem suite", 60.0,
       [&scanSeconds](Failures &f) { modular_suite(f, scanSeconds); }},
      {5, "implication laws and pinned non-theorem", 60.0, implication_laws},
      {6, "deduction suite", 60.0, deduction},
      {7, "oracle equivalence", 60.0, oracles},
  };

  bool allOk = true;
  for (const Criterion &c : criteria) {
    Failures f;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(f);
    } catch (const std::exception &e) {
      f.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    const bool ok = !f.failed() && seconds < c.limitSeconds;
    allOk = allOk && ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s (limit %.0f s)", seconds,
                  c.limitSeconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << "  "
              << c.title << "  " << timing;
    if (c.number == 4) {
      std::snprintf(timing, sizeof timing, "; 1728-triple scan %.3f s",
                    scanSeconds);
      std::cout << timing;
    }
    std::cout << '\n';
    for (const std::string &what : f.list()) {
      std::cout << "      " << what << '\n';
    }
  }
  return allOk ? 0 : 1;
}
