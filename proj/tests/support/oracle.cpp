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

#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <latkit/element_set.hpp>

namespace oracle {

namespace {

bool le(const BoundedLattice &L, std::size_t a, std::size_t b) {
  return L.leq(ElementId(a), ElementId(b));
}

std::vector<ElementSet> sorted_unique(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end(), latkit::set_order_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

} // namespace

ElementId glb(const BoundedLattice &L, ElementId a, ElementId b) {
  const std::size_t n = L.size();
  for (std::size_t m = 0; m < n; ++m) {
    if (!le(L, m, a.index()) || !le(L, m, b.index())) {
      continue;
    }
    bool greatest = true;
    for (std::size_t z = 0; z < n; ++z) {
      if (le(L, z, a.index()) && le(L, z, b.index()) && !le(L, z, m)) {
        greatest = false;
      }
    }
    if (greatest) {
      return ElementId(m);
    }
  }
  throw std::logic_error("no glb");
}

ElementId lub(const BoundedLattice &L, ElementId a, ElementId b) {
  const std::size_t n = L.size();
  for (std::size_t m = 0; m < n; ++m) {
    if (!le(L, a.index(), m) || !le(L, b.index(), m)) {
      continue;
    }
    bool least = true;
    for (std::size_t z = 0; z < n; ++z) {
      if (le(L, a.index(), z) && le(L, b.index(), z) && !le(L, m, z)) {
        least = false;
      }
    }
    if (least) {
      return ElementId(m);
    }
  }
  throw std::logic_error("no lub");
}

ElementSet complements(const BoundedLattice &L, ElementId a) {
  return plus(L, ElementSet::of(a));
}

ElementSet plus(const BoundedLattice &L, ElementSet A) {
  // The bounds are found from the order alone.
  std::size_t zero = 0, one = 0;
  for (std::size_t x = 0; x < L.size(); ++x) {
    bool bottom = true, top = true;
    for (std::size_t y = 0; y < L.size(); ++y) {
      bottom = bottom && le(L, x, y);
      top = top && le(L, y, x);
    }
    zero = bottom ? x : zero;
    one = top ? x : one;
  }
  ElementSet out;
  for (std::size_t x = 0; x < L.size(); ++x) {
    bool all = true;
    for (ElementId a : A) {
      all = all && lub(L, a, ElementId(x)).index() == one &&
            glb(L, a, ElementId(x)).index() == zero;
    }
    if (all) {
      out.insert(ElementId(x));
    }
  }
  return out;
}

ElementSet join_sets(const BoundedLattice &L, ElementSet A, ElementSet B) {
  ElementSet out;
  for (ElementId x : A) {
    for (ElementId y : B) {
      out.insert(lub(L, x, y));
    }
  }
  return out;
}

ElementSet meet_sets(const BoundedLattice &L, ElementSet A, ElementSet B) {
  ElementSet out;
  for (ElementId x : A) {
    for (ElementId y : B) {
      out.insert(glb(L, x, y));
    }
  }
  return out;
}

ElementSet implies(const BoundedLattice &L, ElementId a, ElementId b) {
  return join_sets(L, complements(L, a), ElementSet::of(glb(L, a, b)));
}

ElementSet odot(const BoundedLattice &L, ElementId a, ElementId b) {
  return meet_sets(L, ElementSet::of(b),
                   join_sets(L, ElementSet::of(a), complements(L, b)));
}

std::vector<ElementSet> closed_sets(const BoundedLattice &L) {
  std::vector<ElementSet> comp;
  for (std::size_t a = 0; a < L.size(); ++a) {
    comp.push_back(complements(L, ElementId(a)));
  }
  std::vector<ElementSet> out;
  const std::uint64_t count = std::uint64_t{1} << L.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    ElementSet common;
    for (std::size_t x = 0; x < L.size(); ++x) {
      bool all = true;
      for (ElementId a : ElementSet::from_bits(bits)) {
        all = all && comp[a.index()].contains(ElementId(x));
      }
      if (all) {
        common.insert(ElementId(x));
      }
    }
    out.push_back(common);
  }
  return sorted_unique(std::move(out));
}

namespace {

bool is_ds_with(const BoundedLattice &L, const std::vector<ElementSet> &imp,
                ElementSet D) {
  bool hasTop = false;
  for (ElementId x : D) {
    bool top = true;
    for (std::size_t y = 0; y < L.size(); ++y) {
      top = top && le(L, y, x.index());
    }
    hasTop = hasTop || top;
  }
  if (!hasTop) {
    return false;
  }
  for (ElementId a : D) {
    for (std::size_t b = 0; b < L.size(); ++b) {
      if (imp[a.index() * L.size() + b].subset_of(D) &&
          !D.contains(ElementId(b))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<ElementSet> implication_table(const BoundedLattice &L) {
  std::vector<ElementSet> imp;
  for (std::size_t a = 0; a < L.size(); ++a) {
    for (std::size_t b = 0; b < L.size(); ++b) {
      imp.push_back(implies(L, ElementId(a), ElementId(b)));
    }
  }
  return imp;
}

} // namespace

bool is_deductive_system(const BoundedLattice &L, ElementSet D) {
  return is_ds_with(L, implication_table(L), D);
}

std::vector<ElementSet> deductive_systems(const BoundedLattice &L) {
  const std::vector<ElementSet> imp = implication_table(L);
  std::vector<ElementSet> out;
  const std::uint64_t count = std::uint64_t{1} << L.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const ElementSet D = ElementSet::from_bits(bits);
    if (is_ds_with(L, imp, D)) {
      out.push_back(D);
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<std::vector<std::size_t>> all_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> label(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t blocks) {
    if (i == n) {
      out.push_back(label);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      label[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

bool is_meet_congruence(const BoundedLattice &L,
                        const std::vector<std::size_t> &labels) {
  const std::size_t n = L.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (labels[a] != labels[b]) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t p = glb(L, ElementId(a), ElementId(c)).index();
        const std::size_t q = glb(L, ElementId(b), ElementId(c)).index();
        if (labels[p] != labels[q]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::uint64_t> classes_key(const latkit::Relation &R) {
  std::vector<std::uint64_t> key;
  for (ElementSet block : R.classes()) {
    key.push_back(block.bits());
  }
  std::sort(key.begin(), key.end());
  return key;
}

std::set<std::vector<std::uint64_t>> meet_congruences(const BoundedLattice &L) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto &labels : all_partitions(L.size())) {
    if (is_meet_congruence(L, labels)) {
      out.insert(classes_key(latkit::Relation::from_labels(labels)));
    }
  }
  return out;
}

std::set<std::vector<std::uint8_t>> lattice_classes(std::size_t n) {
  if (n > 5) {
    throw std::invalid_argument("oracle limited to 5 elements");
  }
  std::vector<std::pair<std::size_t, std::size_t>> offDiagonal;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        offDiagonal.emplace_back(i, j);
      }
    }
  }
  std::set<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> m(n * n);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint8_t & {
    return m[i * n + j];
  };
  const std::uint64_t count = std::uint64_t{1} << offDiagonal.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    std::fill(m.begin(), m.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      at(i, i) = 1;
    }
    for (std::size_t k = 0; k < offDiagonal.size(); ++k) {
      if (bits >> k & 1U) {
        at(offDiagonal[k].first, offDiagonal[k].second) = 1;
      }
    }
    bool order = true;
    for (std::size_t i = 0; i < n && order; ++i) {
      for (std::size_t j = 0; j < n && order; ++j) {
        if (i != j && at(i, j) && at(j, i)) {
          order = false;
        }
        for (std::size_t k = 0; k < n && order; ++k) {
          if (at(i, j) && at(j, k) && !at(i, k)) {
            order = false;
          }
        }
      }
    }
    if (!order) {
      continue;
    }
    // Every pair needs a greatest lower and a least upper bound; the bounds
    // must differ.
    bool lattice = true;
    for (std::size_t a = 0; a < n && lattice; ++a) {
      for (std::size_t b = 0; b < n && lattice; ++b) {
        bool hasGlb = false, hasLub = false;
        for (std::size_t g = 0; g < n; ++g) {
          bool lower = at(g, a) && at(g, b);
          bool upper = at(a, g) && at(b, g);
          for (std::size_t z = 0; z < n; ++z) {
            if (at(z, a) && at(z, b) && !at(z, g)) {
              lower = false;
            }
            if (at(a, z) && at(b, z) && !at(g, z)) {
              upper = false;
            }
          }
          hasGlb = hasGlb || lower;
          hasLub = hasLub || upper;
        }
        lattice = hasGlb && hasLub;
      }
    }
    if (!lattice || n < 2) {
      continue;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> best;
    do {
      std::vector<std::uint8_t> code(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          code[perm[i] * n + perm[j]] = at(i, j);
        }
      }
      if (best.empty() || code < best) {
        best = std::move(code);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.insert(std::move(best));
  }
  return out;
}

BoundedLattice relabel(const BoundedLattice &L,
                       const std::vector<std::size_t> &perm) {
  const std::size_t n = L.size();
  std::vector<std::string> labels(n);
  std::vector<ElementSet> upsets(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[perm[i]] = L.label(ElementId(i));
    for (ElementId j : L.up_set(ElementId(i))) {
      upsets[perm[i]].insert(ElementId(perm[j.index()]));
    }
  }
  return BoundedLattice::from_order(std::move(labels), std::move(upsets));
}

ElementSet set_of(const BoundedLattice &L,
                  std::initializer_list<const char *> labels) {
  ElementSet out;
  for (const char *l : labels) {
    out.insert(id(L, l));
  }
  return out;
}

ElementId id(const BoundedLattice &L, const char *label) {
  const auto found = L.find(label);
  if (!found) {
    throw std::invalid_argument(std::string("no element ") + label);
  }
  return *found;
}

} // namespace oracle
