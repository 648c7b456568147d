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

#include <latkit/lattice.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <latkit/error.hpp>

namespace latkit {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxElements) {
    std::ostringstream oss;
    oss << "lattice has " << n << " elements, the cap is " << kMaxElements;
    throw Error(ErrorCode::SizeCapExceeded, oss.str());
  }
}

} // namespace

BoundedLattice BoundedLattice::from_covers(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::size_t, std::size_t>> &covers) {
  const std::size_t n = labels.size();
  check_size(n);

  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto &[lo, hi] : covers) {
    if (lo >= n || hi >= n) {
      throw Error(ErrorCode::InvalidInput, "cover references unknown element");
    }
    succ[lo].push_back(hi);
    ++indegree[hi];
  }

  // Kahn's algorithm; whatever is left over sits on or above a cycle.
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<std::size_t> ready;
  for (std::size_t i = n; i-- > 0;) {
    if (indegree[i] == 0) {
      ready.push_back(i);
    }
  }
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (std::size_t w : succ[v]) {
      if (--indegree[w] == 0) {
        ready.push_back(w);
      }
    }
  }
  if (order.size() != n) {
    std::size_t stuck = 0;
    while (indegree[stuck] == 0) {
      ++stuck;
    }
    throw Error(ErrorCode::CycleDetected,
                "covers contain a cycle involving '" + labels[stuck] + "'");
  }

  std::vector<ElementSet> upsets(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    ElementSet up = ElementSet::of(ElementId(*it));
    for (std::size_t w : succ[*it]) {
      up |= upsets[w];
    }
    upsets[*it] = up;
  }
  return from_order(std::move(labels), std::move(upsets));
}

BoundedLattice BoundedLattice::from_order(std::vector<std::string> labels,
                                          std::vector<ElementSet> upsets) {
  const std::size_t n = labels.size();
  check_size(n);
  if (upsets.size() != n) {
    throw Error(ErrorCode::InvalidInput, "order matrix has wrong shape");
  }
  if (n == 0) {
    throw Error(ErrorCode::NoBounds, "lattice has no elements");
  }

  BoundedLattice L;
  L.labels_ = std::move(labels);
  L.upsets_ = std::move(upsets);
  L.downsets_.assign(n, ElementSet{});
  const ElementSet all = ElementSet::all(n);
  for (std::size_t a = 0; a < n; ++a) {
    const ElementId ea(a);
    const ElementSet up = L.upsets_[a];
    if (!up.contains(ea) || !up.subset_of(all)) {
      throw Error(ErrorCode::InvalidInput, "order is not reflexive");
    }
    for (ElementId b : up) {
      if (b != ea && L.upsets_[b.index()].contains(ea)) {
        throw Error(ErrorCode::InvalidInput, "order is not antisymmetric");
      }
      if (!L.upsets_[b.index()].subset_of(up)) {
        throw Error(ErrorCode::InvalidInput, "order is not transitive");
      }
      L.downsets_[b.index()].insert(ea);
    }
  }

  std::optional<ElementId> bottom;
  std::optional<ElementId> top;
  for (std::size_t a = 0; a < n; ++a) {
    if (L.upsets_[a] == all) {
      bottom = ElementId(a);
    }
    if (L.downsets_[a] == all) {
      top = ElementId(a);
    }
  }
  if (!bottom || !top) {
    throw Error(ErrorCode::NoBounds,
                !bottom ? "no unique minimum" : "no unique maximum");
  }
  L.bottom_ = *bottom;
  L.top_ = *top;

  L.meet_.assign(n * n, ElementId{});
  L.join_.assign(n * n, ElementId{});
  auto greatest = [&](ElementSet bounds) -> std::optional<ElementId> {
    for (ElementId c : bounds) {
      if (bounds.subset_of(L.downsets_[c.index()])) {
        return c;
      }
    }
    return std::nullopt;
  };
  auto least = [&](ElementSet bounds) -> std::optional<ElementId> {
    for (ElementId c : bounds) {
      if (bounds.subset_of(L.upsets_[c.index()])) {
        return c;
      }
    }
    return std::nullopt;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const auto glb = greatest(L.downsets_[a] & L.downsets_[b]);
      const auto lub = least(L.upsets_[a] & L.upsets_[b]);
      if (!glb || !lub) {
        std::ostringstream oss;
        oss << "elements '" << L.labels_[a] << "' and '" << L.labels_[b]
            << "' have no " << (!glb ? "greatest lower" : "least upper")
            << " bound";
        throw Error(ErrorCode::NotALattice, oss.str());
      }
      L.meet_[a * n + b] = L.meet_[b * n + a] = *glb;
      L.join_[a * n + b] = L.join_[b * n + a] = *lub;
    }
  }

  if (L.bottom_ == L.top_) {
    throw Error(ErrorCode::TrivialLattice, "bottom equals top");
  }

  // Heights, visiting elements by increasing down-set size (a linear
  // extension of the order).
  std::vector<std::size_t> byDown(n);
  std::iota(byDown.begin(), byDown.end(), std::size_t{0});
  std::stable_sort(byDown.begin(), byDown.end(),
                   [&](std::size_t x, std::size_t y) {
                     return L.downsets_[x].size() < L.downsets_[y].size();
                   });
  L.heights_.assign(n, 0);
  for (std::size_t a : byDown) {
    std::size_t h = 0;
    for (ElementId b : L.downsets_[a]) {
      if (b.index() != a) {
        h = std::max(h, L.heights_[b.index()] + 1);
      }
    }
    L.heights_[a] = h;
  }
  return L;
}

std::optional<ElementId> BoundedLattice::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) {
      return ElementId(i);
    }
  }
  return std::nullopt;
}

std::vector<std::pair<ElementId, ElementId>> BoundedLattice::covers() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (ElementId a : elements()) {
    for (ElementId b : up_set(a)) {
      if (b != a && (up_set(a) & down_set(b)).size() == 2) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

BoundedLattice build_from_covers(std::vector<std::string> labels,
                                 const std::vector<Cover> &covers) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty() || labels[i].find('<') != std::string::npos) {
      throw Error(ErrorCode::InvalidInput,
                  "invalid element name '" + labels[i] + "'");
    }
    if (!index.emplace(labels[i], i).second) {
      throw Error(ErrorCode::InvalidInput,
                  "duplicate element name '" + labels[i] + "'");
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(covers.size());
  for (const Cover &c : covers) {
    auto lo = index.find(c.lower);
    auto hi = index.find(c.upper);
    if (lo == index.end() || hi == index.end()) {
      throw Error(ErrorCode::InvalidInput,
                  "cover " + c.lower + "<" + c.upper +
                      " references an undeclared element");
    }
    pairs.emplace_back(lo->second, hi->second);
  }
  return BoundedLattice::from_covers(std::move(labels), pairs);
}

bool is_modular(const BoundedLattice &L) {
  for (ElementId a : L.elements()) {
    for (ElementId b : L.up_set(a)) {
      for (ElementId x : L.elements()) {
        if (L.join(a, L.meet(x, b)) != L.meet(L.join(a, x), b)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_distributive(const BoundedLattice &L) {
  for (ElementId x : L.elements()) {
    for (ElementId y : L.elements()) {
      for (ElementId z : L.elements()) {
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_complemented(const BoundedLattice &L) {
  for (ElementId a : L.elements()) {
    bool found = false;
    for (ElementId x : L.elements()) {
      if (L.join(a, x) == L.top() && L.meet(a, x) == L.bottom()) {
        found = true;
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

bool is_Mn_shape(const BoundedLattice &L) {
  if (L.size() < 4) {
    return false;
  }
  for (ElementId x : L.elements()) {
    if (x == L.bottom() || x == L.top()) {
      continue;
    }
    if (L.down_set(x).size() != 2 || L.up_set(x).size() != 2) {
      return false;
    }
  }
  return true;
}

bool is_antichain(const BoundedLattice &L, ElementSet S) {
  for (ElementId a : S) {
    if ((L.up_set(a) & S) != ElementSet::of(a)) {
      return false;
    }
  }
  return true;
}

bool is_convex(const BoundedLattice &L, ElementSet S) {
  for (ElementId b : S) {
    for (ElementId c : L.up_set(b) & S) {
      if (!(L.up_set(b) & L.down_set(c)).subset_of(S)) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::array<ElementId, 5>>
find_n5_through_bounds(const BoundedLattice &L) {
  const ElementId zero = L.bottom();
  const ElementId one = L.top();
  auto complementary = [&](ElementId x, ElementId y) {
    return L.join(x, y) == one && L.meet(x, y) == zero;
  };
  for (ElementId e : L.elements()) {
    if (e == zero || e == one) {
      continue;
    }
    for (ElementId f : L.up_set(e)) {
      if (f == e || f == one) {
        continue;
      }
      for (ElementId g : L.elements()) {
        if (g == zero || g == one) {
          continue;
        }
        if (complementary(e, g) && complementary(f, g)) {
          return std::array<ElementId, 5>{zero, e, f, g, one};
        }
      }
    }
  }
  return std::nullopt;
}

} // namespace latkit
