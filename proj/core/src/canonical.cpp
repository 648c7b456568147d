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

#include <latkit/canonical.hpp>

#include <algorithm>
#include <numeric>
#include <utility>

namespace latkit {

namespace {

std::vector<std::size_t> depths(const BoundedLattice &L) {
  const std::size_t n = L.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return L.up_set(ElementId(a)).size() < L.up_set(ElementId(b)).size();
  });
  std::vector<std::size_t> depth(n, 0);
  for (std::size_t a : order) {
    for (ElementId b : L.up_set(ElementId(a))) {
      if (b.index() != a) {
        depth[a] = std::max(depth[a], depth[b.index()] + 1);
      }
    }
  }
  return depth;
}

class Search {
public:
  Search(const BoundedLattice &L, std::vector<std::vector<ElementId>> candidates)
      : L_(L), candidates_(std::move(candidates)), placed_(L.size()),
        code_(2 * L.size(), 0) {}

  void run() { descend(0, false); }

  std::vector<std::uint64_t> bestCode;
  std::vector<ElementId> bestLabeling;

private:
  // Returns true when the best encoding was replaced somewhere below.
  bool descend(std::size_t p, bool tied) {
    const std::size_t n = L_.size();
    if (p == n) {
      if (tied) {
        return false;
      }
      bestCode = code_;
      bestLabeling = placed_;
      haveBest_ = true;
      return true;
    }
    bool updated = false;
    for (ElementId e : candidates_[p]) {
      if (used_.contains(e)) {
        continue;
      }
      std::uint64_t below = 0;
      std::uint64_t above = 0;
      for (std::size_t j = 0; j < p; ++j) {
        if (L_.leq(placed_[j], e)) {
          below |= std::uint64_t{1} << j;
        }
        if (L_.leq(e, placed_[j])) {
          above |= std::uint64_t{1} << j;
        }
      }
      bool childTied = false;
      if (haveBest_ && tied) {
        const auto mine = std::make_pair(below, above);
        const auto theirs = std::make_pair(bestCode[2 * p], bestCode[2 * p + 1]);
        if (theirs < mine) {
          continue;
        }
        childTied = mine == theirs;
      }
      placed_[p] = e;
      code_[2 * p] = below;
      code_[2 * p + 1] = above;
      used_.insert(e);
      if (descend(p + 1, childTied)) {
        updated = true;
        tied = true;
      }
      used_.erase(e);
    }
    return updated;
  }

  const BoundedLattice &L_;
  std::vector<std::vector<ElementId>> candidates_;
  std::vector<ElementId> placed_;
  std::vector<std::uint64_t> code_;
  ElementSet used_;
  bool haveBest_ = false;
};

} // namespace

CanonicalForm canonical_form(const BoundedLattice &L) {
  const std::size_t n = L.size();
  const auto depth = depths(L);
  std::vector<std::uint64_t> inv(n);
  for (ElementId a : L.elements()) {
    std::uint64_t lowerCovers = 0;
    std::uint64_t upperCovers = 0;
    for (ElementId b : L.down_set(a)) {
      if (b != a && (L.up_set(b) & L.down_set(a)).size() == 2) {
        ++lowerCovers;
      }
    }
    for (ElementId b : L.up_set(a)) {
      if (b != a && (L.up_set(a) & L.down_set(b)).size() == 2) {
        ++upperCovers;
      }
    }
    inv[a.index()] = (std::uint64_t{L.height(a)} << 40) |
                     (std::uint64_t{depth[a.index()]} << 32) |
                     (std::uint64_t{L.down_set(a).size()} << 24) |
                     (std::uint64_t{L.up_set(a).size()} << 16) |
                     (lowerCovers << 8) | upperCovers;
  }

  CanonicalForm form;
  form.invariants = inv;
  std::sort(form.invariants.begin(), form.invariants.end());

  std::vector<std::vector<ElementId>> candidates(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (ElementId a : L.elements()) {
      if (inv[a.index()] == form.invariants[p]) {
        candidates[p].push_back(a);
      }
    }
  }
  Search search(L, std::move(candidates));
  search.run();
  form.code = std::move(search.bestCode);
  form.labeling = std::move(search.bestLabeling);
  return form;
}

bool isomorphic(const BoundedLattice &a, const BoundedLattice &b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

} // namespace latkit
