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

#include <latkit/relation.hpp>

namespace latkit {

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.rows_[i] = ElementSet::of(ElementId(i));
  }
  return r;
}

Relation Relation::full(std::size_t n) {
  Relation r(n);
  for (auto &row : r.rows_) {
    row = ElementSet::all(n);
  }
  return r;
}

Relation Relation::from_partition(std::size_t n,
                                  const std::vector<ElementSet> &blocks) {
  Relation r(n);
  for (ElementSet block : blocks) {
    for (ElementId a : block) {
      r.rows_[a.index()] |= block;
    }
  }
  return r;
}

Relation Relation::from_labels(const std::vector<std::size_t> &block) {
  const std::size_t n = block.size();
  std::vector<ElementSet> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    if (block[i] >= blocks.size()) {
      blocks.resize(block[i] + 1);
    }
    blocks[block[i]].insert(ElementId(i));
  }
  return from_partition(n, blocks);
}

bool Relation::is_reflexive() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (!rows_[i].contains(ElementId(i))) {
      return false;
    }
  }
  return true;
}

bool Relation::is_symmetric() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (ElementId j : rows_[i]) {
      if (!rows_[j.index()].contains(ElementId(i))) {
        return false;
      }
    }
  }
  return true;
}

bool Relation::is_transitive() const {
  for (const ElementSet row : rows_) {
    for (ElementId j : row) {
      if (!rows_[j.index()].subset_of(row)) {
        return false;
      }
    }
  }
  return true;
}

bool Relation::subset_of(const Relation &other) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (!rows_[i].subset_of(other.rows_[i])) {
      return false;
    }
  }
  return true;
}

Relation Relation::equivalence_closure() const {
  Relation r = *this;
  for (std::size_t i = 0; i < size(); ++i) {
    r.rows_[i].insert(ElementId(i));
    for (ElementId j : rows_[i]) {
      r.rows_[j.index()].insert(ElementId(i));
    }
  }
  // Warshall on bit rows.
  for (std::size_t k = 0; k < size(); ++k) {
    for (std::size_t i = 0; i < size(); ++i) {
      if (r.rows_[i].contains(ElementId(k))) {
        r.rows_[i] |= r.rows_[k];
      }
    }
  }
  return r;
}

std::vector<ElementSet> Relation::classes() const {
  std::vector<ElementSet> out;
  ElementSet seen;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!seen.contains(ElementId(i))) {
      out.push_back(rows_[i]);
      seen |= rows_[i];
    }
  }
  return out;
}

} // namespace latkit
