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

#ifndef LATKIT_CORPUS_HPP
#define LATKIT_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <latkit/lattice.hpp>

namespace latkit {

enum class Tag : std::uint8_t {
  Complemented = 1,
  Modular = 2,
  Distributive = 4,
  DblplusIdentity = 8,
};

std::string_view to_string(Tag t);

class TagSet {
public:
  constexpr TagSet() = default;
  constexpr TagSet(std::initializer_list<Tag> tags) {
    for (Tag t : tags) {
      insert(t);
    }
  }

  constexpr bool has(Tag t) const {
    return (bits_ & static_cast<std::uint8_t>(t)) != 0;
  }
  constexpr void insert(Tag t) { bits_ |= static_cast<std::uint8_t>(t); }
  constexpr bool includes(TagSet other) const {
    return (bits_ & other.bits_) == other.bits_;
  }
  friend constexpr bool operator==(TagSet, TagSet) = default;

  static constexpr Tag all[] = {Tag::Complemented, Tag::Modular,
                                Tag::Distributive, Tag::DblplusIdentity};

private:
  std::uint8_t bits_ = 0;
};

TagSet compute_tags(const BoundedLattice &L);

struct CorpusEntry {
  std::string name;
  BoundedLattice lattice;
  TagSet tags;
};

/// k-element chain 0 < c1 < ... < 1; k >= 2.
BoundedLattice make_chain(std::size_t k);
/// Subsets of k atoms a, b, c, ... with labels such as "ab"; bounds are "0"
/// and "1". 1 <= k <= 6.
BoundedLattice make_boolean(std::size_t k);
/// 0, n pairwise incomparable atoms a1..an, 1; n >= 2.
BoundedLattice make_Mn(std::size_t n);
/// 0 < a < c < 1 and 0 < b < 1.
BoundedLattice make_N5();
/// M_3 with atoms a, b, c.
BoundedLattice make_M3();
/// The 12-element complemented modular lattice isomorphic to M_4 x 2.
BoundedLattice make_fig2();

/// Componentwise order; labels are "(x,y)".
BoundedLattice direct_product(const BoundedLattice &a, const BoundedLattice &b);

/// Every lattice on n elements up to isomorphism having all tags in
/// `required`, in canonical-form order. Elements are added one at a time,
/// each above a down-closed set of earlier ones, and partial orders in which
/// some pair already lacks a meet are cut off. Duplicates are removed by
/// canonical form. 2 <= n <= maxElements <= 8.
std::vector<BoundedLattice> enumerate_lattices(std::size_t n,
                                               TagSet required = {},
                                               std::size_t maxElements = 7);

/// N5, M3, fig2, M:k, B:k or chain:k. Throws InvalidInput for unknown names.
CorpusEntry named_lattice(std::string_view name);

/// Named lattices (N5, M3, fig2, M:2..M:6, B:1..B:4) followed by every
/// complemented lattice with at most maxEnumerated elements not isomorphic to
/// one already listed. Enumerated entries are named "enum:<n>:<k>".
std::vector<CorpusEntry> default_corpus(std::size_t maxEnumerated = 6);

} // namespace latkit

#endif
