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

#include <doctest.h>

#include <set>

#include <latkit/canonical.hpp>
#include <latkit/corpus.hpp>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace latkit;

TEST_CASE("constructors") {
  const BoundedLattice c4 = make_chain(4);
  CHECK(c4.size() == 4);
  CHECK(c4.labels() == std::vector<std::string>{"0", "c1", "c2", "1"});

  const BoundedLattice b3 = make_boolean(3);
  CHECK(b3.size() == 8);
  CHECK(is_distributive(b3));

  const BoundedLattice m4 = make_Mn(4);
  CHECK(m4.size() == 6);
  CHECK(is_Mn_shape(m4));
  CHECK_FALSE(is_Mn_shape(make_N5()));

  CHECK(make_fig2().size() == 12);
  CHECK(isomorphic(make_M3(), make_Mn(3)));
  CHECK(isomorphic(make_boolean(1), make_chain(2)));
}

TEST_CASE("constructor parameter errors") {
  CHECK(fixtures::code_of([] { make_chain(1); }) ==
        ErrorCode::InvalidParameter);
  CHECK(fixtures::code_of([] { make_Mn(1); }) == ErrorCode::InvalidParameter);
  CHECK(fixtures::code_of([] { make_boolean(7); }) ==
        ErrorCode::SizeCapExceeded);
  CHECK(fixtures::code_of([] { enumerate_lattices(1); }) ==
        ErrorCode::InvalidParameter);
  CHECK(fixtures::code_of([] {
          direct_product(make_boolean(4), make_boolean(3));
        }) == ErrorCode::SizeCapExceeded);
}

TEST_CASE("products") {
  CHECK(isomorphic(make_fig2(), direct_product(make_Mn(4), make_chain(2))));
  CHECK(isomorphic(direct_product(make_chain(2), make_chain(2)),
                   make_boolean(2)));
  CHECK(isomorphic(direct_product(make_boolean(2), make_chain(2)),
                   make_boolean(3)));
  const BoundedLattice p = direct_product(make_chain(2), make_chain(3));
  CHECK(p.size() == 6);
  CHECK(p.find("(0,c1)").has_value());
}

TEST_CASE("enumeration counts match the naive classification") {
  for (std::size_t n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const auto lattices = enumerate_lattices(n);
    CHECK(lattices.size() == oracle::lattice_classes(n).size());
  }
  // Published census values for unlabelled lattices.
  CHECK(enumerate_lattices(2).size() == 1);
  CHECK(enumerate_lattices(3).size() == 1);
  CHECK(enumerate_lattices(4).size() == 2);
  CHECK(enumerate_lattices(5).size() == 5);
  CHECK(enumerate_lattices(6).size() == 15);
  CHECK(enumerate_lattices(7).size() == 53);
}

TEST_CASE("enumerated lattices are pairwise non-isomorphic") {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::set<CanonicalForm> seen;
    for (const BoundedLattice &L : enumerate_lattices(n)) {
      CHECK(L.size() == n);
      CHECK(seen.insert(canonical_form(L)).second);
    }
  }
}

TEST_CASE("enumeration filters by tags") {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::size_t complemented = 0;
    for (const BoundedLattice &L : enumerate_lattices(n)) {
      complemented += is_complemented(L) ? 1 : 0;
    }
    const auto filtered = enumerate_lattices(n, {Tag::Complemented});
    CHECK(filtered.size() == complemented);
    for (const BoundedLattice &L : filtered) {
      CHECK(is_complemented(L));
    }
  }
  const auto cm = enumerate_lattices(5, {Tag::Complemented, Tag::Modular});
  REQUIRE(cm.size() == 1);
  CHECK(isomorphic(cm[0], make_M3()));
}

TEST_CASE("tags") {
  const TagSet n5 = compute_tags(make_N5());
  CHECK(n5.has(Tag::Complemented));
  CHECK_FALSE(n5.has(Tag::Modular));
  CHECK_FALSE(n5.has(Tag::DblplusIdentity));
  const TagSet fig2 = compute_tags(make_fig2());
  CHECK(fig2.includes({Tag::Complemented, Tag::Modular, Tag::DblplusIdentity}));
  CHECK_FALSE(fig2.has(Tag::Distributive));
  CHECK(compute_tags(make_boolean(3)) == TagSet{Tag::Complemented, Tag::Modular,
                                                Tag::Distributive,
                                                Tag::DblplusIdentity});
  CHECK(to_string(Tag::Modular) == "modular");
}

TEST_CASE("named lattices") {
  CHECK(isomorphic(named_lattice("N5").lattice, make_N5()));
  CHECK(isomorphic(named_lattice("M:5").lattice, make_Mn(5)));
  CHECK(isomorphic(named_lattice("B:2").lattice, make_boolean(2)));
  CHECK(named_lattice("chain:6").lattice.size() == 6);
  CHECK(named_lattice("fig2").lattice.size() == 12);
  for (const char *bad : {"N6", "M:", "M:x", "chain:1", "B:9", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(named_lattice(bad), Error);
  }
}

TEST_CASE("default corpus") {
  const auto corpus = default_corpus(6);
  std::set<CanonicalForm> seen;
  std::set<std::string> names;
  for (const CorpusEntry &e : corpus) {
    CHECK(seen.insert(canonical_form(e.lattice)).second);
    CHECK(names.insert(e.name).second);
    CHECK(e.tags == compute_tags(e.lattice));
    CHECK(e.tags.has(Tag::Complemented));
  }
  CHECK(names.count("N5") == 1);
  CHECK(names.count("fig2") == 1);
  CHECK(corpus.size() == 15);
  CHECK(default_corpus(7).size() == 32);
}
