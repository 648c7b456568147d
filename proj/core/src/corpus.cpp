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

#include <latkit/corpus.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include <latkit/canonical.hpp>
#include <latkit/complementation.hpp>
#include <latkit/error.hpp>

namespace latkit {

namespace {

void require(bool ok, ErrorCode code, const std::string &message) {
  if (!ok) {
    throw Error(code, message);
  }
}

std::vector<std::pair<std::size_t, std::size_t>>
pairs(std::initializer_list<std::pair<std::size_t, std::size_t>> xs) {
  return {xs};
}

} // namespace

std::string_view to_string(Tag t) {
  switch (t) {
  case Tag::Complemented:
    return "complemented";
  case Tag::Modular:
    return "modular";
  case Tag::Distributive:
    return "distributive";
  case Tag::DblplusIdentity:
    return "dblplus_identity";
  }
  return "unknown";
}

TagSet compute_tags(const BoundedLattice &L) {
  TagSet t;
  if (is_complemented(L)) {
    t.insert(Tag::Complemented);
  }
  if (is_modular(L)) {
    t.insert(Tag::Modular);
  }
  if (is_distributive(L)) {
    t.insert(Tag::Distributive);
  }
  if (satisfies_dblplus_identity(L)) {
    t.insert(Tag::DblplusIdentity);
  }
  return t;
}

BoundedLattice make_chain(std::size_t k) {
  require(k >= 2, ErrorCode::InvalidParameter,
          "chain needs at least 2 elements");
  require(k <= kMaxElements, ErrorCode::SizeCapExceeded,
          "chain longer than the element cap");
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i + 1 < k; ++i) {
    labels.push_back("c" + std::to_string(i));
  }
  labels.push_back("1");
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    covers.emplace_back(i, i + 1);
  }
  return BoundedLattice::from_covers(std::move(labels), covers);
}

BoundedLattice make_boolean(std::size_t k) {
  require(k >= 1, ErrorCode::InvalidParameter,
          "Boolean lattice needs at least 1 atom");
  require(k <= 6, ErrorCode::SizeCapExceeded,
          "Boolean lattice with more than 64 elements");
  const std::size_t m = std::size_t{1} << k;
  std::vector<std::string> labels(m);
  std::vector<ElementSet> upsets(m);
  for (std::size_t s = 0; s < m; ++s) {
    if (s == 0) {
      labels[s] = "0";
    } else if (s == m - 1) {
      labels[s] = "1";
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        if (s >> i & 1U) {
          labels[s] += static_cast<char>('a' + i);
        }
      }
    }
    for (std::size_t t = 0; t < m; ++t) {
      if ((s & t) == s) {
        upsets[s].insert(ElementId(t));
      }
    }
  }
  return BoundedLattice::from_order(std::move(labels), std::move(upsets));
}

BoundedLattice make_Mn(std::size_t n) {
  require(n >= 2, ErrorCode::InvalidParameter, "M_n needs n > 1");
  require(n + 2 <= kMaxElements, ErrorCode::SizeCapExceeded,
          "M_n larger than the element cap");
  std::vector<std::string> labels{"0"};
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 1; i <= n; ++i) {
    labels.push_back("a" + std::to_string(i));
    covers.emplace_back(0, i);
    covers.emplace_back(i, n + 1);
  }
  labels.push_back("1");
  return BoundedLattice::from_covers(std::move(labels), covers);
}

BoundedLattice make_N5() {
  return BoundedLattice::from_covers(
      {"0", "a", "b", "c", "1"},
      pairs({{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}));
}

BoundedLattice make_M3() {
  return BoundedLattice::from_covers(
      {"0", "a", "b", "c", "1"},
      pairs({{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

BoundedLattice make_fig2() {
  // 0 a b c d e f g h i j 1
  // 0 1 2 3 4 5 6 7 8 9 10 11
  return BoundedLattice::from_covers(
      {"0", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "1"},
      pairs({{0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 5},  {1, 6},
             {2, 6},  {3, 6},  {4, 6},  {5, 7},  {5, 8},  {5, 9},
             {5, 10}, {1, 7},  {2, 8},  {3, 9},  {4, 10}, {6, 11},
             {7, 11}, {8, 11}, {9, 11}, {10, 11}}));
}

BoundedLattice direct_product(const BoundedLattice &a,
                              const BoundedLattice &b) {
  const std::size_t n = a.size() * b.size();
  require(n <= kMaxElements, ErrorCode::SizeCapExceeded,
          "product larger than the element cap");
  std::vector<std::string> labels;
  std::vector<ElementSet> upsets(n);
  for (ElementId x : a.elements()) {
    for (ElementId y : b.elements()) {
      const std::size_t i = x.index() * b.size() + y.index();
      labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
      for (ElementId u : a.up_set(x)) {
        for (ElementId v : b.up_set(y)) {
          upsets[i].insert(ElementId(u.index() * b.size() + v.index()));
        }
      }
    }
  }
  return BoundedLattice::from_order(std::move(labels), std::move(upsets));
}

std::vector<BoundedLattice> enumerate_lattices(std::size_t n, TagSet required,
                                               std::size_t maxElements) {
  require(n >= 2, ErrorCode::InvalidParameter,
          "lattices need at least 2 elements");
  require(maxElements <= 8, ErrorCode::InvalidParameter,
          "enumeration cap cannot exceed 8");
  require(n <= maxElements, ErrorCode::SizeCapExceeded,
          "enumeration limited to " + std::to_string(maxElements) +
              " elements");

  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) {
    labels.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  }
  labels.push_back("1");

  // down[i] includes i itself.
  std::vector<ElementSet> down(n);
  down[0] = ElementSet::of(ElementId(0));
  std::map<CanonicalForm, BoundedLattice> found;

  auto emit = [&] {
    down[n - 1] = ElementSet::all(n);
    std::vector<ElementSet> up(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (ElementId j : down[i]) {
        up[j.index()].insert(ElementId(i));
      }
    }
    BoundedLattice L = BoundedLattice::from_order(labels, std::move(up));
    if (compute_tags(L).includes(required)) {
      found.emplace(canonical_form(L), std::move(L));
    }
  };

  // Greatest element of S under the order so far, if any.
  auto has_max = [&](ElementSet S) {
    for (ElementId m : S) {
      if (S.subset_of(down[m.index()])) {
        return true;
      }
    }
    return false;
  };

  auto rec = [&](auto &&self, std::size_t i) -> void {
    if (i == n - 1) {
      emit();
      return;
    }
    // Strict down-set of i: a down-closed subset of 0..i-1 containing 0.
    const std::size_t free = i - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
      ElementSet below = ElementSet::from_bits(mask << 1 | 1U);
      bool closed = true;
      for (ElementId j : below) {
        closed = closed && down[j.index()].subset_of(below);
      }
      if (!closed) {
        continue;
      }
      // Elements added later are never below i, so every meet involving i
      // must already exist.
      ElementSet self_down = below;
      self_down.insert(ElementId(i));
      down[i] = self_down;
      bool meets = true;
      for (std::size_t j = 0; j < i && meets; ++j) {
        meets = has_max(self_down & down[j]);
      }
      if (meets) {
        self(self, i + 1);
      }
    }
  };
  if (n == 2) {
    emit();
  } else {
    rec(rec, 1);
  }

  std::vector<BoundedLattice> out;
  out.reserve(found.size());
  for (auto &entry : found) {
    out.push_back(std::move(entry.second));
  }
  return out;
}

CorpusEntry named_lattice(std::string_view name) {
  auto parameter = [&](std::string_view prefix) -> std::size_t {
    const std::string_view digits = name.substr(prefix.size());
    std::size_t value = 0;
    const auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    require(ec == std::errc() && end == digits.data() + digits.size() &&
                !digits.empty(),
            ErrorCode::InvalidInput,
            "bad parameter in lattice name '" + std::string(name) + "'");
    return value;
  };

  BoundedLattice L = [&] {
    if (name == "N5") {
      return make_N5();
    }
    if (name == "M3") {
      return make_M3();
    }
    if (name == "fig2") {
      return make_fig2();
    }
    if (name.starts_with("M:")) {
      return make_Mn(parameter("M:"));
    }
    if (name.starts_with("B:")) {
      return make_boolean(parameter("B:"));
    }
    if (name.starts_with("chain:")) {
      return make_chain(parameter("chain:"));
    }
    throw Error(ErrorCode::InvalidInput,
                "unknown lattice '" + std::string(name) + "'");
  }();
  TagSet tags = compute_tags(L);
  return CorpusEntry{std::string(name), std::move(L), tags};
}

std::vector<CorpusEntry> default_corpus(std::size_t maxEnumerated) {
  std::vector<CorpusEntry> out;
  std::vector<CanonicalForm> seen;
  auto add = [&](std::string name, BoundedLattice L) {
    CanonicalForm form = canonical_form(L);
    if (std::find(seen.begin(), seen.end(), form) != seen.end()) {
      return;
    }
    seen.push_back(std::move(form));
    TagSet tags = compute_tags(L);
    out.push_back(CorpusEntry{std::move(name), std::move(L), tags});
  };

  for (const char *name :
       {"N5", "M3", "fig2", "M:2", "M:4", "M:5", "M:6", "B:1", "B:2", "B:3",
        "B:4"}) {
    CorpusEntry e = named_lattice(name);
    add(std::move(e.name), std::move(e.lattice));
  }
  for (std::size_t n = 2; n <= maxEnumerated; ++n) {
    const auto all =
        enumerate_lattices(n, {Tag::Complemented}, std::max<std::size_t>(
                                                        maxEnumerated, 7));
    for (std::size_t k = 0; k < all.size(); ++k) {
      std::ostringstream name;
      name << "enum:" << n << ":" << k;
      add(name.str(), all[k]);
    }
  }
  return out;
}

} // namespace latkit
