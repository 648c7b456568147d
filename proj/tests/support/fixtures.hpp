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

#ifndef LATKIT_TESTS_FIXTURES_HPP
#define LATKIT_TESTS_FIXTURES_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include <latkit/corpus.hpp>
#include <latkit/error.hpp>

namespace fixtures {

// Named lattices plus every complemented lattice up to maxEnumerated
// elements, deduplicated.
inline std::vector<latkit::CorpusEntry> corpus(std::size_t maxEnumerated = 6) {
  return latkit::default_corpus(maxEnumerated);
}

// Every lattice (complemented or not) up to maxN elements.
inline std::vector<latkit::BoundedLattice> all_lattices(std::size_t maxN) {
  std::vector<latkit::BoundedLattice> out;
  for (std::size_t n = 2; n <= maxN; ++n) {
    for (auto &L : latkit::enumerate_lattices(n, {}, maxN)) {
      out.push_back(std::move(L));
    }
  }
  return out;
}

inline latkit::ErrorCode code_of(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const latkit::Error &e) {
    return e.code();
  }
  throw std::logic_error("no latkit::Error raised");
}

} // namespace fixtures

#endif
