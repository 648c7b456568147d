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

#ifndef LATKIT_SUITE_HPP
#define LATKIT_SUITE_HPP

#include <cstddef>
#include <vector>

#include <latkit/complementation.hpp>
#include <latkit/corpus.hpp>
#include <latkit/deduction.hpp>
#include <latkit/report.hpp>

namespace latkit {

struct SuiteOptions {
  SubsetSampling sampling;
  DeductionCaps caps;
};

/// Every check of the library on one lattice. Each check decides from the
/// lattice's own properties whether it is asserted.
PropertyReport verify_lattice(const BoundedLattice &L,
                              const SuiteOptions &options = {},
                              std::string subject = {});

/// verify_lattice on each entry, fanned out over worker_count() threads.
/// Reports come back in corpus order.
std::vector<PropertyReport> verify_corpus(const std::vector<CorpusEntry> &corpus,
                                          const SuiteOptions &options = {});

} // namespace latkit

#endif
