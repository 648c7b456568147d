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

#include <latkit/suite.hpp>

#include <latkit/connectives.hpp>
#include <latkit/parallel.hpp>

namespace latkit {

PropertyReport verify_lattice(const BoundedLattice &L,
                              const SuiteOptions &options,
                              std::string subject) {
  PropertyReport r(std::move(subject));
  r.append(check_galois_laws(L, options.sampling));
  r.append(closure_lattice(L).axioms);
  r.append(check_plus_basics(L));
  r.append(check_modular_antichains(L));
  r.append(check_closed_element_exists(L));
  r.append(check_order_reversal_props(L));
  r.append(check_dblplus_characterization(L));
  r.append(check_implies_meet_theorem(L));
  r.append(check_implication_laws(L));
  r.append(check_minimality_equivalence(L));
  r.append(check_modus_laws(L));
  r.append(check_odot_laws(L));
  r.append(check_adjointness(L));
  r.append(check_filter_lemma(L, options.caps));
  r.append(check_congruence_kernels(L, options.caps));
  r.append(check_sp_equivalences(L, options.caps));
  r.append(check_compatible_systems(L, options.caps));
  r.append(check_system_families(L, options.caps));
  return r;
}

std::vector<PropertyReport> verify_corpus(const std::vector<CorpusEntry> &corpus,
                                          const SuiteOptions &options) {
  std::vector<PropertyReport> out(corpus.size());
  parallel_for(corpus.size(), worker_count(), [&](std::size_t i) {
    out[i] = verify_lattice(corpus[i].lattice, options, corpus[i].name);
  });
  return out;
}

} // namespace latkit
