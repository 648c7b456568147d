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

#ifndef LATKIT_REPORT_HPP
#define LATKIT_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <latkit/element_set.hpp>

namespace latkit {

class BoundedLattice;

enum class Verdict { Pass, Fail, Skipped };

std::string_view to_string(Verdict v);

/// One named statement evaluated on one lattice.
///
/// Only asserted checks decide overall success. A check is left unasserted
/// when the lattice falls outside the statement's hypotheses, or when the
/// check pins a known non-theorem (its verdict then records whether the
/// expected counterexample was observed).
struct Check {
  std::string name;
  Verdict verdict = Verdict::Pass;
  bool asserted = true;
  /// First counterexample in id order (or the pinned witness), each entry a
  /// set so that both elements and subsets can be reported.
  std::vector<ElementSet> witness;
  std::string note;
};

class PropertyReport {
public:
  PropertyReport() = default;
  explicit PropertyReport(std::string subject) : subject_(std::move(subject)) {}

  const std::string &subject() const { return subject_; }
  const std::vector<Check> &checks() const { return checks_; }

  Check &add(Check c) { return checks_.emplace_back(std::move(c)); }
  void append(const PropertyReport &other);

  /// The named check, or nullptr.
  const Check *find(std::string_view name) const;

  /// No asserted check failed.
  bool ok() const;
  std::size_t failures() const;

private:
  std::string subject_;
  std::vector<Check> checks_;
};

/// Builds a check from the outcome of a universally quantified scan: Pass
/// when no counterexample was found.
Check make_check(std::string name, bool asserted,
                 std::optional<std::vector<ElementSet>> counterexample,
                 std::string note = {});

/// Compact rendering of a set: a singleton prints as its label, larger
/// sets as concatenated labels ("ac") when every label of L is a single
/// character and as "{a1,a2}" otherwise; the empty set prints as "∅".
std::string render_set(const BoundedLattice &L, ElementSet S);

std::string render_witness(const BoundedLattice &L,
                           const std::vector<ElementSet> &witness);

} // namespace latkit

#endif
