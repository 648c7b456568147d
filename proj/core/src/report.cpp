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

#include <latkit/report.hpp>

#include <algorithm>

#include <latkit/lattice.hpp>

namespace latkit {

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::Pass:
    return "pass";
  case Verdict::Fail:
    return "fail";
  case Verdict::Skipped:
    return "skipped";
  }
  return "unknown";
}

void PropertyReport::append(const PropertyReport &other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

const Check *PropertyReport::find(std::string_view name) const {
  for (const auto &c : checks_) {
    if (c.name == name) {
      return &c;
    }
  }
  return nullptr;
}

bool PropertyReport::ok() const { return failures() == 0; }

std::size_t PropertyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check &c) {
        return c.asserted && c.verdict == Verdict::Fail;
      }));
}

Check make_check(std::string name, bool asserted,
                 std::optional<std::vector<ElementSet>> counterexample,
                 std::string note) {
  Check c;
  c.name = std::move(name);
  c.asserted = asserted;
  c.note = std::move(note);
  if (counterexample) {
    c.verdict = Verdict::Fail;
    c.witness = std::move(*counterexample);
  }
  return c;
}

std::string render_set(const BoundedLattice &L, ElementSet S) {
  if (S.empty()) {
    return "∅";
  }
  if (S.size() == 1) {
    return L.label(S.first());
  }
  const bool compact =
      std::all_of(L.labels().begin(), L.labels().end(),
                  [](const std::string &l) { return l.size() == 1; });
  std::string out = compact ? "" : "{";
  bool first = true;
  for (ElementId x : S) {
    if (!compact && !first) {
      out += ',';
    }
    out += L.label(x);
    first = false;
  }
  if (!compact) {
    out += '}';
  }
  return out;
}

std::string render_witness(const BoundedLattice &L,
                           const std::vector<ElementSet> &witness) {
  std::string out;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += render_set(L, witness[i]);
  }
  return out;
}

} // namespace latkit
