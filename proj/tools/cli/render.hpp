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

#ifndef LATKIT_CLI_RENDER_HPP
#define LATKIT_CLI_RENDER_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <latkit/connectives.hpp>
#include <latkit/deduction.hpp>
#include <latkit/lattice.hpp>
#include <latkit/report.hpp>

namespace latkit::cli {

/// Right-aligned grid; the first row is the header and is followed by a rule.
/// Widths count code points, so ⁺ and ∅ occupy one column.
std::string render_grid(const std::vector<std::vector<std::string>> &rows);

/// Rows x, x⁺, x⁺⁺ over the elements in id order.
std::string plus_table(const BoundedLattice &L);

/// Rows are the left operand.
std::string operation_table(const BoundedLattice &L, Connective op);

/// "{a,b}" regardless of label length; "{}" for the empty set.
std::string braced(const BoundedLattice &L, ElementSet S);

std::string info_text(const BoundedLattice &L, std::string_view name);

/// Hasse diagram drawn bottom-up, one rank per height.
std::string to_dot(const BoundedLattice &L, std::string_view name);

std::string deductive_systems_text(const BoundedLattice &L,
                                   const DSLattice &ded, bool withOrder);

std::string closed_sets_text(const BoundedLattice &L);

std::string report_text(const BoundedLattice &L, const PropertyReport &r,
                        bool failuresOnly);

/// {"subject", "ok", "checks": [{"name", "verdict", "asserted", "witness",
/// "note"}]} with witnesses as lists of labels.
nlohmann::json report_json(const BoundedLattice &L, const PropertyReport &r);

} // namespace latkit::cli

#endif
