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

#ifndef LATKIT_LATTICE_TEXT_HPP
#define LATKIT_LATTICE_TEXT_HPP

#include <string>
#include <string_view>

#include <latkit/lattice.hpp>

namespace latkit {

struct NamedLattice {
  std::string name;
  BoundedLattice lattice;
};

/// Reads the line-oriented lattice format:
///
///   # comment
///   lattice N5
///   elements: 0 a b c 1
///   covers: 0<a a<c c<1 0<b b<1
///
/// `elements:` and `covers:` may each be repeated; their tokens accumulate.
/// Syntax errors throw ParseError with a 1-based line number; structural
/// problems surface as the errors of build_from_covers.
NamedLattice parse_lattice_text(std::string_view text);

NamedLattice read_lattice_file(const std::string &path);

/// Inverse of parse_lattice_text, emitting the Hasse covers.
std::string write_lattice_text(const BoundedLattice &L, std::string_view name);

} // namespace latkit

#endif
