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

#include <latkit/lattice_text.hpp>

#include <fstream>
#include <sstream>
#include <vector>

#include <latkit/error.hpp>

namespace latkit {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string &what) {
  std::ostringstream oss;
  oss << "line " << line << ": " << what;
  throw Error(ErrorCode::ParseError, oss.str());
}

std::vector<std::string> tokens_of(std::string_view rest) {
  std::vector<std::string> out;
  std::istringstream in{std::string(rest)};
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

} // namespace

NamedLattice parse_lattice_text(std::string_view text) {
  std::string name;
  bool sawHeader = false;
  std::vector<std::string> labels;
  std::vector<Cover> covers;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') {
      continue;
    }
    std::string_view body(line);
    body.remove_prefix(start);

    if (body.starts_with("elements:")) {
      body.remove_prefix(9);
      for (auto &t : tokens_of(body)) {
        if (t.find('<') != std::string::npos) {
          fail(lineNo, "element name '" + t + "' contains '<'");
        }
        labels.push_back(std::move(t));
      }
    } else if (body.starts_with("covers:")) {
      body.remove_prefix(7);
      for (const auto &t : tokens_of(body)) {
        const auto lt = t.find('<');
        if (lt == std::string::npos || lt == 0 || lt + 1 == t.size() ||
            t.find('<', lt + 1) != std::string::npos) {
          fail(lineNo, "malformed cover '" + t + "', expected lower<upper");
        }
        covers.push_back({t.substr(0, lt), t.substr(lt + 1)});
      }
    } else {
      const auto toks = tokens_of(body);
      if (toks.front() != "lattice") {
        fail(lineNo, "unexpected '" + toks.front() + "'");
      }
      if (sawHeader) {
        fail(lineNo, "duplicate lattice header");
      }
      if (toks.size() != 2) {
        fail(lineNo, "expected 'lattice <name>'");
      }
      sawHeader = true;
      name = toks[1];
    }
  }
  if (!sawHeader) {
    fail(lineNo == 0 ? 1 : lineNo, "missing 'lattice <name>' header");
  }
  if (labels.empty()) {
    fail(lineNo, "no elements declared");
  }
  return {name, build_from_covers(std::move(labels), covers)};
}

NamedLattice read_lattice_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice_text(buf.str());
}

std::string write_lattice_text(const BoundedLattice &L, std::string_view name) {
  std::ostringstream out;
  out << "lattice " << name << "\nelements:";
  for (const auto &l : L.labels()) {
    out << ' ' << l;
  }
  out << "\ncovers:";
  for (const auto &[lo, hi] : L.covers()) {
    out << ' ' << L.label(lo) << '<' << L.label(hi);
  }
  out << '\n';
  return out.str();
}

} // namespace latkit
