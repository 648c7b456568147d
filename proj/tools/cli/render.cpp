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

#include "render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <latkit/complementation.hpp>
#include <latkit/corpus.hpp>

namespace latkit::cli {

namespace {

std::size_t width(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + '"';
}

} // namespace

std::string render_grid(const std::vector<std::vector<std::string>> &rows) {
  std::vector<std::size_t> widths;
  for (const auto &row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], width(row[c]));
    }
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const std::string &cell = rows[r][c];
      const std::string pad(widths[c] - width(cell), ' ');
      if (c == 0) {
        os << cell << pad;
      } else {
        os << " | " << pad << cell;
      }
    }
    os << '\n';
    if (r == 0) {
      for (std::size_t c = 0; c < widths.size(); ++c) {
        os << (c == 0 ? "" : "-+-") << std::string(widths[c], '-');
      }
      os << '\n';
    }
  }
  return os.str();
}

std::string plus_table(const BoundedLattice &L) {
  const ComplementTable comp(L);
  std::vector<std::vector<std::string>> rows(3);
  rows[0].push_back("x");
  rows[1].push_back("x⁺");
  rows[2].push_back("x⁺⁺");
  for (ElementId x : L.elements()) {
    const ElementSet p = comp.of(x);
    rows[0].push_back(L.label(x));
    rows[1].push_back(render_set(L, p));
    rows[2].push_back(render_set(L, comp.plus(p)));
  }
  return render_grid(rows);
}

std::string operation_table(const BoundedLattice &L, Connective op) {
  const OpTable t = op_table(L, op);
  std::vector<std::vector<std::string>> rows;
  rows.emplace_back();
  rows[0].push_back(op == Connective::Implies ? "→" : "⊙");
  for (ElementId y : L.elements()) {
    rows[0].push_back(L.label(y));
  }
  for (ElementId x : L.elements()) {
    auto &row = rows.emplace_back();
    row.push_back(L.label(x));
    for (ElementId y : L.elements()) {
      row.push_back(render_set(L, t.at(x, y)));
    }
  }
  return render_grid(rows);
}

std::string braced(const BoundedLattice &L, ElementSet S) {
  std::string out = "{";
  bool first = true;
  for (ElementId x : S) {
    out += (first ? "" : ",") + L.label(x);
    first = false;
  }
  return out + "}";
}

std::string info_text(const BoundedLattice &L, std::string_view name) {
  const TagSet tags = compute_tags(L);
  std::vector<std::string> summary;
  summary.push_back(tags.has(Tag::Complemented) ? "complemented"
                                                : "not complemented");
  summary.push_back(tags.has(Tag::Modular) ? "modular" : "non-modular");
  if (tags.has(Tag::Distributive)) {
    summary.push_back("distributive");
  }
  if (tags.has(Tag::DblplusIdentity)) {
    summary.push_back("x⁺⁺≈x");
  }

  std::ostringstream os;
  os << "lattice " << name << '\n'
     << "elements: " << L.size() << '\n'
     << "bottom: " << L.label(L.bottom()) << '\n'
     << "top: " << L.label(L.top()) << '\n'
     << "covers: " << L.covers().size() << '\n'
     << "complemented: " << yes_no(tags.has(Tag::Complemented)) << '\n'
     << "modular: " << yes_no(tags.has(Tag::Modular)) << '\n'
     << "distributive: " << yes_no(tags.has(Tag::Distributive)) << '\n'
     << "x⁺⁺≈x: " << yes_no(tags.has(Tag::DblplusIdentity)) << '\n'
     << "tags:";
  for (std::size_t i = 0; i < summary.size(); ++i) {
    os << (i == 0 ? " " : ", ") << summary[i];
  }
  os << '\n';
  return os.str();
}

std::string to_dot(const BoundedLattice &L, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n"
     << "  rankdir=BT;\n"
     << "  node [shape=plaintext];\n";
  std::map<std::size_t, std::vector<ElementId>> ranks;
  for (ElementId x : L.elements()) {
    os << "  n" << x.index() << " [label=" << dot_quote(L.label(x)) << "];\n";
    ranks[L.height(x)].push_back(x);
  }
  for (const auto &[height, members] : ranks) {
    if (members.size() < 2) {
      continue;
    }
    os << "  { rank=same;";
    for (ElementId x : members) {
      os << " n" << x.index() << ';';
    }
    os << " }\n";
  }
  for (const auto &[lo, hi] : L.covers()) {
    os << "  n" << lo.index() << " -> n" << hi.index() << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string deductive_systems_text(const BoundedLattice &L,
                                   const DSLattice &ded, bool withOrder) {
  std::ostringstream os;
  os << ded.size() << " deductive systems\n";
  std::vector<std::vector<std::string>> rows{{"", "system", "compatible"}};
  for (std::size_t i = 0; i < ded.size(); ++i) {
    rows.push_back({"D" + std::to_string(i), braced(L, ded.systems[i]),
                    yes_no(is_compatible_ds(L, ded.systems[i]))});
  }
  os << render_grid(rows);
  if (withOrder) {
    os << "covers:";
    const BoundedLattice order = ded.as_lattice();
    for (const auto &[lo, hi] : order.covers()) {
      os << ' ' << order.label(lo) << '<' << order.label(hi);
    }
    os << '\n';
    if (is_Mn_shape(L)) {
      const std::size_t atoms = L.size() - 2;
      os << "Boolean 2^" << atoms << ": "
         << yes_no(ds_lattice_is_boolean_2n(L)) << '\n';
    }
  }
  return os.str();
}

std::string closed_sets_text(const BoundedLattice &L) {
  const ClosureReport cl = closure_lattice(L);
  std::ostringstream os;
  os << cl.size() << " closed sets\n";
  std::vector<std::vector<std::string>> rows{{"", "set", "complement"}};
  for (std::size_t i = 0; i < cl.size(); ++i) {
    rows.push_back({"C" + std::to_string(i), braced(L, cl.closedSets[i]),
                    "C" + std::to_string(cl.orthocomplement[i])});
  }
  os << render_grid(rows);
  os << "ortholattice: " << (cl.axioms.ok() ? "yes" : "no") << '\n';
  return os.str();
}

std::string report_text(const BoundedLattice &L, const PropertyReport &r,
                        bool failuresOnly) {
  std::ostringstream os;
  std::size_t asserted = 0;
  for (const Check &c : r.checks()) {
    asserted += c.asserted ? 1 : 0;
  }
  os << "== " << r.subject() << ": " << (r.ok() ? "ok" : "FAILED") << " ("
     << asserted << " asserted, " << r.failures() << " failed, "
     << r.checks().size() - asserted << " informative)\n";
  for (const Check &c : r.checks()) {
    const bool failed = c.asserted && c.verdict == Verdict::Fail;
    if (failuresOnly && !failed) {
      continue;
    }
    std::string verdict(to_string(c.verdict));
    verdict.resize(7, ' ');
    os << "  " << verdict << (c.asserted ? "  " : "* ") << c.name;
    if (!c.witness.empty()) {
      os << "  [" << render_witness(L, c.witness) << "]";
    }
    if (!c.note.empty()) {
      os << "  " << c.note;
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json report_json(const BoundedLattice &L, const PropertyReport &r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check &c : r.checks()) {
    nlohmann::json witness = nlohmann::json::array();
    for (ElementSet S : c.witness) {
      nlohmann::json labels = nlohmann::json::array();
      for (ElementId x : S) {
        labels.push_back(L.label(x));
      }
      witness.push_back(std::move(labels));
    }
    checks.push_back({{"name", c.name},
                      {"verdict", std::string(to_string(c.verdict))},
                      {"asserted", c.asserted},
                      {"witness", std::move(witness)},
                      {"note", c.note}});
  }
  return {{"subject", r.subject()},
          {"ok", r.ok()},
          {"failures", r.failures()},
          {"checks", std::move(checks)}};
}

} // namespace latkit::cli
