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

#include "commands.hpp"

#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <latkit/corpus.hpp>
#include <latkit/error.hpp>
#include <latkit/lattice_text.hpp>
#include <latkit/suite.hpp>

#include "render.hpp"

namespace latkit::cli {

namespace {

struct RunConfig {
  std::string lattice;
  std::string file;
  std::size_t corpus = 0;
  std::string op = "implies";
  std::string format = "text";
  std::string output;
  std::size_t maxSubsets = DeductionCaps{}.maxSubsetElements;
  std::size_t maxPartitions = DeductionCaps{}.maxPartitionElements;
  bool latticeOf = false;
  bool verbose = false;
};

void add_source(CLI::App *cmd, RunConfig &cfg, bool allowCorpus) {
  auto *group = cmd->add_option_group("source", "lattice to operate on");
  group->add_option("--lattice,-l", cfg.lattice,
                    "named lattice: N5, M3, fig2, M:k, B:k, chain:k");
  group->add_option("--file,-f", cfg.file, "lattice text file")
      ->check(CLI::ExistingFile);
  if (allowCorpus) {
    group->add_option("--corpus", cfg.corpus,
                      "default corpus with enumerated lattices up to N "
                      "elements")
        ->check(CLI::Range(2, 8));
  }
  group->require_option(1);
}

NamedLattice load(const RunConfig &cfg) {
  if (!cfg.file.empty()) {
    return read_lattice_file(cfg.file);
  }
  CorpusEntry e = named_lattice(cfg.lattice);
  return NamedLattice{e.name, std::move(e.lattice)};
}

SuiteOptions suite_options(const RunConfig &cfg) {
  SuiteOptions o;
  o.caps.maxSubsetElements = cfg.maxSubsets;
  o.caps.maxPartitionElements = cfg.maxPartitions;
  return o;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
  std::vector<CorpusEntry> corpus;
  std::optional<NamedLattice> single;
  if (cfg.corpus > 0) {
    corpus = default_corpus(cfg.corpus);
  } else {
    single = load(cfg);
    corpus.push_back(CorpusEntry{single->name, single->lattice, {}});
  }
  const std::vector<PropertyReport> reports =
      verify_corpus(corpus, suite_options(cfg));

  bool ok = true;
  std::size_t failures = 0;
  for (const PropertyReport &r : reports) {
    ok = ok && r.ok();
    failures += r.failures();
  }

  if (cfg.format == "json") {
    nlohmann::json doc;
    doc["ok"] = ok;
    doc["failures"] = failures;
    doc["lattices"] = nlohmann::json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      doc["lattices"].push_back(report_json(corpus[i].lattice, reports[i]));
    }
    out << doc.dump(2) << '\n';
  } else {
    const bool failuresOnly = cfg.corpus > 0 && !cfg.verbose;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      out << report_text(corpus[i].lattice, reports[i], failuresOnly);
    }
    out << (ok ? "PASS" : "FAIL") << ": " << reports.size() << " lattice"
        << (reports.size() == 1 ? "" : "s") << ", " << failures
        << " asserted failure" << (failures == 1 ? "" : "s") << '\n';
  }
  return ok ? kPass : kCheckFailure;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Finite-lattice complementation and deduction toolkit",
               "latkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto *info = app.add_subcommand("info", "size, bounds and structural tags");
  add_source(info, cfg, false);

  auto *plus = app.add_subcommand("plus-table", "x, x⁺ and x⁺⁺ per element");
  add_source(plus, cfg, false);

  auto *op = app.add_subcommand("op-table", "full table of → or ⊙");
  add_source(op, cfg, false);
  op->add_option("--op", cfg.op, "implies or odot")
      ->check(CLI::IsMember({"implies", "odot"}));

  auto *verify = app.add_subcommand("verify", "run every applicable check");
  add_source(verify, cfg, true);
  verify->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--max-subsets", cfg.maxSubsets,
                     "largest lattice whose deductive systems are enumerated")
      ->capture_default_str();
  verify->add_option("--max-partitions", cfg.maxPartitions,
                     "largest lattice whose meet-congruences are enumerated")
      ->capture_default_str();
  verify->add_flag("--verbose,-v", cfg.verbose,
                   "list every check for corpus runs");

  auto *ded = app.add_subcommand("deductive-systems",
                                 "list deductive systems");
  add_source(ded, cfg, false);
  ded->add_flag("--lattice-of", cfg.latticeOf,
                "print the inclusion order and, for M_n, the Boolean check");
  ded->add_option("--max-subsets", cfg.maxSubsets,
                  "largest lattice whose deductive systems are enumerated")
      ->capture_default_str();

  auto *closed = app.add_subcommand("closed-sets",
                                    "closed sets and their orthocomplements");
  add_source(closed, cfg, false);

  auto *dot = app.add_subcommand("dot", "Hasse diagram in DOT");
  add_source(dot, cfg, false);
  dot->add_option("--output,-o", cfg.output, "write to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(cfg, out);
    }
    const NamedLattice named = load(cfg);
    const BoundedLattice &L = named.lattice;
    if (info->parsed()) {
      out << info_text(L, named.name);
    } else if (plus->parsed()) {
      out << plus_table(L);
    } else if (op->parsed()) {
      out << operation_table(L, cfg.op == "odot" ? Connective::Odot
                                                 : Connective::Implies);
    } else if (ded->parsed()) {
      out << deductive_systems_text(
          L, all_deductive_systems(L, cfg.maxSubsets), cfg.latticeOf);
    } else if (closed->parsed()) {
      out << closed_sets_text(L);
    } else if (dot->parsed()) {
      const std::string text = to_dot(L, named.name);
      if (cfg.output.empty()) {
        out << text;
      } else {
        std::ofstream file(cfg.output);
        file << text;
        if (!file) {
          err << "error: cannot write " << cfg.output << '\n';
          return kInputError;
        }
      }
    }
    return kPass;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

} // namespace latkit::cli
