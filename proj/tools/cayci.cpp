// Copyright 2026 The Cayci Authors
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

// Command-line front end: single-set reports, valency sweeps, fixtures and
// digraph import/export.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cayci/autengine.hpp"
#include "cayci/cache.hpp"
#include "cayci/citester.hpp"
#include "cayci/digraph.hpp"
#include "cayci/errors.hpp"
#include "cayci/group.hpp"
#include "cayci/harness.hpp"
#include "cayci/kernels.hpp"

namespace {

using namespace cayci;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

constexpr const char* kGrammar = R"(Element syntax: factors joined by '*', each one of a, a^k, b, 1.
  Exponents are taken mod n and may be negative; whitespace is ignored.
  Examples: "a^3*b", "a^-1", "b*a" (= a^-1*b). Sets are comma separated.
Groups: dihedral:N (N >= 3) or cyclic:N.
Exit codes: 0 consistent, 1 fixture or prediction mismatch,
  2 usage or parse error, 3 budget refusal.)";

struct ReportArgs {
  std::string group;
  std::string set;
  std::string method = "both";
  std::string format = "table";
  std::uint64_t definitional_budget = 200'000;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
};

struct SweepArgs {
  std::string group = "dihedral";
  std::string n;
  std::string valency = "4";
  std::string mode = "digraph";
  std::string format = "table";
  bool connected_only = false;
  bool verify = false;
  bool serial = false;
  int threads = 0;
  std::string cache_dir;
  bool no_cache = false;
  bool verify_cache = false;
  std::uint64_t set_budget = 200'000;
  std::uint64_t definitional_budget = 200'000;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
};

struct ExportArgs {
  std::string group;
  std::string set;
  std::string named;
  std::string output;
};

std::string ReadFile(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int RunReport(const ReportArgs& args) {
  const GroupSpec spec = GroupSpec::Parse(args.group);
  const ConnectionSet set = ParseConnectionSet(spec, args.set);
  const OutputFormat format = ParseOutputFormat(args.format);
  const CiOptions options{.definitional_budget = args.definitional_budget,
                          .enumeration_budget = args.enumeration_budget};
  CiReport report = [&] {
    if (args.method == "definitional") return IsCiDefinitional(spec, set, options);
    if (args.method == "babai") return IsCiBabai(spec, set, options);
    if (args.method == "both") return IsCiBoth(spec, set, options);
    throw ParseError("method must be definitional, babai or both");
  }();
  switch (format) {
    case OutputFormat::kTable:
      std::cout << RenderReport(report);
      break;
    case OutputFormat::kCsv:
      std::cout << CsvHeader() << '\n' << CsvLine(RowFromReport(report)) << '\n';
      break;
    case OutputFormat::kJsonl:
      std::cout << JsonLine(RowFromReport(report)) << '\n';
      break;
  }
  return kExitOk;
}

std::string Observed(const SweepResult& r) { return r.counterexamples.empty() ? "holds" : "fails"; }

std::string Predicted(std::optional<bool> p) {
  if (!p) return "-";
  return *p ? "holds" : "fails";
}

int RunSweep(const SweepArgs& args) {
  GroupKind kind;
  if (args.group == "dihedral") {
    kind = GroupKind::kDihedral;
  } else if (args.group == "cyclic") {
    kind = GroupKind::kCyclic;
  } else {
    throw ParseError("--group must be dihedral or cyclic for sweeps");
  }
  const std::vector<int> ns = ParseIntList(args.n);
  const std::vector<int> valencies = ParseIntList(args.valency);
  const Mode mode = ParseMode(args.mode);
  const OutputFormat format = ParseOutputFormat(args.format);
  if (args.threads < 0) throw ParseError("--threads must be positive");
  for (int k : valencies) {
    if (k < 1) throw ParseError("valency must be at least 1");
  }
  std::vector<GroupSpec> specs;
  for (int n : ns) {
    try {
      specs.push_back(kind == GroupKind::kDihedral ? GroupSpec::Dihedral(n) : GroupSpec::Cyclic(n));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }

  std::unique_ptr<DiskCache> cache;
  if (!args.no_cache) {
    cache = std::make_unique<DiskCache>(
        args.cache_dir.empty() ? DefaultCacheDirectory() : std::filesystem::path(args.cache_dir),
        args.verify_cache);
  }
  SweepOptions options{.connected_only = args.connected_only,
                       .verify_counterexamples = args.verify,
                       .parallel = !args.serial,
                       .threads = args.threads,
                       .set_budget = args.set_budget,
                       .ci = {.definitional_budget = args.definitional_budget,
                              .enumeration_budget = args.enumeration_budget},
                       .store = cache.get()};

  struct Cell {
    int n;
    std::size_t k;
    std::optional<bool> predicted;
    std::string observed;
    std::string status;
  };
  std::vector<Cell> cells;
  bool mismatch = false;
  bool refused = false;
  if (format == OutputFormat::kCsv) std::cout << CsvHeader() << '\n';
  for (const GroupSpec& spec : specs) {
    for (int k : valencies) {
      const auto valency = static_cast<std::size_t>(k);
      const std::optional<bool> predicted =
          PredictNoCounterexample(spec, valency, mode, args.connected_only);
      Cell cell{spec.n(), valency, predicted, "", ""};
      if (valency >= spec.order()) {
        cell.observed = "-";
        cell.status = "no sets of this size";
        cells.push_back(std::move(cell));
        continue;
      }
      try {
        const SweepResult r = MDciStatus(spec, valency, mode, options);
        cell.observed = Observed(r);
        if (!predicted) {
          cell.status = "no prediction";
        } else if (*predicted == r.counterexamples.empty()) {
          cell.status = "match";
        } else {
          cell.status = "MISMATCH";
          mismatch = true;
        }
        const std::vector<ReportRow> rows = SweepRows(r);
        switch (format) {
          case OutputFormat::kTable:
            std::cout << spec.ToString() << " valency " << valency << ' ' << ToString(mode)
                      << (args.connected_only ? " connected" : "") << ": " << r.total_sets
                      << " orbits (" << r.raw_total_sets << " sets), " << r.ci_count << " CI, "
                      << r.counterexamples.size() << " counterexample orbit(s)"
                      << (r.verified ? ", verified by both methods" : "") << '\n';
            for (const ReportRow& row : rows) {
              std::cout << "  {" << row.set << "}  |Aut|=" << row.aut_order << "  ~ {"
                        << row.witness << "}\n";
            }
            break;
          case OutputFormat::kCsv:
            for (const ReportRow& row : rows) std::cout << CsvLine(row) << '\n';
            break;
          case OutputFormat::kJsonl:
            std::cout << SweepCellJson(r, predicted) << '\n';
            for (const ReportRow& row : rows) std::cout << JsonLine(row) << '\n';
            break;
        }
      } catch (const BudgetExceeded& e) {
        refused = true;
        cell.observed = "refused";
        cell.status = "budget";
        std::cerr << "cayci: " << spec.ToString() << " valency " << valency << ": " << e.what()
                  << '\n';
      }
      std::cout.flush();
      if (cache) {
        for (const std::string& w : cache->TakeWarnings()) std::cerr << "cayci: warning: " << w << '\n';
      }
      cells.push_back(std::move(cell));
    }
  }

  if (format == OutputFormat::kTable) {
    std::cout << "\nsummary (" << args.group << ", " << args.mode
              << (args.connected_only ? ", connected only" : "") << ")\n";
    std::printf("%6s %8s %10s %10s  %s\n", "n", "valency", "predicted", "observed", "status");
    for (const Cell& c : cells) {
      std::printf("%6d %8zu %10s %10s  %s\n", c.n, c.k, Predicted(c.predicted).c_str(),
                  c.observed.c_str(), c.status.c_str());
    }
    std::fflush(stdout);
  }
  if (cache) {
    const DiskCache::Stats s = cache->stats();
    const std::uint64_t lookups = s.hits + s.misses;
    std::cerr << "cayci: cache " << cache->directory().string() << ": " << s.hits << " hit(s), "
              << s.misses << " miss(es)";
    if (lookups > 0) std::cerr << ", hit rate " << (100 * s.hits / lookups) << "%";
    if (args.verify_cache) {
      std::cerr << ", " << s.verified << " verified, " << s.verify_failures << " mismatch(es)";
    }
    std::cerr << '\n';
    if (s.verify_failures > 0) mismatch = true;
  }
  if (mismatch) return kExitMismatch;
  if (refused) return kExitBudget;
  return kExitOk;
}

int RunFixturesCommand(const std::string& format_text) {
  const OutputFormat format = ParseOutputFormat(format_text);
  const std::vector<FixtureResult> results = RunFixtures();
  bool all = true;
  if (format == OutputFormat::kCsv) std::cout << "fixture,expected,observed,status\n";
  for (const FixtureResult& r : results) {
    all = all && r.pass;
    switch (format) {
      case OutputFormat::kTable:
        std::printf("%-28s %-40s %-40s %s\n", r.name.c_str(), r.expected.c_str(),
                    r.observed.c_str(), r.pass ? "pass" : "FAIL");
        break;
      case OutputFormat::kCsv:
        std::cout << r.name << ",\"" << r.expected << "\",\"" << r.observed << "\","
                  << (r.pass ? "pass" : "FAIL") << '\n';
        break;
      case OutputFormat::kJsonl: {
        nlohmann::ordered_json j;
        j["fixture"] = r.name;
        j["expected"] = r.expected;
        j["observed"] = r.observed;
        j["pass"] = r.pass;
        std::cout << j.dump() << '\n';
        break;
      }
    }
  }
  std::cout.flush();
  return all ? kExitOk : kExitMismatch;
}

int RunExport(const ExportArgs& args) {
  std::optional<Digraph> d;
  if (!args.named.empty()) {
    if (!args.group.empty() || !args.set.empty()) {
      throw ParseError("use either --named or --group/--set");
    }
    d = NamedDigraph(args.named);
  } else {
    if (args.group.empty() || args.set.empty()) throw ParseError("--group and --set are required");
    const GroupSpec spec = GroupSpec::Parse(args.group);
    d = Cayley(spec, ParseConnectionSet(spec, args.set));
  }
  const std::string text = WriteText(*d);
  if (args.output.empty() || args.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(args.output);
    out << text;
    if (!out) throw ParseError("cannot write " + args.output);
  }
  return kExitOk;
}

int RunImport(const std::string& path) {
  const Digraph d = ReadText(ReadFile(path));
  const Canonical c = Canonicalize(d);
  const PermGroup aut(d.vertex_count(), c.generators);
  std::cout << "vertices     " << d.vertex_count() << '\n'
            << "arcs         " << d.arc_count() << '\n'
            << "graph        " << (IsGraph(d) ? "yes" : "no") << '\n'
            << "connected    " << (StronglyConnected(d) ? "strongly" : "no") << '\n'
            << "|Aut|        " << aut.order() << '\n'
            << "certificate  " << c.certificate.ToHex() << '\n';
  return kExitOk;
}

int RunIso(const std::string& first, const std::string& second) {
  const Digraph d1 = ReadText(ReadFile(first));
  const Digraph d2 = ReadText(ReadFile(second));
  const std::optional<Perm> phi = Isomorphism(d1, d2);
  if (!phi) {
    std::cout << "not isomorphic\n";
    return kExitMismatch;
  }
  std::cout << "isomorphic\n";
  for (std::size_t v = 0; v < phi->degree(); ++v) std::cout << v << ' ' << (*phi)[v] << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley digraphs of dihedral and cyclic groups: automorphisms and CI testing"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "CI verdict and certificates for one set");
  report_cmd->add_option("--group", report.group, "dihedral:N or cyclic:N")->required();
  report_cmd->add_option("--set", report.set, "comma-separated elements")->required();
  report_cmd->add_option("--method", report.method, "definitional, babai or both")
      ->capture_default_str();
  report_cmd->add_option("--format", report.format, "table, csv or jsonl")->capture_default_str();
  report_cmd->add_option("--definitional-budget", report.definitional_budget,
                         "max candidate sets for the definitional route")
      ->capture_default_str();
  report_cmd->add_option("--enumeration-budget", report.enumeration_budget,
                         "max |Aut| streamed by the Babai route")
      ->capture_default_str();

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "test every valency-k set, one per Aut(G)-orbit");
  sweep_cmd->add_option("--group", sweep.group, "dihedral or cyclic")->capture_default_str();
  sweep_cmd->add_option("--n", sweep.n, "orders, e.g. 3..9 or 5,7,11")->required();
  sweep_cmd->add_option("--valency", sweep.valency, "valencies, e.g. 4 or 1..4")
      ->capture_default_str();
  sweep_cmd->add_option("--mode", sweep.mode, "digraph or graph")->capture_default_str();
  sweep_cmd->add_option("--format", sweep.format, "table, csv or jsonl")->capture_default_str();
  sweep_cmd->add_flag("--connected-only", sweep.connected_only, "only sets generating G");
  sweep_cmd->add_flag("--verify", sweep.verify,
                      "re-check each counterexample with both single-set methods");
  sweep_cmd->add_flag("--serial", sweep.serial, "use the serial reference kernels");
  sweep_cmd->add_option("--threads", sweep.threads, "worker threads (default: all cores)");
  sweep_cmd->add_option("--cache-dir", sweep.cache_dir,
                        "certificate cache (default: $CAYCI_CACHE_DIR or .cayci-cache)");
  sweep_cmd->add_flag("--no-cache", sweep.no_cache, "do not read or write the cache");
  sweep_cmd->add_flag("--verify-cache", sweep.verify_cache,
                      "recompute about 1% of cache hits and compare");
  sweep_cmd->add_option("--set-budget", sweep.set_budget, "max sets enumerated per cell")
      ->capture_default_str();
  sweep_cmd->add_option("--definitional-budget", sweep.definitional_budget,
                        "max candidate sets when verifying")
      ->capture_default_str();
  sweep_cmd->add_option("--enumeration-budget", sweep.enumeration_budget,
                        "max |Aut| streamed when verifying")
      ->capture_default_str();

  std::string fixtures_format = "table";
  auto* fixtures_cmd = app.add_subcommand("fixtures", "run the built-in reproduction checks");
  fixtures_cmd->add_option("--format", fixtures_format, "table, csv or jsonl")
      ->capture_default_str();

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "write a digraph in the text format");
  export_cmd->add_option("--group", exp.group, "dihedral:N or cyclic:N");
  export_cmd->add_option("--set", exp.set, "comma-separated elements");
  export_cmd->add_option("--named", exp.named, "e.g. heawood, cycle:5, complete_bipartite:3,3");
  export_cmd->add_option("-o,--output", exp.output, "output file (default stdout)");

  std::string import_path;
  auto* import_cmd = app.add_subcommand("import", "read a digraph and print |Aut| and certificate");
  import_cmd->add_option("file", import_path, "digraph file, or - for stdin")->required();

  std::string iso_first, iso_second;
  auto* iso_cmd = app.add_subcommand("iso", "test two digraph files for isomorphism");
  iso_cmd->add_option("first", iso_first)->required();
  iso_cmd->add_option("second", iso_second)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*report_cmd) return RunReport(report);
    if (*sweep_cmd) return RunSweep(sweep);
    if (*fixtures_cmd) return RunFixturesCommand(fixtures_format);
    if (*export_cmd) return RunExport(exp);
    if (*import_cmd) return RunImport(import_path);
    if (*iso_cmd) return RunIso(iso_first, iso_second);
  } catch (const ParseError& e) {
    std::cerr << "cayci: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "cayci: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cayci: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "cayci: internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
