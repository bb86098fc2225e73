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

#include "cayci/harness.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cayci/autengine.hpp"
#include "cayci/digraph.hpp"
#include "cayci/errors.hpp"
#include "cayci/subgroups.hpp"

namespace cayci {

OutputFormat ParseOutputFormat(std::string_view text) {
  if (text == "table") return OutputFormat::kTable;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "jsonl") return OutputFormat::kJsonl;
  throw ParseError("format must be table, csv or jsonl");
}

namespace {

int ParseInt(std::string_view text, std::string_view context) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad integer '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
  return value;
}

bool SquareFree(int n) {
  for (int p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<int> ParseIntList(std::string_view text) {
  std::set<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string_view item =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      values.insert(ParseInt(item, text));
    } else {
      const int lo = ParseInt(item.substr(0, dots), text);
      const int hi = ParseInt(item.substr(dots + 2), text);
      if (lo > hi) throw ParseError("empty range '" + std::string(item) + "'");
      for (int v = lo; v <= hi; ++v) values.insert(v);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return {values.begin(), values.end()};
}

std::optional<bool> PredictNoCounterexample(const GroupSpec& spec, std::size_t valency, Mode mode,
                                            bool connected_only) {
  const int n = spec.n();
  const bool odd = n % 2 == 1;
  std::optional<bool> full;
  if (spec.dihedral()) {
    if (valency == 1) {
      full = odd;
    } else if (valency <= 3) {
      if (odd) full = true;
    } else if (valency == 4) {
      full = mode == Mode::kGraph ? odd : odd && n % 9 != 0;
    }
  } else {
    if (n % 4 != 0 && SquareFree(n % 2 == 0 ? n / 2 : n)) {
      full = true;  // cyclic DCI-groups
    } else if (mode == Mode::kGraph && valency <= 5) {
      full = true;
    }
    if (!full && connected_only && valency == 4) {
      if (mode == Mode::kGraph || (odd && n % 9 != 0)) return true;
    }
  }
  // Restricting to connected sets keeps positive predictions only.
  if (connected_only && full == false) return std::nullopt;
  return full;
}

ReportRow RowFromReport(const CiReport& report) {
  const GroupSpec& spec = report.group;
  ReportRow row;
  row.group = spec.dihedral() ? "dihedral" : "cyclic";
  row.n = spec.n();
  row.valency = report.set.size();
  row.mode = IsSymmetric(spec, report.set) ? "graph" : "digraph";
  row.set = FormatSet(spec, report.set);
  row.verdict = ToString(report.verdict);
  row.method = ToString(report.method);
  row.aut_order = report.aut_order.str();
  row.normal = report.normal ? "true" : "false";
  if (report.witness) row.witness = FormatSet(spec, *report.witness);
  if (report.rival) row.rival_order = report.rival->order().str();
  return row;
}

namespace {

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> Fields(const ReportRow& row) {
  return {row.group,  std::to_string(row.n), std::to_string(row.valency), row.mode,
          row.set,    row.verdict,           row.method,                  row.aut_order,
          row.normal, row.witness,           row.rival_order};
}

}  // namespace

std::string CsvHeader() {
  std::string out;
  for (const char* f : kReportFields) {
    if (!out.empty()) out += ',';
    out += f;
  }
  return out;
}

std::string CsvLine(const ReportRow& row) {
  std::string out;
  bool first = true;
  for (const std::string& f : Fields(row)) {
    if (!first) out += ',';
    out += CsvField(f);
    first = false;
  }
  return out;
}

std::string JsonLine(const ReportRow& row) {
  nlohmann::ordered_json j;
  j["group"] = row.group;
  j["n"] = row.n;
  j["valency"] = row.valency;
  j["mode"] = row.mode;
  j["set"] = row.set;
  j["verdict"] = row.verdict;
  j["method"] = row.method;
  j["aut_order"] = row.aut_order;
  j["normal"] = row.normal.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(row.normal == "true");
  j["witness"] = row.witness.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(row.witness);
  j["rival_order"] =
      row.rival_order.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(row.rival_order);
  return j.dump();
}

std::string RenderReport(const CiReport& report) {
  const GroupSpec& spec = report.group;
  const ReportRow row = RowFromReport(report);
  std::ostringstream out;
  out << "group        " << spec.ToString() << '\n'
      << "set          {" << row.set << "}  (" << row.mode << ", valency " << row.valency << ")\n"
      << "verdict      " << row.verdict << '\n'
      << "method       " << row.method << '\n'
      << "|Aut|        " << row.aut_order << '\n'
      << "normal       " << row.normal << '\n';
  if (report.regular_subgroups > 0) {
    out << "regular      " << report.regular_subgroups << " subgroup(s) isomorphic to G in "
        << report.regular_classes << " conjugacy class(es)\n";
  }
  if (report.witness) out << "witness T    {" << row.witness << "}\n";
  if (report.rival) {
    out << "rival        order " << row.rival_order << ", generated by";
    for (const Perm& g : report.rival->generators()) out << ' ' << g.ToString();
    out << '\n';
  }
  for (std::size_t i = 0; i < report.conjugators.size() && i < 8; ++i) {
    out << "conjugator   " << report.conjugators[i].ToString() << '\n';
  }
  if (report.conjugators.size() > 8) {
    out << "             (" << report.conjugators.size() - 8 << " more)\n";
  }
  return out.str();
}

std::vector<ReportRow> SweepRows(const SweepResult& result) {
  const GroupSpec& spec = result.group;
  std::vector<ReportRow> rows;
  for (std::size_t i = 0; i < result.counterexamples.size(); ++i) {
    ReportRow row;
    row.group = spec.dihedral() ? "dihedral" : "cyclic";
    row.n = spec.n();
    row.valency = result.valency;
    row.mode = ToString(result.mode);
    row.set = FormatSet(spec, result.counterexamples[i]);
    row.verdict = ToString(Verdict::kNotCi);
    row.method = result.verified ? "both" : "definitional";
    row.aut_order = result.counterexample_aut_orders[i].str();
    row.witness = FormatSet(spec, result.counterexample_witnesses[i]);
    if (i < result.counterexample_reports.size()) {
      const CiReport& report = result.counterexample_reports[i];
      row.normal = report.normal ? "true" : "false";
      if (report.rival) row.rival_order = report.rival->order().str();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string SweepCellJson(const SweepResult& result, std::optional<bool> predicted) {
  nlohmann::ordered_json j;
  j["record"] = "cell";
  j["group"] = result.group.dihedral() ? "dihedral" : "cyclic";
  j["n"] = result.group.n();
  j["valency"] = result.valency;
  j["mode"] = ToString(result.mode);
  j["connected_only"] = result.connected_only;
  j["total_sets"] = result.total_sets;
  j["ci_count"] = result.ci_count;
  j["counterexamples"] = result.counterexamples.size();
  j["raw_total_sets"] = result.raw_total_sets;
  j["raw_ci_sets"] = result.raw_ci_sets;
  j["verified"] = result.verified;
  j["predicted_no_counterexample"] =
      predicted ? nlohmann::ordered_json(*predicted) : nlohmann::ordered_json();
  return j.dump();
}

Partition AbCosetPartition(int n) {
  std::vector<std::vector<Point>> blocks(n);
  for (int i = 0; i < n; ++i) {
    // a b a^i = a^{1-i} b
    blocks[i] = {static_cast<Point>(i), static_cast<Point>(n + ((1 - i) % n + n) % n)};
  }
  return Partition(2 * static_cast<std::size_t>(n), std::move(blocks));
}

namespace {

Digraph CayleyOf(const GroupSpec& spec, std::string_view set) {
  return Cayley(spec, ParseConnectionSet(spec, set));
}

std::string BlownUpCycleSet(int n) { return "a,a^" + std::to_string(n - 1) + ",a^2*b,b"; }

std::string EvenWitnessSet(int n) {
  return "a,a^" + std::to_string(n - 1) + ",a*b,a^" + std::to_string(n / 2 + 1) + "*b";
}

void Add(std::vector<FixtureResult>& out, std::string name, std::string expected,
         const std::function<std::string()>& observe) {
  FixtureResult r{.name = std::move(name), .expected = std::move(expected)};
  try {
    r.observed = observe();
  } catch (const std::exception& e) {
    r.observed = std::string("error: ") + e.what();
  }
  r.pass = r.observed == r.expected;
  out.push_back(std::move(r));
}

std::string AutOrder(const Digraph& d) { return AutomorphismGroup(d).order().str(); }

std::string SameCertificate(const Digraph& x, const Digraph& y) {
  return CanonicalForm(x) == CanonicalForm(y) ? "isomorphic" : "not isomorphic";
}

}  // namespace

std::vector<FixtureResult> RunFixtures() {
  std::vector<FixtureResult> out;
  const GroupSpec d6 = GroupSpec::Dihedral(3);
  const GroupSpec d8 = GroupSpec::Dihedral(4);
  const GroupSpec d12 = GroupSpec::Dihedral(6);
  const GroupSpec d14 = GroupSpec::Dihedral(7);
  const GroupSpec d26 = GroupSpec::Dihedral(13);

  Add(out, "k33-aut", "72", [&] { return AutOrder(CayleyOf(d6, "b,a*b,a^2*b")); });
  Add(out, "k33-iso", "isomorphic",
      [&] { return SameCertificate(CayleyOf(d6, "b,a*b,a^2*b"), CompleteBipartite(3, 3)); });
  Add(out, "heawood-aut", "336", [&] { return AutOrder(CayleyOf(d14, "b,a*b,a^3*b")); });
  Add(out, "heawood-iso", "isomorphic",
      [&] { return SameCertificate(CayleyOf(d14, "b,a*b,a^3*b"), HeawoodGraph()); });
  Add(out, "z13z6-aut", "78", [&] { return AutOrder(CayleyOf(d26, "b,a*b,a^4*b")); });
  Add(out, "z13z6-normal", "true", [&] {
    return IsNormalCayley(d26, ParseConnectionSet(d26, "b,a*b,a^4*b")) ? "true" : "false";
  });
  Add(out, "heawood-normal", "false", [&] {
    return IsNormalCayley(d14, ParseConnectionSet(d14, "b,a*b,a^3*b")) ? "true" : "false";
  });
  Add(out, "lemma-even-k44", "isomorphic", [&] {
    return SameCertificate(CayleyOf(d8, "a,a^3,a*b,a^3*b"), CompleteBipartite(4, 4));
  });
  Add(out, "lemma-even-k44-aut", "1152", [&] { return AutOrder(CayleyOf(d8, "a,a^3,a*b,a^3*b")); });

  for (int n : {3, 5, 7}) {
    const GroupSpec spec = GroupSpec::Dihedral(n);
    const std::string suffix = "-n" + std::to_string(n);
    Add(out, "lemma-odd-aut" + suffix, std::to_string((1 << (n + 1)) * n),
        [&] { return AutOrder(CayleyOf(spec, BlownUpCycleSet(n))); });
    Add(out, "lemma-odd-kernel" + suffix, std::to_string(1 << n) + ", exponent 2", [&] {
      const PermGroup aut = AutomorphismGroup(CayleyOf(spec, BlownUpCycleSet(n)));
      const PermGroup kernel = KernelOnPartition(aut, AbCosetPartition(n));
      bool exponent_two = true;
      for (const Perm& g : kernel.generators()) exponent_two = exponent_two && g.order() <= 2;
      // An abelian group generated by involutions has exponent 2.
      for (const Perm& g : kernel.generators()) {
        for (const Perm& h : kernel.generators()) exponent_two = exponent_two && g * h == h * g;
      }
      return kernel.order().str() + (exponent_two ? ", exponent 2" : ", exponent > 2");
    });
    Add(out, "lemma-odd-quotient" + suffix, "isomorphic", [&] {
      return SameCertificate(Quotient(CayleyOf(spec, BlownUpCycleSet(n)), AbCosetPartition(n)),
                             CycleGraph(n));
    });
    Add(out, "lemma-odd-lex" + suffix, "isomorphic", [&] {
      return SameCertificate(LexProduct(CycleGraph(n), EmptyGraph(2)),
                             CayleyOf(spec, BlownUpCycleSet(n)));
    });
    Add(out, "lemma-odd-ci" + suffix, "CI, normal=false", [&] {
      const CiReport r = IsCiBoth(spec, ParseConnectionSet(spec, BlownUpCycleSet(n)));
      return ToString(r.verdict) + ", normal=" + (r.normal ? "true" : "false");
    });
  }
  for (int n : {4, 6, 8}) {
    const GroupSpec spec = GroupSpec::Dihedral(n);
    Add(out, "lemma-even-nonci-n" + std::to_string(n), "not-CI", [&] {
      return ToString(IsCiBoth(spec, ParseConnectionSet(spec, EvenWitnessSet(n))).verdict);
    });
  }
  Add(out, "lemma-even-d12-aut", "48", [&] { return AutOrder(CayleyOf(d12, EvenWitnessSet(6))); });
  Add(out, "lemma-even-d12-stabilizer", "order 4, equal to <s(1,3), s(-1,2)>", [&] {
    const PermGroup aut = AutomorphismGroup(CayleyOf(d12, EvenWitnessSet(6)));
    const PermGroup stab = Stabilizer(aut, 0);
    const PermGroup expected =
        Closure(12, {AutPermutation(d12, {1, 3}), AutPermutation(d12, {5, 2})});
    const bool equal = std::ranges::equal(stab.key(), expected.key());
    return "order " + stab.order().str() +
           (equal ? ", equal to <s(1,3), s(-1,2)>" : ", different from <s(1,3), s(-1,2)>");
  });
  return out;
}

}  // namespace cayci
