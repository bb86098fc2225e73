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

#ifndef CAYCI_HARNESS_HPP_
#define CAYCI_HARNESS_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cayci/citester.hpp"
#include "cayci/group.hpp"

namespace cayci {

enum class OutputFormat { kTable, kCsv, kJsonl };
OutputFormat ParseOutputFormat(std::string_view text);

// "3..9", "5,7,11", "3..5,9". Sorted, deduplicated, nonempty.
std::vector<int> ParseIntList(std::string_view text);

// Whether a sweep cell is expected to have no counterexamples: true or false
// when a published result decides the cell, nullopt otherwise.
std::optional<bool> PredictNoCounterexample(const GroupSpec& spec, std::size_t valency, Mode mode,
                                            bool connected_only);

// One output record per connection set. Column order is fixed.
struct ReportRow {
  std::string group;  // "dihedral" or "cyclic"
  int n = 0;
  std::size_t valency = 0;
  std::string mode;
  std::string set;
  std::string verdict;
  std::string method;
  std::string aut_order;
  std::string normal;       // "true", "false" or ""
  std::string witness;      // "" when absent
  std::string rival_order;  // "" when absent
};

inline constexpr const char* kReportFields[] = {"group", "n", "valency", "mode", "set",
                                                "verdict", "method", "aut_order", "normal",
                                                "witness", "rival_order"};

ReportRow RowFromReport(const CiReport& report);
std::string CsvHeader();
std::string CsvLine(const ReportRow& row);
std::string JsonLine(const ReportRow& row);
// Multi-line human rendering of a single report, conjugators included.
std::string RenderReport(const CiReport& report);

// Sweep counterexamples as report rows; the witness is another orbit
// representative from the same isomorphism class.
std::vector<ReportRow> SweepRows(const SweepResult& result);
std::string SweepCellJson(const SweepResult& result, std::optional<bool> predicted);

struct FixtureResult {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

// Built-in reproduction checks: automorphism orders, quotient and
// lexicographic-product identities, and CI verdicts of the named families.
std::vector<FixtureResult> RunFixtures();

// The coset partition {H a^i} of D_2n with H = <ab>.
Partition AbCosetPartition(int n);

}  // namespace cayci

#endif  // CAYCI_HARNESS_HPP_
