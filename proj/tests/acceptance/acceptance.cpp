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

// Runs the nine acceptance criteria and prints one line per criterion.
// Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cayci/autengine.hpp"
#include "cayci/citester.hpp"
#include "cayci/digraph.hpp"
#include "cayci/group.hpp"
#include "cayci/harness.hpp"
#include "cayci/kernels.hpp"
#include "cayci/subgroups.hpp"
#include "oracles.hpp"

namespace cayci {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Check(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

std::string BlownUpCycleSet(int n) { return "a,a^" + std::to_string(n - 1) + ",a^2*b,b"; }

std::string EvenWitnessSet(int n) {
  return "a,a^" + std::to_string(n - 1) + ",a*b,a^" + std::to_string(n / 2 + 1) + "*b";
}

Digraph CayleyOf(const GroupSpec& spec, const std::string& set) {
  return Cayley(spec, ParseConnectionSet(spec, set));
}

bool SameSubgroup(const PermGroup& x, const PermGroup& y) { return std::ranges::equal(x.key(), y.key()); }

// Valency-4 digraph sweeps.
void Criterion1(Outcome& out) {
  for (int n = 3; n <= 9; ++n) {
    const GroupSpec spec = GroupSpec::Dihedral(n);
    const SweepResult r = MDciStatus(spec, 4, Mode::kDigraph, {.verify_counterexamples = true});
    const bool expect_none = n == 3 || n == 5 || n == 7;
    out.Check(r.ci_count + r.counterexamples.size() == r.total_sets, "count identity at n=" + std::to_string(n));
    if (expect_none) {
      out.Check(r.counterexamples.empty(), "n=" + std::to_string(n) + " has counterexamples");
    } else {
      out.Check(!r.counterexamples.empty(), "n=" + std::to_string(n) + " has no counterexample");
    }
    out.Check(r.verified && r.counterexample_reports.size() == r.counterexamples.size(),
              "unverified counterexamples at n=" + std::to_string(n));
    for (const CiReport& report : r.counterexample_reports) {
      out.Check(report.verdict == Verdict::kNotCi && report.method == Method::kBoth,
                "verification disagrees on " + FormatSet(spec, report.set));
    }
    if (out.pass) out.detail << "n=" << n << ":" << r.counterexamples.size() << " ";
  }
}

// Valency-4 graph sweeps.
void Criterion2(Outcome& out) {
  for (int n = 3; n <= 9; ++n) {
    const GroupSpec spec = GroupSpec::Dihedral(n);
    const SweepResult r = MDciStatus(spec, 4, Mode::kGraph);
    if (n % 2 == 1) {
      out.Check(r.counterexamples.empty(), "n=" + std::to_string(n) + " has counterexamples");
    } else {
      const std::uint64_t target =
          NormalizeMask(MakeAutTable(spec), ParseConnectionSet(spec, EvenWitnessSet(n)).Mask(spec));
      const bool found = std::ranges::any_of(
          r.counterexamples, [&](const ConnectionSet& s) { return s.Mask(spec) == target; });
      out.Check(found, "witness set missing at n=" + std::to_string(n));
    }
    if (out.pass) out.detail << "n=" << n << ":" << r.counterexamples.size() << " ";
  }
}

// Automorphism group orders and the D_12 vertex stabilizer.
void Criterion3(Outcome& out) {
  const auto order_is = [&](const GroupSpec& spec, const std::string& set, std::uint64_t expected) {
    const Order got = AutomorphismGroup(CayleyOf(spec, set)).order();
    out.Check(got == expected, spec.ToString() + " {" + set + "} gave " + got.str());
  };
  order_is(GroupSpec::Dihedral(3), "b,a*b,a^2*b", 72);
  order_is(GroupSpec::Dihedral(7), "b,a*b,a^3*b", 336);
  order_is(GroupSpec::Dihedral(13), "b,a*b,a^4*b", 78);
  order_is(GroupSpec::Dihedral(4), "a,a^3,a*b,a^3*b", 1152);
  for (int n : {3, 5, 7}) order_is(GroupSpec::Dihedral(n), BlownUpCycleSet(n), (std::uint64_t{1} << (n + 1)) * n);
  const GroupSpec d12 = GroupSpec::Dihedral(6);
  const PermGroup aut = AutomorphismGroup(CayleyOf(d12, EvenWitnessSet(6)));
  out.Check(aut.order() == 48, "D12 order " + aut.order().str());
  const Perm s13 = AutPermutation(d12, {1, 3});
  const Perm s52 = AutPermutation(d12, {5, 2});
  const oracle::ElementSet expected = [&] {
    oracle::ElementSet e;
    for (const Perm& p : {Perm(12), s13, s52, s13 * s52}) e.emplace(p.images().begin(), p.images().end());
    return e;
  }();
  out.Check(expected.size() == 4, "sigma elements not distinct");
  out.Check(oracle::Elements(Stabilizer(aut, 0)) == expected, "D12 stabilizer differs");
  if (out.pass) out.detail << "8 orders and the D12 stabilizer match";
}

// Even n: the valency-4 witness graph and its rival regular subgroup.
void Criterion4(Outcome& out) {
  for (int n : {6, 8}) {
    const GroupSpec spec = GroupSpec::Dihedral(n);
    const PermGroup aut = AutomorphismGroup(CayleyOf(spec, EvenWitnessSet(n)));
    const PermGroup r = RightRegular(spec);
    out.Check(IsNormal(aut, r), "R not normal at n=" + std::to_string(n));
    const Perm beta = AutPermutation(spec, {n - 1, 2});
    const PermGroup l = Closure(2 * n, {RightMultiplication(spec, {2, 1}) * beta, RightMultiplication(spec, {1, 1})});
    out.Check(IsSubgroup(aut, l), "L outside Aut at n=" + std::to_string(n));
    out.Check(l.order() == 2 * n && Orbit(l, 0).size() == static_cast<std::size_t>(2 * n),
              "L not regular at n=" + std::to_string(n));
    out.Check(!SameSubgroup(l, r), "L equals R at n=" + std::to_string(n));
    const auto copies = RegularDihedralSubgroups(aut, 2 * n);
    out.Check(std::ranges::any_of(copies, [&](const PermGroup& x) { return SameSubgroup(x, l); }),
              "L not among regular dihedral subgroups at n=" + std::to_string(n));
    out.Check(!AreConjugateSubgroups(aut, l, r).has_value(), "L conjugate to R at n=" + std::to_string(n));
  }
  const GroupSpec d8 = GroupSpec::Dihedral(4);
  const PermGroup aut = AutomorphismGroup(CayleyOf(d8, EvenWitnessSet(4)));
  const std::size_t classes = ClassifyUnderConjugation(aut, RegularDihedralSubgroups(aut, 8)).count();
  out.Check(classes >= 2, "n=4 has " + std::to_string(classes) + " class(es)");
  if (out.pass) out.detail << "n=6,8 rival L found; n=4 has " << classes << " classes";
}

// Odd n: the blown-up cycle C_n[2K_1].
void Criterion5(Outcome& out) {
  for (int n : {3, 5, 7, 9}) {
    const std::string tag = " at n=" + std::to_string(n);
    const GroupSpec spec = GroupSpec::Dihedral(n);
    const ConnectionSet s = ParseConnectionSet(spec, BlownUpCycleSet(n));
    const Digraph gamma = Cayley(spec, s);
    const PermGroup aut = AutomorphismGroup(gamma);
    const Partition blocks = AbCosetPartition(n);
    const PermGroup kernel = KernelOnPartition(aut, blocks);
    out.Check(kernel.order() == (std::uint64_t{1} << n), "kernel order " + kernel.order().str() + tag);
    bool exponent_two = true;
    kernel.ForEachElement([&](const Perm& g) {
      exponent_two = exponent_two && (g * g).is_identity();
      return exponent_two;
    });
    out.Check(exponent_two, "kernel exponent" + tag);
    out.Check(CanonicalForm(Quotient(gamma, blocks)) == CanonicalForm(CycleGraph(n)), "quotient" + tag);
    out.Check(CanonicalForm(LexProduct(CycleGraph(n), EmptyGraph(2))) == CanonicalForm(gamma), "lex product" + tag);
    const CiReport report = IsCiBoth(spec, s);
    out.Check(report.verdict == Verdict::kCi, "verdict" + tag);
    out.Check(!report.normal && !IsNormalCayley(spec, s), "normality" + tag);
  }
  if (out.pass) out.detail << "n=3,5,7,9 structure confirmed";
}

// Definitional and regular-subgroup routes agree.
void Criterion6(Outcome& out) {
  std::size_t compared = 0, disagreements = 0;
  const auto compare = [&](const GroupSpec& spec, const ConnectionSet& s) {
    ++compared;
    const Verdict a = IsCiDefinitional(spec, s).verdict;
    const Verdict b = IsCiBabai(spec, s).verdict;
    if (a != b) {
      ++disagreements;
      out.Check(false, spec.ToString() + " {" + FormatSet(spec, s) + "}");
    }
  };
  for (int n : {3, 5}) {
    const GroupSpec spec = GroupSpec::Dihedral(n);
    for (const ConnectionSet& s : oracle::AllSets(spec, 4)) compare(spec, s);
  }
  const GroupSpec d14 = GroupSpec::Dihedral(7);
  const auto pool = oracle::AllSets(d14, 4);
  std::vector<ConnectionSet> sample;
  std::mt19937_64 rng(20261016);
  std::ranges::sample(pool, std::back_inserter(sample), 500, rng);
  for (const ConnectionSet& s : sample) compare(d14, s);
  for (int n : {5, 7, 9}) {
    const GroupSpec spec = GroupSpec::Cyclic(n);
    for (const ConnectionSet& s : oracle::SetsOfSize(spec, 4)) compare(spec, s);
  }
  if (out.pass) out.detail << compared << " sets, " << disagreements << " disagreements";
}

// Engine order against exhaustive permutation search.
void Criterion7(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Digraph> corpus;
  const GroupSpec d6 = GroupSpec::Dihedral(3);
  for (const ConnectionSet& s : oracle::AllSets(d6, 3)) corpus.push_back(Cayley(d6, s));
  for (int n = 2; n <= 8; ++n) {
    const GroupSpec spec = GroupSpec::Cyclic(n);
    for (const ConnectionSet& s : oracle::AllSets(spec, 3)) corpus.push_back(Cayley(spec, s));
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    corpus.push_back(oracle::RandomDigraph(1 + i % 8, std::uniform_real_distribution<double>(0, 1)(rng), rng));
  }
  std::size_t mismatches = 0;
  for (const Digraph& d : corpus) {
    const std::size_t brute = oracle::BruteAutomorphisms(d).size();
    if (AutomorphismGroup(d).order() != brute) {
      ++mismatches;
      out.Check(false, "order mismatch on\n" + WriteText(d));
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.Check(seconds <= 60.0, "took " + std::to_string(seconds) + " s");
  if (out.pass) out.detail << corpus.size() << " digraphs, " << mismatches << " mismatches";
}

// Closed-form order of sigma_{r,s} against its permutation order.
void Criterion8(Outcome& out) {
  std::size_t cases = 0;
  for (int n = 3; n <= 15; ++n) {
    const GroupSpec spec = GroupSpec::Dihedral(n);
    for (GroupAut aut : Automorphisms(spec)) {
      ++cases;
      if (AutOrder(spec, aut) != AutPermutation(spec, aut).order()) {
        out.Check(false, "sigma(" + std::to_string(aut.r) + "," + std::to_string(aut.s) + ") in " +
                             spec.ToString());
      }
    }
  }
  if (out.pass) out.detail << cases << " automorphisms checked";
}

// Small-valency and connected cyclic spot checks.
void Criterion9(Outcome& out) {
  for (int n : {3, 5, 7, 9}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const SweepResult r = MDciStatus(GroupSpec::Dihedral(n), k, Mode::kDigraph);
      out.Check(r.counterexamples.empty(), "dihedral n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  for (int n : {5, 7, 11}) {
    const SweepResult r = MDciStatus(GroupSpec::Cyclic(n), 4, Mode::kDigraph, {.connected_only = true});
    out.Check(r.counterexamples.empty(), "cyclic n=" + std::to_string(n));
  }
  if (out.pass) out.detail << "all cells free of counterexamples";
}

}  // namespace
}  // namespace cayci

int main() {
  using Runner = void (*)(cayci::Outcome&);
  const std::vector<std::pair<const char*, Runner>> criteria = {
      {"C1 valency-4 digraph sweeps, n=3..9, verified", cayci::Criterion1},
      {"C2 valency-4 graph sweeps, n=3..9", cayci::Criterion2},
      {"C3 automorphism group orders", cayci::Criterion3},
      {"C4 even-n witness structure", cayci::Criterion4},
      {"C5 odd-n lexicographic structure", cayci::Criterion5},
      {"C6 definitional vs regular-subgroup agreement", cayci::Criterion6},
      {"C7 engine vs exhaustive search", cayci::Criterion7},
      {"C8 closed-form automorphism orders", cayci::Criterion8},
      {"C9 small-valency and connected cyclic spot checks", cayci::Criterion9},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    cayci::Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(out);
    } catch (const std::exception& e) {
      out.Check(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %-52s %7.2fs  %s\n", out.pass ? "PASS" : "FAIL", name, seconds, out.detail.str().c_str());
    std::fflush(stdout);
    failures += out.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
