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

#ifndef CAYCI_CITESTER_HPP_
#define CAYCI_CITESTER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayci/group.hpp"
#include "cayci/kernels.hpp"
#include "cayci/perm.hpp"
#include "cayci/perm_group.hpp"

namespace cayci {

enum class Verdict { kCi, kNotCi };
enum class Method { kDefinitional, kBabai, kBoth };
enum class Mode { kDigraph, kGraph };

std::string ToString(Verdict v);
std::string ToString(Method m);
std::string ToString(Mode m);
Mode ParseMode(std::string_view text);

struct CiOptions {
  // Largest binomial(|G| - 1, |S|) the definitional route will enumerate.
  std::uint64_t definitional_budget = 200'000;
  // Largest |Aut| whose elements the Babai route will stream.
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
};

struct CiReport {
  GroupSpec group;
  ConnectionSet set;
  Verdict verdict = Verdict::kCi;
  Method method = Method::kDefinitional;
  // An isomorphic but inequivalent set, normalized within its orbit.
  std::optional<ConnectionSet> witness;
  // A regular subgroup isomorphic to G and not conjugate to R(G).
  std::optional<PermGroup> rival;
  // For each regular subgroup X conjugate to R(G), some g with R(G)^g = X.
  std::vector<Perm> conjugators;
  std::size_t regular_subgroups = 0;
  std::size_t regular_classes = 0;
  Order aut_order = 0;
  bool normal = false;
};

// {R(g) : g in G} on the canonical vertex order, materialized.
PermGroup RightRegular(const GroupSpec& spec);

// Enumerates every T with |T| = |S| and looks for one whose Cayley digraph is
// isomorphic to Cay(G, S) while T lies outside the Aut(G)-orbit of S.
// Throws BudgetExceeded when binomial(|G| - 1, |S|) is over budget.
CiReport IsCiDefinitional(const GroupSpec& spec, const ConnectionSet& set,
                          const CiOptions& options = {});

// CI iff every regular subgroup of Aut(Cay(G, S)) isomorphic to G is
// conjugate to R(G). Throws BudgetExceeded when |Aut| is over budget.
CiReport IsCiBabai(const GroupSpec& spec, const ConnectionSet& set,
                   const CiOptions& options = {});

// Runs both routes. Throws std::logic_error when they disagree.
CiReport IsCiBoth(const GroupSpec& spec, const ConnectionSet& set,
                  const CiOptions& options = {});

// |Aut| = |G| |Aut(G, S)| and R(G) normal in Aut; throws std::logic_error
// when the two tests disagree.
bool IsNormalCayley(const GroupSpec& spec, const ConnectionSet& set);

// For dihedral G with n odd: checks that every regular dihedral X is
// conjugate to R(G) exactly when the order-n cyclic subgroups are.
// Throws std::invalid_argument for cyclic G or even n.
bool CyclicCoreConjugacyCheck(const GroupSpec& spec, const ConnectionSet& set,
                              const CiOptions& options = {});

// true when the vertex stabilizer has order coprime to n, otherwise no
// conclusion. Dihedral G with n odd only.
std::optional<bool> CoprimeStabilizerShortcut(const GroupSpec& spec, const ConnectionSet& set);

// Cache for per-set certificates, keyed by the orbit-normalized mask.
class CertificateStore {
 public:
  virtual ~CertificateStore() = default;
  virtual std::optional<CertifiedSet> Get(const GroupSpec& spec, std::uint64_t mask) = 0;
  virtual void Put(const GroupSpec& spec, std::uint64_t mask, const CertifiedSet& value) = 0;
};

struct SweepOptions {
  bool connected_only = false;
  // Re-run both single-set methods on every counterexample.
  bool verify_counterexamples = false;
  bool parallel = true;
  int threads = 0;  // 0: DefaultThreads()
  // Largest binomial(|G| - 1, m) a sweep will enumerate.
  std::uint64_t set_budget = 200'000;
  CiOptions ci;
  CertificateStore* store = nullptr;
};

// Counts are over Aut(G)-orbits of eligible sets; raw_* count the sets
// themselves.
struct SweepResult {
  GroupSpec group;
  std::size_t valency = 0;
  Mode mode = Mode::kDigraph;
  bool connected_only = false;
  std::uint64_t total_sets = 0;
  std::uint64_t ci_count = 0;
  // Orbit-least members, sorted.
  std::vector<ConnectionSet> counterexamples;
  std::uint64_t raw_total_sets = 0;
  std::uint64_t raw_ci_sets = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
  bool verified = false;
  // Parallel to counterexamples: |Aut| of the digraph, another orbit
  // representative with an isomorphic digraph, and (after verification) the
  // combined single-set report.
  std::vector<Order> counterexample_aut_orders;
  std::vector<ConnectionSet> counterexample_witnesses;
  std::vector<CiReport> counterexample_reports;
};

// Every valency-m connection set (symmetric ones in graph mode), one
// representative per Aut(G)-orbit. Throws BudgetExceeded when the set count
// is over budget or |G| > 64.
SweepResult MDciStatus(const GroupSpec& spec, std::size_t m, Mode mode,
                       const SweepOptions& options = {});

// MDciStatus for k = 1..m.
std::vector<SweepResult> MDciGroupStatus(const GroupSpec& spec, std::size_t m, Mode mode,
                                         const SweepOptions& options = {});

}  // namespace cayci

#endif  // CAYCI_CITESTER_HPP_
