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

#include "cayci/citester.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "cayci/autengine.hpp"
#include "cayci/digraph.hpp"
#include "cayci/errors.hpp"
#include "cayci/subgroups.hpp"

namespace cayci {

std::string ToString(Verdict v) { return v == Verdict::kCi ? "CI" : "not-CI"; }

std::string ToString(Method m) {
  switch (m) {
    case Method::kDefinitional:
      return "definitional";
    case Method::kBabai:
      return "babai";
    case Method::kBoth:
      return "both";
  }
  return "?";
}

std::string ToString(Mode m) { return m == Mode::kDigraph ? "digraph" : "graph"; }

Mode ParseMode(std::string_view text) {
  if (text == "digraph") return Mode::kDigraph;
  if (text == "graph") return Mode::kGraph;
  throw ParseError("mode must be 'digraph' or 'graph', got '" + std::string(text) + "'");
}

namespace {

// Multiplication table of a group with at most 64 elements.
class GroupTable {
 public:
  explicit GroupTable(const GroupSpec& spec) : n_(spec.order()), mul_(n_ * n_), inv_(n_) {
    if (n_ > 64) {
      throw BudgetExceeded(spec.ToString() + " has more than 64 elements");
    }
    for (std::size_t i = 0; i < n_; ++i) {
      const Element g = ElementAt(spec, i);
      inv_[i] = static_cast<std::uint8_t>(IndexOf(spec, Inverse(spec, g)));
      for (std::size_t j = 0; j < n_; ++j) {
        mul_[i * n_ + j] =
            static_cast<std::uint8_t>(IndexOf(spec, Multiply(spec, g, ElementAt(spec, j))));
      }
    }
  }

  std::uint64_t InverseMask(std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (; mask != 0; mask &= mask - 1) out |= std::uint64_t{1} << inv_[std::countr_zero(mask)];
    return out;
  }

  // Sizes of the out-distance layers from the identity of Cay(G, mask).
  std::vector<std::uint8_t> DistanceProfile(std::uint64_t mask) const {
    std::vector<std::uint8_t> profile{1};
    std::uint64_t seen = 1;
    std::uint64_t layer = 1;
    while (true) {
      std::uint64_t next = 0;
      for (std::uint64_t l = layer; l != 0; l &= l - 1) {
        const std::size_t x = static_cast<std::size_t>(std::countr_zero(l));
        for (std::uint64_t s = mask; s != 0; s &= s - 1) {
          next |= std::uint64_t{1} << mul_[static_cast<std::size_t>(std::countr_zero(s)) * n_ + x];
        }
      }
      next &= ~seen;
      if (next == 0) return profile;
      profile.push_back(static_cast<std::uint8_t>(std::popcount(next)));
      seen |= next;
      layer = next;
    }
  }

  bool Generates(std::uint64_t mask) const {
    std::size_t total = 0;
    for (std::uint8_t c : DistanceProfile(mask)) total += c;
    return total == n_;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> inv_;
};

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 value = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(value);
}

// Calls visit(mask) for every m-subset of the non-identity elements, in
// increasing numeric order.
template <typename Visit>
void ForEachSubset(std::size_t order, std::size_t m, Visit visit) {
  const std::size_t bits = order - 1;
  if (m == 0 || m > bits) return;
  std::uint64_t x = (m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  while (true) {
    visit(x << 1);
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    if (r == 0 || (bits < 64 && (r >> bits) != 0)) return;
    x = (((r ^ x) >> 2) / c) | r;
  }
}

void CheckSetBudget(const GroupSpec& spec, std::size_t m, std::uint64_t budget,
                    const char* what) {
  if (spec.order() > kEngineLimit) {
    throw BudgetExceeded(std::string(what) + ": " + spec.ToString() +
                         " exceeds the engine limit");
  }
  const std::uint64_t count = Binomial(spec.order() - 1, m, budget);
  if (count > budget) {
    throw BudgetExceeded(std::string(what) + ": more than " + std::to_string(budget) +
                         " candidate sets of size " + std::to_string(m) + " in " +
                         spec.ToString());
  }
}

PermGroup AutOf(const GroupSpec& spec, const ConnectionSet& set) {
  const Digraph d = Cayley(spec, set);
  return PermGroup(d.vertex_count(), Canonicalize(d).generators);
}

CiReport BaseReport(const GroupSpec& spec, const ConnectionSet& set, Method method,
                    const PermGroup& aut) {
  CiReport report{.group = spec, .set = set};
  report.method = method;
  report.aut_order = aut.order();
  return report;
}

bool NormalFromParts(const GroupSpec& spec, const ConnectionSet& set, const PermGroup& aut,
                     const PermGroup& regular) {
  const bool by_order =
      aut.order() == Order(spec.order()) * SetStabilizerAuts(spec, set).size();
  const bool by_conjugation = IsNormal(aut, regular);
  if (by_order != by_conjugation) {
    throw std::logic_error("normality tests disagree for " + spec.ToString() + " {" +
                           FormatSet(spec, set) + "}");
  }
  return by_order;
}

std::vector<PermGroup> RegularCopies(const GroupSpec& spec, const PermGroup& aut,
                                     std::uint64_t budget) {
  if (spec.dihedral()) return RegularDihedralSubgroups(aut, spec.order(), budget);
  return RegularCyclicSubgroups(aut, spec.order(), budget);
}

std::size_t IndexOfSubgroup(const std::vector<PermGroup>& list, const PermGroup& h) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (std::ranges::equal(list[i].key(), h.key())) return i;
  }
  throw std::logic_error("R(G) missing from the regular subgroup list");
}

}  // namespace

PermGroup RightRegular(const GroupSpec& spec) {
  std::vector<Perm> gens;
  if (spec.n() > 1) gens.push_back(RightMultiplication(spec, Element{1 % spec.n(), 0}));
  if (spec.dihedral()) gens.push_back(RightMultiplication(spec, Element{0, 1}));
  return Closure(spec.order(), std::move(gens));
}

CiReport IsCiDefinitional(const GroupSpec& spec, const ConnectionSet& set,
                          const CiOptions& options) {
  const std::size_t m = set.size();
  CheckSetBudget(spec, m, options.definitional_budget, "definitional test");
  const GroupTable table(spec);
  const AutTable auts = MakeAutTable(spec);
  const std::uint64_t s_mask = set.Mask(spec);
  std::unordered_set<std::uint64_t> orbit;
  for (const auto& map : auts) orbit.insert(ApplyToMask(map, s_mask));

  const Digraph d = Cayley(spec, set);
  Canonical canonical = Canonicalize(d);
  const PermGroup aut(d.vertex_count(), std::move(canonical.generators));
  CiReport report = BaseReport(spec, set, Method::kDefinitional, aut);
  report.normal = NormalFromParts(spec, set, aut, RightRegular(spec));

  const int s_symmetric = std::popcount(s_mask & table.InverseMask(s_mask));
  const auto s_profile = table.DistanceProfile(s_mask);
  std::optional<std::uint64_t> witness;
  ForEachSubset(spec.order(), m, [&](std::uint64_t t) {
    if (witness || orbit.contains(t)) return;
    if (std::popcount(t & table.InverseMask(t)) != s_symmetric) return;
    if (table.DistanceProfile(t) != s_profile) return;
    if (NormalizeMask(auts, t) != t) return;
    if (CanonicalForm(Cayley(spec, ConnectionSet::FromMask(spec, t))) == canonical.certificate) {
      witness = t;
    }
  });
  if (witness) {
    report.verdict = Verdict::kNotCi;
    report.witness = ConnectionSet::FromMask(spec, *witness);
  }
  return report;
}

CiReport IsCiBabai(const GroupSpec& spec, const ConnectionSet& set, const CiOptions& options) {
  const PermGroup aut = AutOf(spec, set);
  const PermGroup regular = RightRegular(spec);
  CiReport report = BaseReport(spec, set, Method::kBabai, aut);
  report.normal = NormalFromParts(spec, set, aut, regular);

  const std::vector<PermGroup> copies = RegularCopies(spec, aut, options.enumeration_budget);
  const ConjugacyClasses classes = ClassifyUnderConjugation(aut, copies);
  const std::size_t r_index = IndexOfSubgroup(copies, regular);
  const std::size_t r_class = classes.class_of[r_index];
  report.regular_subgroups = copies.size();
  report.regular_classes = classes.count();
  const Perm back = classes.conjugator[r_index].inverse();
  for (std::size_t i = 0; i < copies.size(); ++i) {
    if (classes.class_of[i] == r_class) {
      report.conjugators.push_back(back * classes.conjugator[i]);
    } else if (!report.rival) {
      report.rival = copies[i];
    }
  }
  report.verdict = report.rival ? Verdict::kNotCi : Verdict::kCi;
  return report;
}

CiReport IsCiBoth(const GroupSpec& spec, const ConnectionSet& set, const CiOptions& options) {
  CiReport definitional = IsCiDefinitional(spec, set, options);
  CiReport babai = IsCiBabai(spec, set, options);
  if (definitional.verdict != babai.verdict) {
    throw std::logic_error("definitional and Babai verdicts disagree for " + spec.ToString() +
                           " {" + FormatSet(spec, set) + "}");
  }
  babai.method = Method::kBoth;
  babai.witness = std::move(definitional.witness);
  return babai;
}

bool IsNormalCayley(const GroupSpec& spec, const ConnectionSet& set) {
  return NormalFromParts(spec, set, AutOf(spec, set), RightRegular(spec));
}

bool CyclicCoreConjugacyCheck(const GroupSpec& spec, const ConnectionSet& set,
                              const CiOptions& options) {
  if (!spec.dihedral() || spec.n() % 2 == 0) {
    throw std::invalid_argument("cyclic core check needs a dihedral group with n odd");
  }
  const PermGroup aut = AutOf(spec, set);
  const PermGroup regular = RightRegular(spec);
  const auto copies = RegularDihedralSubgroups(aut, spec.order(), options.enumeration_budget);
  const ConjugacyClasses classes = ClassifyUnderConjugation(aut, copies);
  const std::size_t r_class = classes.class_of[IndexOfSubgroup(copies, regular)];
  const PermGroup r_core = CyclicCore(regular);
  for (std::size_t i = 0; i < copies.size(); ++i) {
    const bool whole = classes.class_of[i] == r_class;
    const bool core = AreConjugateSubgroups(aut, CyclicCore(copies[i]), r_core,
                                            options.enumeration_budget)
                          .has_value();
    if (whole != core) return false;
  }
  return true;
}

std::optional<bool> CoprimeStabilizerShortcut(const GroupSpec& spec, const ConnectionSet& set) {
  if (!spec.dihedral() || spec.n() % 2 == 0) {
    throw std::invalid_argument("coprime stabilizer shortcut needs a dihedral group with n odd");
  }
  const PermGroup stabilizer = Stabilizer(AutOf(spec, set), 0, {.cap = 0});
  if (boost::multiprecision::gcd(stabilizer.order(), Order(spec.n())) == 1) return true;
  return std::nullopt;
}

SweepResult MDciStatus(const GroupSpec& spec, std::size_t m, Mode mode,
                       const SweepOptions& options) {
  if (m == 0 || m >= spec.order()) {
    throw std::invalid_argument("valency must lie in 1.." + std::to_string(spec.order() - 1));
  }
  CheckSetBudget(spec, m, options.set_budget, "sweep");
  const GroupTable table(spec);
  const AutTable auts = MakeAutTable(spec);
  const int threads = options.threads > 0 ? options.threads : DefaultThreads();

  SweepResult result{.group = spec, .valency = m, .mode = mode,
                     .connected_only = options.connected_only};
  std::vector<std::uint64_t> eligible;
  ForEachSubset(spec.order(), m, [&](std::uint64_t s) {
    if (mode == Mode::kGraph && table.InverseMask(s) != s) return;
    if (options.connected_only && !table.Generates(s)) return;
    eligible.push_back(s);
  });
  result.raw_total_sets = eligible.size();

  const std::vector<std::uint64_t> normalized =
      options.parallel ? NormalizeMasksParallel(auts, eligible, threads)
                       : NormalizeMasksSerial(auts, eligible);
  std::map<std::uint64_t, std::uint64_t> orbit_size;
  for (std::uint64_t rep : normalized) ++orbit_size[rep];
  std::vector<std::uint64_t> reps;
  for (const auto& [rep, count] : orbit_size) reps.push_back(rep);
  std::sort(reps.begin(), reps.end(), MaskLess);
  result.total_sets = reps.size();

  std::vector<std::optional<CertifiedSet>> certs(reps.size());
  std::vector<std::uint64_t> missing;
  std::vector<std::size_t> missing_index;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (options.store) certs[i] = options.store->Get(spec, reps[i]);
    if (certs[i]) {
      ++result.cache_hits;
    } else {
      missing.push_back(reps[i]);
      missing_index.push_back(i);
    }
  }
  result.cache_misses = missing.size();
  std::vector<CertifiedSet> computed = options.parallel
                                           ? CertifyParallel(spec, missing, threads)
                                           : CertifySerial(spec, missing);
  for (std::size_t j = 0; j < missing.size(); ++j) {
    if (options.store) options.store->Put(spec, missing[j], computed[j]);
    certs[missing_index[j]] = std::move(computed[j]);
  }

  std::map<Certificate, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < reps.size(); ++i) buckets[certs[i]->certificate].push_back(i);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const std::vector<std::size_t>& bucket = buckets[certs[i]->certificate];
    if (bucket.size() == 1) {
      ++result.ci_count;
      result.raw_ci_sets += orbit_size[reps[i]];
    } else {
      result.counterexamples.push_back(ConnectionSet::FromMask(spec, reps[i]));
      result.counterexample_aut_orders.push_back(certs[i]->aut_order);
      const std::size_t other = bucket[0] == i ? bucket[1] : bucket[0];
      result.counterexample_witnesses.push_back(ConnectionSet::FromMask(spec, reps[other]));
    }
  }

  if (options.verify_counterexamples) {
    for (const ConnectionSet& s : result.counterexamples) {
      CiReport report = IsCiBoth(spec, s, options.ci);
      if (report.verdict != Verdict::kNotCi) {
        throw std::logic_error("sweep counterexample {" + FormatSet(spec, s) +
                               "} is CI by both single-set methods");
      }
      result.counterexample_reports.push_back(std::move(report));
    }
    result.verified = true;
  }
  return result;
}

std::vector<SweepResult> MDciGroupStatus(const GroupSpec& spec, std::size_t m, Mode mode,
                                         const SweepOptions& options) {
  std::vector<SweepResult> results;
  for (std::size_t k = 1; k <= m; ++k) results.push_back(MDciStatus(spec, k, mode, options));
  return results;
}

}  // namespace cayci
