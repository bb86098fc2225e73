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

#ifndef CAYCI_SUBGROUPS_HPP_
#define CAYCI_SUBGROUPS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cayci/perm.hpp"
#include "cayci/perm_group.hpp"

namespace cayci {

// Sorted orbit of `point`. Throws std::out_of_range for a bad point.
std::vector<Point> Orbit(const PermGroup& group, Point point);

// Pointwise stabilizer of `point`; |Orbit| * |Stabilizer| = |group|.
PermGroup Stabilizer(const PermGroup& group, Point point,
                     const ClosureOptions& options = {});

// True when every generator of `h` lies in `ambient`.
bool IsSubgroup(const PermGroup& ambient, const PermGroup& h);

// Some g in `ambient` with g^-1 * h1 * g = h2, or nullopt. The search walks
// the conjugation orbit of h1 breadth first over the ambient generators, so
// the witness is reproducible. Throws std::invalid_argument when h1 or h2 is
// not contained in `ambient`, BudgetExceeded when the orbit is too large.
std::optional<Perm> AreConjugateSubgroups(const PermGroup& ambient, const PermGroup& h1,
                                          const PermGroup& h2,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

// Every regular subgroup of `ambient` isomorphic to the dihedral group of
// order two_n (two_n / 2 >= 3), each materialized and keyed by its element
// set, sorted by key. Elements of `ambient` are streamed from its stabilizer
// chain; BudgetExceeded when |ambient| > budget.
std::vector<PermGroup> RegularDihedralSubgroups(const PermGroup& ambient, std::size_t two_n,
                                                std::uint64_t budget = kDefaultEnumerationBudget);

// For degree n: the regular cyclic subgroups <x> with x an n-cycle.
// For degree 2n: the order-n cyclic subgroups of the regular dihedral
// subgroups (n >= 3).
std::vector<PermGroup> RegularCyclicSubgroups(const PermGroup& ambient, std::size_t n,
                                              std::uint64_t budget = kDefaultEnumerationBudget);

// The unique cyclic subgroup of order n inside a regular dihedral group of
// degree 2n.
PermGroup CyclicCore(const PermGroup& dihedral);

// True when g^-1 H g = H for every generator g of `ambient`.
// Throws std::invalid_argument if H is not a subgroup of `ambient`.
bool IsNormal(const PermGroup& ambient, const PermGroup& h);

// Elements fixing every block setwise. Throws std::invalid_argument when a
// generator does not map blocks to blocks.
PermGroup KernelOnPartition(const PermGroup& group, const Partition& partition);

// The permutation group induced on block indices.
PermGroup InducedBlockAction(const PermGroup& group, const Partition& partition);

// Orbits of a conjugation-closed list of materialized subgroups under
// conjugation by `ambient`.
struct ConjugacyClasses {
  std::vector<std::size_t> class_of;   // class index per input subgroup
  std::vector<std::size_t> representative;  // first subgroup of each class
  std::vector<Perm> conjugator;        // rep^conjugator[i] == subgroups[i]
  std::size_t count() const { return representative.size(); }
};
ConjugacyClasses ClassifyUnderConjugation(const PermGroup& ambient,
                                          const std::vector<PermGroup>& subgroups);

}  // namespace cayci

#endif  // CAYCI_SUBGROUPS_HPP_
