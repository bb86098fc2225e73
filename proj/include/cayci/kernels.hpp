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

#ifndef CAYCI_KERNELS_HPP_
#define CAYCI_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cayci/autengine.hpp"
#include "cayci/group.hpp"
#include "cayci/perm.hpp"

// Per-set sweep kernels. Each has a serial reference and an OpenMP version
// that must produce identical output for any thread count.

namespace cayci {

// Element index maps of every automorphism of a group with at most 64
// elements: table[k][i] is the image of element i under the k-th one.
using AutTable = std::vector<std::vector<std::uint8_t>>;
AutTable MakeAutTable(const GroupSpec& spec);

// Lexicographic order on equal-size index sets held as bit masks: the set
// holding the smallest element of the symmetric difference is smaller.
inline bool MaskLess(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t d = a ^ b;
  return d != 0 && (a & d & (~d + 1)) != 0;
}

std::uint64_t ApplyToMask(const std::vector<std::uint8_t>& map, std::uint64_t mask);

// Least member of the Aut(G)-orbit of a mask.
std::uint64_t NormalizeMask(const AutTable& auts, std::uint64_t mask);

std::vector<std::uint64_t> NormalizeMasksSerial(const AutTable& auts,
                                                const std::vector<std::uint64_t>& masks);
std::vector<std::uint64_t> NormalizeMasksParallel(const AutTable& auts,
                                                  const std::vector<std::uint64_t>& masks,
                                                  int threads);

struct CertifiedSet {
  Certificate certificate;
  Order aut_order;
  friend bool operator==(const CertifiedSet&, const CertifiedSet&) = default;
};

CertifiedSet CertifySet(const GroupSpec& spec, std::uint64_t mask);

// Canonical form and |Aut| of Cay(G, S) for each mask.
std::vector<CertifiedSet> CertifySerial(const GroupSpec& spec,
                                        const std::vector<std::uint64_t>& masks);
std::vector<CertifiedSet> CertifyParallel(const GroupSpec& spec,
                                          const std::vector<std::uint64_t>& masks, int threads);

// omp_get_max_threads(), or 1 without OpenMP.
int DefaultThreads();

}  // namespace cayci

#endif  // CAYCI_KERNELS_HPP_
