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

#include "cayci/kernels.hpp"

#include <bit>
#include <exception>
#include <stdexcept>

#include <omp.h>

#include "cayci/digraph.hpp"

namespace cayci {

AutTable MakeAutTable(const GroupSpec& spec) {
  if (spec.order() > 64) throw std::invalid_argument("MakeAutTable: group order exceeds 64");
  AutTable table;
  for (GroupAut aut : Automorphisms(spec)) {
    std::vector<std::uint8_t> map(spec.order());
    for (std::size_t i = 0; i < map.size(); ++i) {
      map[i] = static_cast<std::uint8_t>(IndexOf(spec, ApplyAut(spec, aut, ElementAt(spec, i))));
    }
    table.push_back(std::move(map));
  }
  return table;
}

std::uint64_t ApplyToMask(const std::vector<std::uint8_t>& map, std::uint64_t mask) {
  std::uint64_t image = 0;
  for (; mask != 0; mask &= mask - 1) image |= std::uint64_t{1} << map[std::countr_zero(mask)];
  return image;
}

std::uint64_t NormalizeMask(const AutTable& auts, std::uint64_t mask) {
  std::uint64_t best = mask;
  for (const auto& map : auts) {
    const std::uint64_t image = ApplyToMask(map, mask);
    if (MaskLess(image, best)) best = image;
  }
  return best;
}

namespace {

// Runs body(i) for i in [0, count) on `threads` OpenMP threads and rethrows
// the first exception on the calling thread.
template <typename Body>
void ParallelFor(std::size_t count, int threads, Body body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads > 0 ? threads : 1)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(cayci_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<std::uint64_t> NormalizeMasksSerial(const AutTable& auts,
                                                const std::vector<std::uint64_t>& masks) {
  std::vector<std::uint64_t> out(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) out[i] = NormalizeMask(auts, masks[i]);
  return out;
}

std::vector<std::uint64_t> NormalizeMasksParallel(const AutTable& auts,
                                                  const std::vector<std::uint64_t>& masks,
                                                  int threads) {
  std::vector<std::uint64_t> out(masks.size());
  ParallelFor(masks.size(), threads,
              [&](std::size_t i) { out[i] = NormalizeMask(auts, masks[i]); });
  return out;
}

CertifiedSet CertifySet(const GroupSpec& spec, std::uint64_t mask) {
  const Digraph d = Cayley(spec, ConnectionSet::FromMask(spec, mask));
  Canonical c = Canonicalize(d);
  const StabilizerChain chain(d.vertex_count(), c.generators);
  return CertifiedSet{std::move(c.certificate), chain.order()};
}

std::vector<CertifiedSet> CertifySerial(const GroupSpec& spec,
                                        const std::vector<std::uint64_t>& masks) {
  std::vector<CertifiedSet> out;
  out.reserve(masks.size());
  for (std::uint64_t mask : masks) out.push_back(CertifySet(spec, mask));
  return out;
}

std::vector<CertifiedSet> CertifyParallel(const GroupSpec& spec,
                                          const std::vector<std::uint64_t>& masks, int threads) {
  std::vector<CertifiedSet> out(masks.size());
  ParallelFor(masks.size(), threads, [&](std::size_t i) { out[i] = CertifySet(spec, masks[i]); });
  return out;
}

int DefaultThreads() { return omp_get_max_threads(); }

}  // namespace cayci
