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

// Serial reference kernels against their OpenMP counterparts.
//
//   ./build/bench/kernels_bench --benchmark_filter=Certify

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "cayci/group.hpp"
#include "cayci/kernels.hpp"

namespace cayci {
namespace {

// All masks of `m` non-identity elements of D_2n.
std::vector<std::uint64_t> Subsets(const GroupSpec& spec, int m) {
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << (spec.order() - 1);
  std::uint64_t x = (std::uint64_t{1} << m) - 1;
  while (x < limit) {
    out.push_back(x << 1);
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

void BM_NormalizeSerial(benchmark::State& state) {
  const GroupSpec spec = GroupSpec::Dihedral(static_cast<int>(state.range(0)));
  const AutTable auts = MakeAutTable(spec);
  const auto masks = Subsets(spec, 4);
  for (auto _ : state) benchmark::DoNotOptimize(NormalizeMasksSerial(auts, masks));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(masks.size()));
}

void BM_NormalizeParallel(benchmark::State& state) {
  const GroupSpec spec = GroupSpec::Dihedral(static_cast<int>(state.range(0)));
  const AutTable auts = MakeAutTable(spec);
  const auto masks = Subsets(spec, 4);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(NormalizeMasksParallel(auts, masks, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(masks.size()));
}

std::vector<std::uint64_t> Representatives(const GroupSpec& spec) {
  const AutTable auts = MakeAutTable(spec);
  std::vector<std::uint64_t> reps = NormalizeMasksSerial(auts, Subsets(spec, 4));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

void BM_CertifySerial(benchmark::State& state) {
  const GroupSpec spec = GroupSpec::Dihedral(static_cast<int>(state.range(0)));
  const auto reps = Representatives(spec);
  for (auto _ : state) benchmark::DoNotOptimize(CertifySerial(spec, reps));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(reps.size()));
}

void BM_CertifyParallel(benchmark::State& state) {
  const GroupSpec spec = GroupSpec::Dihedral(static_cast<int>(state.range(0)));
  const auto reps = Representatives(spec);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(CertifyParallel(spec, reps, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(reps.size()));
}

BENCHMARK(BM_NormalizeSerial)->Arg(9)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalizeParallel)->ArgsProduct({{9, 15}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CertifySerial)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyParallel)->ArgsProduct({{9, 12}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace cayci

BENCHMARK_MAIN();
