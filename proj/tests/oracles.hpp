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

// Slow reference implementations used only to check the library.

#ifndef CAYCI_TESTS_ORACLES_HPP_
#define CAYCI_TESTS_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cayci/digraph.hpp"
#include "cayci/group.hpp"
#include "cayci/perm.hpp"
#include "cayci/perm_group.hpp"

namespace cayci::oracle {

using ElementSet = std::set<std::vector<Point>>;

// Breadth-first closure under right multiplication by the generators.
inline ElementSet BruteClosure(std::size_t degree, const std::vector<Perm>& gens) {
  std::vector<Point> id(degree);
  std::iota(id.begin(), id.end(), Point{0});
  ElementSet seen{id};
  std::deque<std::vector<Point>> queue{id};
  while (!queue.empty()) {
    const std::vector<Point> g = queue.front();
    queue.pop_front();
    for (const Perm& s : gens) {
      std::vector<Point> h(degree);
      for (std::size_t x = 0; x < degree; ++x) h[x] = s[g[x]];
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return seen;
}

inline ElementSet Elements(const PermGroup& g) {
  ElementSet out;
  g.ForEachElement([&](const Perm& p) {
    out.emplace(p.images().begin(), p.images().end());
    return true;
  });
  return out;
}

// Every arc-preserving bijection, by trying all n! of them.
inline std::vector<std::vector<Point>> BruteAutomorphisms(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<Point> p(n);
  std::iota(p.begin(), p.end(), Point{0});
  const auto arcs = d.arcs();
  std::vector<std::vector<Point>> out;
  do {
    bool ok = true;
    for (const auto& [u, v] : arcs) {
      if (!d.has_arc(p[u], p[v])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool BruteIsomorphic(const Digraph& a, const Digraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return false;
  const std::size_t n = a.vertex_count();
  std::vector<Point> p(n);
  std::iota(p.begin(), p.end(), Point{0});
  const auto arcs = a.arcs();
  do {
    bool ok = true;
    for (const auto& [u, v] : arcs) {
      if (!b.has_arc(p[u], p[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Digraph RandomDigraph(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution arc(density);
  Digraph d(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && arc(rng)) d.add_arc(u, v);
    }
  }
  return d;
}

inline Perm RandomPerm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> p(n);
  std::iota(p.begin(), p.end(), Point{0});
  std::shuffle(p.begin(), p.end(), rng);
  return Perm(std::move(p));
}

// All nonempty subsets of G \ {1} with at most max_size elements.
inline std::vector<ConnectionSet> AllSets(const GroupSpec& spec, std::size_t max_size) {
  std::vector<ConnectionSet> out;
  const std::size_t n = spec.order();
  for (std::uint64_t mask = 2; mask < (std::uint64_t{1} << n); mask += 2) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= max_size) out.push_back(ConnectionSet::FromMask(spec, mask));
  }
  return out;
}

// Sets of exactly `size` elements.
inline std::vector<ConnectionSet> SetsOfSize(const GroupSpec& spec, std::size_t size) {
  std::vector<ConnectionSet> out;
  for (const ConnectionSet& s : AllSets(spec, size)) {
    if (s.size() == size) out.push_back(s);
  }
  return out;
}

}  // namespace cayci::oracle

#endif  // CAYCI_TESTS_ORACLES_HPP_
