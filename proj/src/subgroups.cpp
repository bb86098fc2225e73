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

#include "cayci/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cayci/errors.hpp"

namespace cayci {
namespace {

using Key = std::vector<Point>;

// Key of g^-1 H g computed from the key of H.
Key ConjugateKey(std::span<const Point> key, std::size_t degree, const Perm& g) {
  const std::size_t count = key.size() / degree;
  const Perm g_inv = g.inverse();
  Key images(key.size());
  for (std::size_t e = 0; e < count; ++e) {
    const Point* elt = key.data() + e * degree;
    Point* out = images.data() + e * degree;
    for (std::size_t x = 0; x < degree; ++x) out[x] = g[elt[g_inv[x]]];
  }
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(images.begin() + a * degree,
                                        images.begin() + (a + 1) * degree,
                                        images.begin() + b * degree,
                                        images.begin() + (b + 1) * degree);
  });
  Key sorted(key.size());
  for (std::size_t e = 0; e < count; ++e) {
    std::copy_n(images.begin() + order[e] * degree, degree, sorted.begin() + e * degree);
  }
  return sorted;
}

PermGroup Materialized(const PermGroup& h) {
  if (h.materialized()) return h;
  return Closure(h.degree(), h.generators(), {.cap = kDefaultMaterializationCap,
                                              .order_fallback = false});
}

void CheckOrderWithin(const PermGroup& group, std::uint64_t budget, const char* what) {
  if (group.order() > budget) {
    throw BudgetExceeded(std::string(what) + ": group order " + group.order().str() +
                         " exceeds enumeration budget " + std::to_string(budget));
  }
}

std::vector<std::size_t> UnitsAboveOne(std::size_t n) {
  std::vector<std::size_t> units;
  for (std::size_t k = 2; k < n; ++k) {
    if (std::gcd(k, n) == 1) units.push_back(k);
  }
  return units;
}

// Fills `cycle` with the cycle of `start` under x; false unless its length is
// exactly `length`.
bool CycleOfLength(const Perm& x, Point start, std::size_t length, std::vector<Point>& cycle) {
  std::size_t len = 0;
  Point p = start;
  do {
    if (len == length) return false;
    cycle[len++] = p;
    p = x[p];
  } while (p != start);
  return len == length;
}

// x generates its cyclic group and sends 0 to the least point any generator
// of that group can reach; each cyclic subgroup has exactly one such x.
bool IsCanonicalGenerator(const std::vector<Point>& cycle0, const std::vector<std::size_t>& units) {
  for (std::size_t k : units) {
    if (cycle0[k] < cycle0[1]) return false;
  }
  return true;
}

std::vector<PermGroup> SortedByKey(std::map<Key, PermGroup> found) {
  std::vector<PermGroup> result;
  result.reserve(found.size());
  for (auto& [key, group] : found) result.push_back(std::move(group));
  return result;
}

}  // namespace

std::vector<Point> Orbit(const PermGroup& group, Point point) {
  if (point >= group.degree()) throw std::out_of_range("Orbit: point out of range");
  std::vector<bool> seen(group.degree(), false);
  std::vector<Point> orbit{point};
  seen[point] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Perm& g : group.generators()) {
      const Point q = g[orbit[i]];
      if (!seen[q]) {
        seen[q] = true;
        orbit.push_back(q);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

PermGroup Stabilizer(const PermGroup& group, Point point, const ClosureOptions& options) {
  if (point >= group.degree()) throw std::out_of_range("Stabilizer: point out of range");
  const Point prefix[] = {point};
  StabilizerChain chain(group.degree(), group.generators(), prefix);
  return Closure(group.degree(), chain.generators(1), options);
}

bool IsSubgroup(const PermGroup& ambient, const PermGroup& h) {
  if (ambient.degree() != h.degree()) return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Perm& g) { return ambient.contains(g); });
}

std::optional<Perm> AreConjugateSubgroups(const PermGroup& ambient, const PermGroup& h1,
                                          const PermGroup& h2, std::uint64_t budget) {
  if (!IsSubgroup(ambient, h1) || !IsSubgroup(ambient, h2)) {
    throw std::invalid_argument("AreConjugateSubgroups: subgroup not contained in ambient");
  }
  const std::size_t degree = ambient.degree();
  const PermGroup a = Materialized(h1);
  const PermGroup b = Materialized(h2);
  if (a.size() != b.size()) return std::nullopt;
  const Key target(b.key().begin(), b.key().end());
  Key start(a.key().begin(), a.key().end());
  if (start == target) return Perm(degree);

  struct Visit {
    std::size_t parent;
    std::size_t generator;
  };
  std::map<Key, std::size_t> index;
  std::vector<Key> keys{start};
  std::vector<Visit> visits{{0, 0}};
  index.emplace(start, 0);
  const auto& gens = ambient.generators();
  const std::uint64_t max_nodes = std::max<std::uint64_t>(1, budget / a.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Key next = ConjugateKey(keys[i], degree, gens[gi]);
      if (index.count(next)) continue;
      const std::size_t id = keys.size();
      if (id >= max_nodes) {
        throw BudgetExceeded("AreConjugateSubgroups: conjugation orbit exceeds budget");
      }
      index.emplace(next, id);
      visits.push_back({i, gi});
      const bool hit = next == target;
      keys.push_back(std::move(next));
      if (hit) {
        std::vector<std::size_t> path;
        for (std::size_t v = id; v != 0; v = visits[v].parent) path.push_back(visits[v].generator);
        Perm g(degree);
        for (auto it = path.rbegin(); it != path.rend(); ++it) g = g * gens[*it];
        return g;
      }
    }
  }
  return std::nullopt;
}

std::vector<PermGroup> RegularDihedralSubgroups(const PermGroup& ambient, std::size_t two_n,
                                                std::uint64_t budget) {
  if (ambient.degree() != two_n || two_n % 2 != 0 || two_n < 6) {
    throw std::invalid_argument("RegularDihedralSubgroups: need degree 2n with n >= 3");
  }
  CheckOrderWithin(ambient, budget, "RegularDihedralSubgroups");
  const std::size_t n = two_n / 2;
  const auto units = UnitsAboveOne(n);
  std::map<Key, PermGroup> found;
  std::vector<Point> cycle0(n);
  std::vector<Point> cycle1(n);
  std::vector<bool> in_first(two_n);
  std::vector<Point> y(two_n);
  ambient.ForEachElement([&](const Perm& x) {
    if (x[0] == 0) return true;
    if (!CycleOfLength(x, 0, n, cycle0)) return true;
    if (!IsCanonicalGenerator(cycle0, units)) return true;
    std::fill(in_first.begin(), in_first.end(), false);
    for (Point p : cycle0) in_first[p] = true;
    const auto u0 = static_cast<Point>(
        std::find(in_first.begin(), in_first.end(), false) - in_first.begin());
    if (!CycleOfLength(x, u0, n, cycle1)) return true;
    // The involutions inverting x and swapping its two cycles form one coset
    // of <x>; the member sending 0 to u0 decides whether the coset lies in
    // the ambient group.
    for (std::size_t k = 0; k < n; ++k) {
      const Point from = cycle0[k];
      const Point to = cycle1[(n - k) % n];
      y[from] = to;
      y[to] = from;
    }
    Perm involution = Perm::FromImagesUnchecked(y);
    if (!ambient.contains(involution)) return true;
    PermGroup group = Closure(two_n, {x, std::move(involution)});
    Key key(group.key().begin(), group.key().end());
    found.emplace(std::move(key), std::move(group));
    return true;
  });
  return SortedByKey(std::move(found));
}

std::vector<PermGroup> RegularCyclicSubgroups(const PermGroup& ambient, std::size_t n,
                                              std::uint64_t budget) {
  if (n == 0) throw std::invalid_argument("RegularCyclicSubgroups: n must be positive");
  std::map<Key, PermGroup> found;
  if (ambient.degree() == 2 * n && n >= 3) {
    for (const PermGroup& dihedral : RegularDihedralSubgroups(ambient, 2 * n, budget)) {
      PermGroup core = CyclicCore(dihedral);
      Key key(core.key().begin(), core.key().end());
      found.emplace(std::move(key), std::move(core));
    }
    return SortedByKey(std::move(found));
  }
  if (ambient.degree() != n) {
    throw std::invalid_argument("RegularCyclicSubgroups: degree must be n or 2n");
  }
  CheckOrderWithin(ambient, budget, "RegularCyclicSubgroups");
  if (n == 1) return {PermGroup::Trivial(1)};
  const auto units = UnitsAboveOne(n);
  std::vector<Point> cycle0(n);
  ambient.ForEachElement([&](const Perm& x) {
    if (x[0] == 0) return true;
    if (!CycleOfLength(x, 0, n, cycle0)) return true;
    if (!IsCanonicalGenerator(cycle0, units)) return true;
    PermGroup group = Closure(n, {x});
    Key key(group.key().begin(), group.key().end());
    found.emplace(std::move(key), std::move(group));
    return true;
  });
  return SortedByKey(std::move(found));
}

PermGroup CyclicCore(const PermGroup& dihedral) {
  const PermGroup group = Materialized(dihedral);
  const std::size_t n = group.degree() / 2;
  for (std::size_t i = 0; i < group.size(); ++i) {
    Perm e = group.element(i);
    if (e.order() == n && e[0] != 0) {
      return Closure(group.degree(), {std::move(e)});
    }
  }
  throw std::invalid_argument("CyclicCore: no element of order n");
}

bool IsNormal(const PermGroup& ambient, const PermGroup& h) {
  if (!IsSubgroup(ambient, h)) {
    throw std::invalid_argument("IsNormal: H is not a subgroup of the ambient group");
  }
  for (const Perm& g : ambient.generators()) {
    for (const Perm& x : h.generators()) {
      if (!h.contains(Conjugate(x, g))) return false;
    }
  }
  return true;
}

namespace {

// Appends the induced block permutation to each generator's images.
std::vector<Perm> ExtendToBlocks(const PermGroup& group, const Partition& partition) {
  if (partition.degree() != group.degree()) {
    throw std::invalid_argument("partition degree does not match group degree");
  }
  const std::size_t degree = group.degree();
  const std::size_t blocks = partition.size();
  std::vector<Perm> extended;
  for (const Perm& g : group.generators()) {
    std::vector<Point> images(g.images().begin(), g.images().end());
    images.resize(degree + blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      const auto& block = partition.blocks()[b];
      const std::size_t target = partition.block_of(g[block.front()]);
      if (partition.blocks()[target].size() != block.size()) {
        throw std::invalid_argument("partition is not invariant under the group");
      }
      for (Point x : block) {
        if (partition.block_of(g[x]) != target) {
          throw std::invalid_argument("partition is not invariant under the group");
        }
      }
      images[degree + b] = static_cast<Point>(degree + target);
    }
    extended.push_back(Perm(std::move(images)));
  }
  return extended;
}

}  // namespace

PermGroup KernelOnPartition(const PermGroup& group, const Partition& partition) {
  const std::size_t degree = group.degree();
  const std::size_t blocks = partition.size();
  const std::vector<Perm> extended = ExtendToBlocks(group, partition);
  std::vector<Point> block_points(blocks);
  std::iota(block_points.begin(), block_points.end(), static_cast<Point>(degree));
  StabilizerChain chain(degree + blocks, extended, block_points);
  std::vector<Perm> kernel_gens;
  for (const Perm& g : chain.generators(blocks)) {
    auto images = g.images().first(degree);
    kernel_gens.push_back(
        Perm::FromImagesUnchecked(std::vector<Point>(images.begin(), images.end())));
  }
  return Closure(degree, std::move(kernel_gens));
}

PermGroup InducedBlockAction(const PermGroup& group, const Partition& partition) {
  const std::size_t degree = group.degree();
  const std::vector<Perm> extended = ExtendToBlocks(group, partition);
  std::vector<Perm> block_gens;
  for (const Perm& g : extended) {
    std::vector<Point> images(partition.size());
    for (std::size_t b = 0; b < partition.size(); ++b) {
      images[b] = static_cast<Point>(g[degree + b] - degree);
    }
    block_gens.push_back(Perm(std::move(images)));
  }
  return Closure(partition.size(), std::move(block_gens));
}

ConjugacyClasses ClassifyUnderConjugation(const PermGroup& ambient,
                                          const std::vector<PermGroup>& subgroups) {
  const std::size_t degree = ambient.degree();
  std::map<Key, std::size_t> index;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const PermGroup& h = subgroups[i];
    if (!h.materialized() || h.degree() != degree) {
      throw std::invalid_argument("ClassifyUnderConjugation: subgroups must be materialized");
    }
    index.emplace(Key(h.key().begin(), h.key().end()), i);
  }
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  ConjugacyClasses classes;
  classes.class_of.assign(subgroups.size(), kUnassigned);
  classes.conjugator.assign(subgroups.size(), Perm(degree));
  for (std::size_t start = 0; start < subgroups.size(); ++start) {
    if (classes.class_of[start] != kUnassigned) continue;
    const std::size_t cls = classes.representative.size();
    classes.representative.push_back(start);
    classes.class_of[start] = cls;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (const Perm& g : ambient.generators()) {
        const Key next = ConjugateKey(subgroups[i].key(), degree, g);
        const auto it = index.find(next);
        if (it == index.end()) {
          throw std::invalid_argument(
              "ClassifyUnderConjugation: list is not closed under conjugation");
        }
        const std::size_t j = it->second;
        if (classes.class_of[j] != kUnassigned) continue;
        classes.class_of[j] = cls;
        classes.conjugator[j] = classes.conjugator[i] * g;
        queue.push_back(j);
      }
    }
  }
  return classes;
}

}  // namespace cayci
