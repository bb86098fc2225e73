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

#ifndef CAYCI_PERM_GROUP_HPP_
#define CAYCI_PERM_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "cayci/perm.hpp"

namespace cayci {

// Groups with at most this many elements are stored element by element.
inline constexpr std::uint64_t kDefaultMaterializationCap = 2'000'000;

// Upper bound on the number of group elements a streaming search (regular
// subgroup enumeration, conjugacy orbits) will visit before refusing.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

// Base and strong generating set built by the deterministic Schreier-Sims
// algorithm. Level i holds the orbit of base point i under the pointwise
// stabilizer of the earlier base points, together with a transversal.
class StabilizerChain {
 public:
  StabilizerChain() = default;

  // `base_prefix` points are kept at the front of the base even when their
  // basic orbits are trivial, so callers can address "the stabilizer of the
  // prefix" by level index.
  StabilizerChain(std::size_t degree, const std::vector<Perm>& generators,
                  std::span<const Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  Point base_point(std::size_t level) const { return levels_[level].base_point; }
  std::span<const Point> orbit(std::size_t level) const { return levels_[level].orbit; }

  // Strong generators of the pointwise stabilizer of base[0..level).
  std::vector<Perm> generators(std::size_t level) const;

  Order order() const;
  bool contains(const Perm& g) const;

  // Visits every element exactly once in a fixed order. Returning false from
  // `visit` stops the walk early.
  void ForEachElement(const std::function<bool(const Perm&)>& visit) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Point> orbit;
    std::vector<int> index_of;  // point -> position in orbit, or -1
    std::vector<Perm> transversal;
    std::vector<Perm> transversal_inverse;
  };

  // Sifts g starting at `from_level`; returns the residue and the level at
  // which sifting stopped (depth() when it passed every level).
  std::pair<Perm, std::size_t> Strip(Perm g, std::size_t from_level) const;
  void RebuildLevel(std::size_t level);
  std::size_t FixedPrefix(const Perm& g) const;

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
  std::vector<Perm> strong_generators_;
};

struct ClosureOptions {
  std::uint64_t cap = kDefaultMaterializationCap;
  // When false a group larger than `cap` is an error rather than a group
  // whose order is known but whose elements are not stored.
  bool order_fallback = true;
};

// An immutable permutation group. Copies share state, and every query is
// const, so a group can be read from many threads at once.
class PermGroup {
 public:
  // The trivial group of degree 1.
  PermGroup();

  // Builds the stabilizer chain; elements are not materialized.
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  static PermGroup Trivial(std::size_t degree);

  std::size_t degree() const;
  const std::vector<Perm>& generators() const;
  const StabilizerChain& chain() const;
  Order order() const;
  bool contains(const Perm& g) const;

  bool materialized() const;
  // Number of stored elements; zero when not materialized.
  std::size_t size() const;
  // i-th element in sorted order. Requires materialized().
  Perm element(std::size_t i) const;
  std::span<const Point> element_images(std::size_t i) const;

  // Sorted, concatenated element images. Two materialized groups are the same
  // subgroup exactly when their keys are equal.
  std::span<const Point> key() const;

  void ForEachElement(const std::function<bool(const Perm&)>& visit) const;

 private:
  friend PermGroup Closure(std::size_t, std::vector<Perm>, const ClosureOptions&);

  struct Data {
    std::size_t degree = 1;
    std::vector<Perm> generators;
    StabilizerChain chain;
    bool materialized = false;
    std::vector<Point> flat;
  };
  std::shared_ptr<const Data> data_;
};

// The group generated by `generators`, materialized when its order is at most
// options.cap. Throws std::invalid_argument on degree mismatch and
// BudgetExceeded when the order exceeds the cap without fallback.
PermGroup Closure(std::size_t degree, std::vector<Perm> generators,
                  const ClosureOptions& options = {});

// Disjoint nonempty blocks covering {0, ..., degree-1}.
class Partition {
 public:
  Partition(std::size_t degree, std::vector<std::vector<Point>> blocks);
  static Partition Singletons(std::size_t degree);

  std::size_t degree() const { return block_of_.size(); }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<std::vector<Point>>& blocks() const { return blocks_; }
  std::size_t block_of(Point x) const { return block_of_[x]; }

 private:
  std::vector<std::vector<Point>> blocks_;
  std::vector<std::size_t> block_of_;
};

}  // namespace cayci

#endif  // CAYCI_PERM_GROUP_HPP_
