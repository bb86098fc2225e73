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

#include "cayci/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cayci/errors.hpp"

namespace cayci {

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree,
                                 const std::vector<Perm>& generators,
                                 std::span<const Point> base_prefix)
    : degree_(degree) {
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw std::invalid_argument("StabilizerChain: generator degree mismatch");
    }
    if (!g.is_identity()) strong_generators_.push_back(g);
  }
  for (Point b : base_prefix) {
    if (b >= degree) throw std::invalid_argument("StabilizerChain: base point out of range");
    Level level;
    level.base_point = b;
    levels_.push_back(std::move(level));
  }
  for (const Perm& s : strong_generators_) {
    if (FixedPrefix(s) == levels_.size()) {
      for (std::size_t x = 0; x < degree; ++x) {
        if (s[x] != x) {
          Level level;
          level.base_point = static_cast<Point>(x);
          levels_.push_back(std::move(level));
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) RebuildLevel(i);

  // Schreier-Sims: every Schreier generator of level i must sift through the
  // levels below it. A failed sift contributes a new strong generator and the
  // scan resumes at the deepest level that changed.
  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t level_index = i - 1;
    bool restarted = false;
    const std::vector<Perm> level_gens = this->generators(level_index);
    for (std::size_t j = 0; j < levels_[level_index].orbit.size() && !restarted; ++j) {
      for (const Perm& s : level_gens) {
        const Level& level = levels_[level_index];
        const Point p = level.orbit[j];
        const Point q = s[p];
        Perm h = level.transversal[j] * s *
                 level.transversal_inverse[static_cast<std::size_t>(level.index_of[q])];
        auto [residue, stop] = Strip(std::move(h), level_index + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) {
          for (std::size_t x = 0; x < degree_; ++x) {
            if (residue[x] != x) {
              Level fresh;
              fresh.base_point = static_cast<Point>(x);
              levels_.push_back(std::move(fresh));
              break;
            }
          }
        }
        strong_generators_.push_back(std::move(residue));
        for (std::size_t l = level_index + 1; l <= stop; ++l) RebuildLevel(l);
        i = stop + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

std::size_t StabilizerChain::FixedPrefix(const Perm& g) const {
  std::size_t k = 0;
  while (k < levels_.size() && g[levels_[k].base_point] == levels_[k].base_point) ++k;
  return k;
}

std::vector<Perm> StabilizerChain::generators(std::size_t level) const {
  std::vector<Perm> result;
  for (const Perm& s : strong_generators_) {
    if (FixedPrefix(s) >= level) result.push_back(s);
  }
  return result;
}

void StabilizerChain::RebuildLevel(std::size_t level_index) {
  Level& level = levels_[level_index];
  const std::vector<Perm> gens = generators(level_index);
  level.orbit.assign(1, level.base_point);
  level.index_of.assign(degree_, -1);
  level.index_of[level.base_point] = 0;
  level.transversal.assign(1, Perm(degree_));
  level.transversal_inverse.assign(1, Perm(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const Point p = level.orbit[k];
    for (const Perm& s : gens) {
      const Point q = s[p];
      if (level.index_of[q] >= 0) continue;
      level.index_of[q] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(q);
      Perm u = level.transversal[k] * s;
      level.transversal_inverse.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
    }
  }
}

std::pair<Perm, std::size_t> StabilizerChain::Strip(Perm g, std::size_t from_level) const {
  Perm scratch(degree_);
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    const int idx = level.index_of[g[level.base_point]];
    if (idx < 0) return {std::move(g), l};
    ComposeInto(g, level.transversal_inverse[static_cast<std::size_t>(idx)], scratch);
    std::swap(g, scratch);
  }
  return {std::move(g), levels_.size()};
}

Order StabilizerChain::order() const {
  Order result = 1;
  for (const Level& level : levels_) result *= level.orbit.size();
  return result;
}

bool StabilizerChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stop] = Strip(g, 0);
  return stop == levels_.size() && residue.is_identity();
}

void StabilizerChain::ForEachElement(const std::function<bool(const Perm&)>& visit) const {
  // Every element factors uniquely as u_{k-1} * ... * u_1 * u_0 with u_i drawn
  // from the level-i transversal; walk the factorizations depth first.
  const std::size_t k = levels_.size();
  if (k == 0) {
    visit(Perm(degree_));
    return;
  }
  std::vector<Perm> prefix(k + 1, Perm(degree_));
  std::vector<std::size_t> choice(k, 0);
  std::size_t level = k;  // prefix[level] is the product of factors above
  while (true) {
    const std::size_t l = level - 1;
    ComposeInto(prefix[level], levels_[l].transversal[choice[l]], prefix[l]);
    if (l == 0) {
      if (!visit(prefix[0])) return;
      // advance
      std::size_t up = 0;
      while (true) {
        if (++choice[up] < levels_[up].transversal.size()) break;
        choice[up] = 0;
        ++up;
        if (up == k) return;
      }
      level = up + 1;
    } else {
      level = l;
    }
  }
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup() : PermGroup(1, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators) {
  if (degree == 0) throw std::invalid_argument("PermGroup: degree must be positive");
  auto data = std::make_shared<Data>();
  data->degree = degree;
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw std::invalid_argument("PermGroup: generator degree " +
                                  std::to_string(g.degree()) + " != " +
                                  std::to_string(degree));
    }
  }
  data->chain = StabilizerChain(degree, generators);
  data->generators = std::move(generators);
  data_ = std::move(data);
}

PermGroup PermGroup::Trivial(std::size_t degree) { return Closure(degree, {}); }

std::size_t PermGroup::degree() const { return data_->degree; }
const std::vector<Perm>& PermGroup::generators() const { return data_->generators; }
const StabilizerChain& PermGroup::chain() const { return data_->chain; }
Order PermGroup::order() const { return data_->chain.order(); }
bool PermGroup::contains(const Perm& g) const { return data_->chain.contains(g); }
bool PermGroup::materialized() const { return data_->materialized; }

std::size_t PermGroup::size() const {
  return data_->materialized ? data_->flat.size() / data_->degree : 0;
}

std::span<const Point> PermGroup::element_images(std::size_t i) const {
  if (!data_->materialized) throw std::logic_error("PermGroup: not materialized");
  return std::span<const Point>(data_->flat).subspan(i * data_->degree, data_->degree);
}

Perm PermGroup::element(std::size_t i) const {
  const auto images = element_images(i);
  return Perm::FromImagesUnchecked(std::vector<Point>(images.begin(), images.end()));
}

std::span<const Point> PermGroup::key() const {
  if (!data_->materialized) throw std::logic_error("PermGroup: not materialized");
  return data_->flat;
}

void PermGroup::ForEachElement(const std::function<bool(const Perm&)>& visit) const {
  data_->chain.ForEachElement(visit);
}

PermGroup Closure(std::size_t degree, std::vector<Perm> generators,
                  const ClosureOptions& options) {
  PermGroup group(degree, std::move(generators));
  const Order order = group.order();
  if (order > options.cap) {
    if (!options.order_fallback) {
      throw BudgetExceeded("group order " + order.str() + " exceeds materialization cap " +
                           std::to_string(options.cap));
    }
    return group;
  }
  auto data = std::make_shared<PermGroup::Data>(*group.data_);
  const auto count = static_cast<std::size_t>(order);
  std::vector<Point> flat;
  flat.reserve(count * degree);
  group.ForEachElement([&](const Perm& g) {
    flat.insert(flat.end(), g.images().begin(), g.images().end());
    return true;
  });
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat.begin() + a * degree, flat.begin() + (a + 1) * degree,
                                        flat.begin() + b * degree, flat.begin() + (b + 1) * degree);
  });
  data->flat.resize(flat.size());
  for (std::size_t i = 0; i < count; ++i) {
    std::copy_n(flat.begin() + idx[i] * degree, degree, data->flat.begin() + i * degree);
  }
  data->materialized = true;
  group.data_ = std::move(data);
  return group;
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::size_t degree, std::vector<std::vector<Point>> blocks)
    : blocks_(std::move(blocks)), block_of_(degree, static_cast<std::size_t>(-1)) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw std::invalid_argument("Partition: empty block");
    for (Point x : blocks_[b]) {
      if (x >= degree) throw std::invalid_argument("Partition: point out of range");
      if (block_of_[x] != static_cast<std::size_t>(-1)) {
        throw std::invalid_argument("Partition: blocks overlap");
      }
      block_of_[x] = b;
    }
  }
  for (std::size_t owner : block_of_) {
    if (owner == static_cast<std::size_t>(-1)) {
      throw std::invalid_argument("Partition: blocks do not cover the point set");
    }
  }
}

Partition Partition::Singletons(std::size_t degree) {
  std::vector<std::vector<Point>> blocks(degree);
  for (std::size_t i = 0; i < degree; ++i) blocks[i] = {static_cast<Point>(i)};
  return Partition(degree, std::move(blocks));
}

}  // namespace cayci
