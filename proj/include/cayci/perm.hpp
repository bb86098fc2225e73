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

#ifndef CAYCI_PERM_HPP_
#define CAYCI_PERM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cayci {

using Point = std::uint16_t;

// Group orders overflow 64 bits quickly (the empty graph on 30 vertices has
// 30! automorphisms), so orders are arbitrary precision.
using Order = boost::multiprecision::cpp_int;

// A bijection on {0, ..., degree-1}. Composition follows the right-action
// convention: (p * q) maps x to q(p(x)), i.e. "apply p, then q".
class Perm {
 public:
  Perm() = default;

  // Identity of the given degree.
  explicit Perm(std::size_t degree);

  // Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  // Skips validation; for hot loops that build images known to be bijective.
  static Perm FromImagesUnchecked(std::vector<Point> images);

  // Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Perm FromCycles(std::size_t degree,
                         std::initializer_list<std::initializer_list<int>> cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(long long exponent) const;

  // Least w >= 1 with p^w = 1.
  std::uint64_t order() const;

  // Non-trivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  // Cycle notation, "()" for the identity.
  std::string ToString() const;

  friend Perm operator*(const Perm& p, const Perm& q);
  friend void ComposeInto(const Perm& p, const Perm& q, Perm& dst);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

// g^-1 * h * g.
Perm Conjugate(const Perm& h, const Perm& g);

// dst = p * q without allocating when dst already has the right size.
void ComposeInto(const Perm& p, const Perm& q, Perm& dst);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace cayci

#endif  // CAYCI_PERM_HPP_
