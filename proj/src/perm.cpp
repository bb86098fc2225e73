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

#include "cayci/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cayci {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("Perm: images do not form a bijection");
    }
    seen[x] = true;
  }
}

Perm Perm::FromImagesUnchecked(std::vector<Point> images) {
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::FromCycles(std::size_t degree,
                      std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (const auto& cycle : cycles) {
    if (cycle.size() == 0) continue;
    const int* begin = cycle.begin();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = begin[i];
      const int to = begin[(i + 1) % cycle.size()];
      if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= degree ||
          static_cast<std::size_t>(to) >= degree) {
        throw std::invalid_argument("Perm::FromCycles: point out of range");
      }
      images[from] = static_cast<Point>(to);
    }
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Point>(i);
  }
  return FromImagesUnchecked(std::move(inv));
}

Perm Perm::pow(long long exponent) const {
  Perm base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Perm result(degree());
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(static_cast<Point>(x));
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Perm::ToString() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("Perm: degree mismatch in composition");
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q.images_[p.images_[i]];
  return Perm::FromImagesUnchecked(std::move(images));
}

Perm Conjugate(const Perm& h, const Perm& g) { return g.inverse() * h * g; }

void ComposeInto(const Perm& p, const Perm& q, Perm& dst) {
  // dst must not alias p or q.
  dst.images_.resize(p.images_.size());
  for (std::size_t i = 0; i < p.images_.size(); ++i) {
    dst.images_[i] = q.images_[p.images_[i]];
  }
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cayci
