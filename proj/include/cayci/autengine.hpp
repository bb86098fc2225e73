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

#ifndef CAYCI_AUTENGINE_HPP_
#define CAYCI_AUTENGINE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayci/digraph.hpp"
#include "cayci/perm.hpp"
#include "cayci/perm_group.hpp"

namespace cayci {

// Largest digraph the engine accepts; rows are single 64-bit words.
inline constexpr std::size_t kEngineLimit = 64;

// The canonically relabeled digraph. Equal certificates mean isomorphic
// digraphs.
class Certificate {
 public:
  Certificate() = default;
  Certificate(std::size_t vertex_count, std::vector<std::uint64_t> rows);

  std::size_t vertex_count() const { return n_; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  // Sorted arc list of the canonical digraph.
  std::vector<Arc> arcs() const;
  Digraph ToDigraph() const;

  // "<n>:<row0>.<row1>..." with rows in lowercase hex.
  std::string ToHex() const;
  static Certificate FromHex(std::string_view text);

  friend bool operator==(const Certificate&, const Certificate&) = default;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct CertificateHash {
  std::size_t operator()(const Certificate& c) const noexcept;
};

struct Canonical {
  Certificate certificate;
  // labeling[i] is the vertex placed at canonical position i.
  std::vector<Point> labeling;
  // Generators of Aut(d).
  std::vector<Perm> generators;
  std::uint64_t nodes = 0;  // search tree nodes visited
};

// Individualization-refinement search. Throws BudgetExceeded above
// kEngineLimit vertices.
Canonical Canonicalize(const Digraph& d);

// Not materialized; use Closure() on its generators when elements are needed.
PermGroup AutomorphismGroup(const Digraph& d);
Certificate CanonicalForm(const Digraph& d);

// A vertex bijection carrying arcs of d1 onto arcs of d2, or nullopt.
std::optional<Perm> Isomorphism(const Digraph& d1, const Digraph& d2);

}  // namespace cayci

#endif  // CAYCI_AUTENGINE_HPP_
