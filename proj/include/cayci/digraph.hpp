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

#ifndef CAYCI_DIGRAPH_HPP_
#define CAYCI_DIGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cayci/group.hpp"
#include "cayci/perm.hpp"
#include "cayci/perm_group.hpp"

namespace cayci {

using Arc = std::pair<std::size_t, std::size_t>;

// Loop-free digraph stored as a dense bit matrix, one row of 64-bit words per
// tail vertex.
class Digraph {
 public:
  explicit Digraph(std::size_t vertex_count);
  Digraph(std::size_t vertex_count, const std::vector<Arc>& arcs);

  std::size_t vertex_count() const { return n_; }
  bool has_arc(std::size_t tail, std::size_t head) const {
    return (bits_[tail * words_ + head / 64] >> (head % 64)) & 1u;
  }
  // Throws std::invalid_argument on a loop or an out-of-range vertex.
  void add_arc(std::size_t tail, std::size_t head);

  std::size_t arc_count() const;
  // Sorted by (tail, head).
  std::vector<Arc> arcs() const;

  // Out-neighbourhood of v as a bit mask. Requires vertex_count() <= 64.
  std::uint64_t out_mask(std::size_t v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void CheckVertex(std::size_t v) const;

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// Arc x -> s x for every vertex x and s in S, on the canonical element order.
Digraph Cayley(const GroupSpec& spec, const ConnectionSet& set);

bool IsGraph(const Digraph& d);
bool StronglyConnected(const Digraph& d);

enum class Direction { kIn, kOut };
std::vector<std::size_t> Neighbors(const Digraph& d, std::size_t v, Direction direction);

// Vertices at distance exactly k from v. Throws std::invalid_argument when d
// is not a graph.
std::vector<std::size_t> DistanceSet(const Digraph& d, std::size_t v, std::size_t k);

// Blocks become vertices; distinct blocks B1 -> B2 when some arc leaves B1
// for B2.
Digraph Quotient(const Digraph& d, const Partition& partition);

// X[Y] with (x, y) at index x * |V(Y)| + y.
Digraph LexProduct(const Digraph& x, const Digraph& y);

// Image of d under the vertex map v -> p[v].
Digraph Relabel(const Digraph& d, const Perm& p);
bool IsAutomorphism(const Digraph& d, const Perm& p);

Digraph CycleGraph(std::size_t n);
Digraph DirectedCycle(std::size_t n);
Digraph CompleteGraph(std::size_t n);
Digraph CompleteBipartite(std::size_t m, std::size_t n);
// Every arc runs from the m-part to the n-part.
Digraph OrientedCompleteBipartite(std::size_t m, std::size_t n);
Digraph EmptyGraph(std::size_t n);
// Point-line incidence graph of the Fano plane: points 0..6, lines 7..13.
Digraph HeawoodGraph();

// "cycle:5", "directed_cycle:7", "complete:4", "complete_bipartite:3,3",
// "oriented_complete_bipartite:1,1", "empty:2", "heawood".
Digraph NamedDigraph(std::string_view name);

// First line: vertex count. Then one "tail head" pair per line. Blank lines
// and lines starting with '#' are ignored on input.
std::string WriteText(const Digraph& d);
Digraph ReadText(std::string_view text);

}  // namespace cayci

#endif  // CAYCI_DIGRAPH_HPP_
