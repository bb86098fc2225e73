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

#include "cayci/digraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "cayci/errors.hpp"

namespace cayci {

Digraph::Digraph(std::size_t vertex_count)
    : n_(vertex_count), words_((vertex_count + 63) / 64), bits_(n_ * words_, 0) {
  if (vertex_count == 0) throw std::invalid_argument("Digraph: vertex count must be positive");
}

Digraph::Digraph(std::size_t vertex_count, const std::vector<Arc>& arcs)
    : Digraph(vertex_count) {
  for (const auto& [u, v] : arcs) add_arc(u, v);
}

void Digraph::CheckVertex(std::size_t v) const {
  if (v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for " +
                            std::to_string(n_) + " vertices");
  }
}

void Digraph::add_arc(std::size_t tail, std::size_t head) {
  CheckVertex(tail);
  CheckVertex(head);
  if (tail == head) throw std::invalid_argument("Digraph: loops are not allowed");
  bits_[tail * words_ + head / 64] |= std::uint64_t{1} << (head % 64);
}

std::size_t Digraph::arc_count() const {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (has_arc(u, v)) result.emplace_back(u, v);
    }
  }
  return result;
}

std::uint64_t Digraph::out_mask(std::size_t v) const {
  if (n_ > 64) throw std::logic_error("out_mask requires at most 64 vertices");
  CheckVertex(v);
  return bits_[v];
}

Digraph Cayley(const GroupSpec& spec, const ConnectionSet& set) {
  Digraph d(spec.order());
  for (std::size_t x = 0; x < spec.order(); ++x) {
    const Element gx = ElementAt(spec, x);
    for (Element s : set.elements()) d.add_arc(x, IndexOf(spec, Multiply(spec, s, gx)));
  }
  return d;
}

bool IsGraph(const Digraph& d) {
  for (std::size_t u = 0; u < d.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < d.vertex_count(); ++v) {
      if (d.has_arc(u, v) != d.has_arc(v, u)) return false;
    }
  }
  return true;
}

namespace {

std::size_t ReachableCount(const Digraph& d, bool reverse) {
  const std::size_t n = d.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v] && (reverse ? d.has_arc(v, u) : d.has_arc(u, v))) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count;
}

}  // namespace

bool StronglyConnected(const Digraph& d) {
  return ReachableCount(d, false) == d.vertex_count() &&
         ReachableCount(d, true) == d.vertex_count();
}

std::vector<std::size_t> Neighbors(const Digraph& d, std::size_t v, Direction direction) {
  if (v >= d.vertex_count()) throw std::out_of_range("Neighbors: vertex out of range");
  std::vector<std::size_t> result;
  for (std::size_t u = 0; u < d.vertex_count(); ++u) {
    if (direction == Direction::kOut ? d.has_arc(v, u) : d.has_arc(u, v)) result.push_back(u);
  }
  return result;
}

std::vector<std::size_t> DistanceSet(const Digraph& d, std::size_t v, std::size_t k) {
  if (!IsGraph(d)) throw std::invalid_argument("DistanceSet: digraph is not symmetric");
  if (v >= d.vertex_count()) throw std::out_of_range("DistanceSet: vertex out of range");
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> dist(n, n);
  dist[v] = 0;
  std::vector<std::size_t> layer{v};
  for (std::size_t level = 0; level < k && !layer.empty(); ++level) {
    std::vector<std::size_t> next;
    for (std::size_t u : layer) {
      for (std::size_t w = 0; w < n; ++w) {
        if (d.has_arc(u, w) && dist[w] == n) {
          dist[w] = level + 1;
          next.push_back(w);
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

Digraph Quotient(const Digraph& d, const Partition& partition) {
  if (partition.degree() != d.vertex_count()) {
    throw std::invalid_argument("Quotient: partition does not match the vertex set");
  }
  Digraph q(partition.size());
  for (const auto& [u, v] : d.arcs()) {
    const std::size_t bu = partition.block_of(static_cast<Point>(u));
    const std::size_t bv = partition.block_of(static_cast<Point>(v));
    if (bu != bv) q.add_arc(bu, bv);
  }
  return q;
}

Digraph LexProduct(const Digraph& x, const Digraph& y) {
  const std::size_t ny = y.vertex_count();
  Digraph d(x.vertex_count() * ny);
  for (std::size_t x1 = 0; x1 < x.vertex_count(); ++x1) {
    for (std::size_t y1 = 0; y1 < ny; ++y1) {
      for (std::size_t x2 = 0; x2 < x.vertex_count(); ++x2) {
        for (std::size_t y2 = 0; y2 < ny; ++y2) {
          if ((x1 == x2 && y.has_arc(y1, y2)) || x.has_arc(x1, x2)) {
            d.add_arc(x1 * ny + y1, x2 * ny + y2);
          }
        }
      }
    }
  }
  return d;
}

Digraph Relabel(const Digraph& d, const Perm& p) {
  if (p.degree() != d.vertex_count()) throw std::invalid_argument("Relabel: degree mismatch");
  Digraph out(d.vertex_count());
  for (const auto& [u, v] : d.arcs()) out.add_arc(p[u], p[v]);
  return out;
}

bool IsAutomorphism(const Digraph& d, const Perm& p) {
  if (p.degree() != d.vertex_count()) return false;
  for (const auto& [u, v] : d.arcs()) {
    if (!d.has_arc(p[u], p[v])) return false;
  }
  return true;
}

namespace {

void RequirePositive(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": size must be positive");
}

}  // namespace

Digraph CycleGraph(std::size_t n) {
  RequirePositive(n, "cycle");
  Digraph d(n);
  if (n == 1) return d;
  for (std::size_t i = 0; i < n; ++i) {
    d.add_arc(i, (i + 1) % n);
    d.add_arc((i + 1) % n, i);
  }
  return d;
}

Digraph DirectedCycle(std::size_t n) {
  RequirePositive(n, "directed_cycle");
  Digraph d(n);
  if (n == 1) return d;
  for (std::size_t i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
  return d;
}

Digraph CompleteGraph(std::size_t n) {
  RequirePositive(n, "complete");
  Digraph d(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) d.add_arc(u, v);
    }
  }
  return d;
}

Digraph CompleteBipartite(std::size_t m, std::size_t n) {
  RequirePositive(m, "complete_bipartite");
  RequirePositive(n, "complete_bipartite");
  Digraph d(m + n);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = m; v < m + n; ++v) {
      d.add_arc(u, v);
      d.add_arc(v, u);
    }
  }
  return d;
}

Digraph OrientedCompleteBipartite(std::size_t m, std::size_t n) {
  RequirePositive(m, "oriented_complete_bipartite");
  RequirePositive(n, "oriented_complete_bipartite");
  Digraph d(m + n);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = m; v < m + n; ++v) d.add_arc(u, v);
  }
  return d;
}

Digraph EmptyGraph(std::size_t n) {
  RequirePositive(n, "empty");
  return Digraph(n);
}

Digraph HeawoodGraph() {
  Digraph d(14);
  for (std::size_t line = 0; line < 7; ++line) {
    for (std::size_t offset : {0, 1, 3}) {
      const std::size_t point = (line + offset) % 7;
      d.add_arc(point, 7 + line);
      d.add_arc(7 + line, point);
    }
  }
  return d;
}

namespace {

std::size_t ParseSize(std::string_view text, std::string_view context) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("bad number '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
  return value;
}

}  // namespace

Digraph NamedDigraph(std::string_view name) {
  const auto colon = name.find(':');
  const std::string_view kind = name.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? "" : name.substr(colon + 1);
  std::vector<std::size_t> sizes;
  if (!args.empty()) {
    std::size_t pos = 0;
    while (true) {
      const auto comma = args.find(',', pos);
      sizes.push_back(ParseSize(args.substr(pos, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - pos),
                                name));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  auto want = [&](std::size_t count) {
    if (sizes.size() != count) {
      throw ParseError("'" + std::string(kind) + "' takes " + std::to_string(count) +
                       " size argument(s)");
    }
  };
  try {
    if (kind == "heawood") {
      want(0);
      return HeawoodGraph();
    }
    if (kind == "cycle") return want(1), CycleGraph(sizes[0]);
    if (kind == "directed_cycle") return want(1), DirectedCycle(sizes[0]);
    if (kind == "complete") return want(1), CompleteGraph(sizes[0]);
    if (kind == "empty") return want(1), EmptyGraph(sizes[0]);
    if (kind == "complete_bipartite") return want(2), CompleteBipartite(sizes[0], sizes[1]);
    if (kind == "oriented_complete_bipartite") {
      want(2);
      return OrientedCompleteBipartite(sizes[0], sizes[1]);
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown named digraph '" + std::string(name) + "'");
}

std::string WriteText(const Digraph& d) {
  std::ostringstream out;
  out << d.vertex_count() << '\n';
  for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

Digraph ReadText(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Digraph> d;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::istringstream fields(line);
    std::string extra;
    try {
      if (!d) {
        long long n = 0;
        if (!(fields >> n) || (fields >> extra) || n <= 0) {
          throw ParseError("expected a positive vertex count");
        }
        d.emplace(static_cast<std::size_t>(n));
      } else {
        long long u = 0, v = 0;
        if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0) {
          throw ParseError("expected 'tail head'");
        }
        d->add_arc(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
      }
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!d) throw ParseError("missing vertex count");
  return *d;
}

}  // namespace cayci
