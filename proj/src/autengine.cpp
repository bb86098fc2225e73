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

#include "cayci/autengine.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "cayci/errors.hpp"

namespace cayci {

Certificate::Certificate(std::size_t vertex_count, std::vector<std::uint64_t> rows)
    : n_(vertex_count), rows_(std::move(rows)) {
  if (rows_.size() != n_) throw std::invalid_argument("Certificate: row count mismatch");
}

std::vector<Arc> Certificate::arcs() const {
  std::vector<Arc> result;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::uint64_t row = rows_[u]; row != 0; row &= row - 1) {
      result.emplace_back(u, static_cast<std::size_t>(std::countr_zero(row)));
    }
  }
  return result;
}

Digraph Certificate::ToDigraph() const { return Digraph(n_, arcs()); }

std::string Certificate::ToHex() const {
  std::string out = std::to_string(n_) + ":";
  char buf[17];
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out += '.';
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), rows_[i], 16);
    out.append(buf, ptr);
  }
  return out;
}

Certificate Certificate::FromHex(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("certificate: missing ':'");
  std::size_t n = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + colon, n);
  if (ec != std::errc() || p != text.data() + colon || n == 0 || n > kEngineLimit) {
    throw ParseError("certificate: bad vertex count");
  }
  std::vector<std::uint64_t> rows;
  std::size_t pos = colon + 1;
  while (pos <= text.size()) {
    const auto dot = text.find('.', pos);
    const std::size_t stop = dot == std::string_view::npos ? text.size() : dot;
    std::uint64_t row = 0;
    auto [q, ec2] = std::from_chars(text.data() + pos, text.data() + stop, row, 16);
    if (ec2 != std::errc() || q != text.data() + stop || stop == pos) {
      throw ParseError("certificate: bad row");
    }
    if (n < 64 && (row >> n) != 0) throw ParseError("certificate: row out of range");
    rows.push_back(row);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  if (rows.size() != n) throw ParseError("certificate: row count mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i] >> i & 1u) throw ParseError("certificate: loop");
  }
  return Certificate(n, std::move(rows));
}

std::size_t CertificateHash::operator()(const Certificate& c) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull ^ c.vertex_count();
  for (std::uint64_t row : c.rows()) {
    h ^= row;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

namespace {

std::uint64_t Mix(std::uint64_t h, std::uint64_t x) {
  h += 0x9e3779b97f4a7c15ull + x;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
  return h ^ (h >> 31);
}

// Ordered partition of positions 0..n-1. Cells are maximal runs
// [s, end[s]); end[] is meaningful only at cell starts.
struct Partition64 {
  std::vector<Point> lab;
  std::vector<Point> end;
  std::size_t cells = 1;
};

constexpr int kContinue = INT_MAX;

class Engine {
 public:
  explicit Engine(const Digraph& d) : n_(d.vertex_count()), out_(n_), in_(n_) {
    for (std::size_t v = 0; v < n_; ++v) {
      out_[v] = d.out_mask(v);
      for (std::uint64_t row = out_[v]; row != 0; row &= row - 1) {
        in_[std::countr_zero(row)] |= std::uint64_t{1} << v;
      }
    }
  }

  Canonical Run() {
    Partition64 root;
    root.lab.resize(n_);
    std::iota(root.lab.begin(), root.lab.end(), Point{0});
    root.end.assign(n_, 0);
    root.end[0] = static_cast<Point>(n_);
    trace_.push_back(Refine(root, {0}));
    Search(root, 0);

    Canonical result;
    result.certificate = Certificate(n_, best_rows_);
    result.labeling = best_lab_;
    result.generators = std::move(generators_);
    result.nodes = nodes_;
    return result;
  }

 private:
  std::uint64_t Refine(Partition64& p, std::vector<std::size_t> queue) {
    std::vector<char> queued(n_, 0);
    for (std::size_t s : queue) queued[s] = 1;
    std::uint64_t h = 0x243f6a8885a308d3ull;
    std::vector<std::pair<std::uint32_t, Point>> keyed;
    std::size_t head = 0;
    while (head < queue.size() && p.cells < n_) {
      const std::size_t w = queue[head++];
      queued[w] = 0;
      std::uint64_t w_mask = 0;
      for (std::size_t i = w; i < p.end[w]; ++i) w_mask |= std::uint64_t{1} << p.lab[i];
      h = Mix(h, w);
      for (std::size_t s = 0; s < n_;) {
        const std::size_t e = p.end[s];
        if (e - s == 1) {
          s = e;
          continue;
        }
        keyed.clear();
        bool uniform = true;
        for (std::size_t i = s; i < e; ++i) {
          const Point v = p.lab[i];
          const auto key = static_cast<std::uint32_t>(std::popcount(out_[v] & w_mask) << 8 |
                                                      std::popcount(in_[v] & w_mask));
          if (!keyed.empty() && key != keyed.front().first) uniform = false;
          keyed.emplace_back(key, v);
        }
        if (uniform) {
          s = e;
          continue;
        }
        std::sort(keyed.begin(), keyed.end());
        const bool was_queued = queued[s];
        std::size_t largest_start = s;
        std::size_t largest_size = 0;
        std::size_t frag = s;
        h = Mix(h, s);
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          p.lab[s + i] = keyed[i].second;
          const bool last = i + 1 == keyed.size() || keyed[i + 1].first != keyed[i].first;
          if (!last) continue;
          const std::size_t frag_end = s + i + 1;
          p.end[frag] = static_cast<Point>(frag_end);
          h = Mix(h, std::uint64_t{keyed[i].first} << 16 | (frag_end - frag));
          if (frag != s) ++p.cells;
          if (frag_end - frag > largest_size) {
            largest_size = frag_end - frag;
            largest_start = frag;
          }
          frag = frag_end;
        }
        for (std::size_t f = s; f < e; f = p.end[f]) {
          if (was_queued ? f != s : f != largest_start) {
            if (!queued[f]) {
              queued[f] = 1;
              queue.push_back(f);
            }
          }
        }
        s = e;
      }
    }
    return Mix(h, p.cells);
  }

  std::vector<std::uint64_t> LeafRows(const Partition64& p) const {
    std::vector<Point> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[p.lab[i]] = static_cast<Point>(i);
    std::vector<std::uint64_t> rows(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::uint64_t row = out_[p.lab[i]]; row != 0; row &= row - 1) {
        rows[i] |= std::uint64_t{1} << pos[std::countr_zero(row)];
      }
    }
    return rows;
  }

  // Sign of (current trace prefix) versus `other`, where the current node is
  // at `depth`. Zero when the prefix agrees and `other` is longer.
  int ComparePrefix(std::size_t depth, const std::vector<std::uint64_t>& other) const {
    const std::size_t len = std::min(depth + 1, other.size());
    for (std::size_t i = 0; i < len; ++i) {
      if (trace_[i] != other[i]) return trace_[i] < other[i] ? -1 : 1;
    }
    return other.size() > depth + 1 ? 0 : 1;
  }

  static int CommonPrefix(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::size_t c = 0;
    while (c < a.size() && c < b.size() && a[c] == b[c]) ++c;
    return static_cast<int>(c);
  }

  void Record(const std::vector<Point>& from, const std::vector<Point>& to) {
    std::vector<Point> images(n_);
    for (std::size_t i = 0; i < n_; ++i) images[from[i]] = to[i];
    Perm g = Perm::FromImagesUnchecked(std::move(images));
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }

  int Leaf(const Partition64& p, std::size_t depth) {
    std::vector<std::uint64_t> rows = LeafRows(p);
    if (first_lab_.empty()) {
      first_trace_.assign(trace_.begin(), trace_.begin() + depth + 1);
      first_lab_ = best_lab_ = p.lab;
      first_rows_ = best_rows_ = std::move(rows);
      first_seq_ = best_seq_ = seq_;
      best_trace_ = first_trace_;
      return kContinue;
    }
    const std::vector<std::uint64_t> trace(trace_.begin(), trace_.begin() + depth + 1);
    if (trace == first_trace_ && rows == first_rows_) {
      Record(first_lab_, p.lab);
      return CommonPrefix(seq_, first_seq_);
    }
    int cmp = trace < best_trace_ ? -1 : trace > best_trace_ ? 1 : 0;
    if (cmp == 0) cmp = rows < best_rows_ ? -1 : rows > best_rows_ ? 1 : 0;
    if (cmp == 0) {
      Record(best_lab_, p.lab);
      return CommonPrefix(seq_, best_seq_);
    }
    if (cmp > 0) {
      best_trace_ = trace;
      best_lab_ = p.lab;
      best_rows_ = std::move(rows);
      best_seq_ = seq_;
    }
    return kContinue;
  }

  std::size_t Find(std::vector<Point>& parent, std::size_t x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  std::vector<Point> PrefixOrbits() const {
    std::vector<Point> parent(n_);
    std::iota(parent.begin(), parent.end(), Point{0});
    for (const Perm& g : generators_) {
      bool fixes = true;
      for (Point v : seq_) {
        if (g[v] != v) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (std::size_t v = 0; v < n_; ++v) {
        const std::size_t a = Find(parent, v);
        const std::size_t b = Find(parent, g[v]);
        if (a != b) parent[std::max(a, b)] = static_cast<Point>(std::min(a, b));
      }
    }
    return parent;
  }

  int Search(const Partition64& p, std::size_t depth) {
    ++nodes_;
    if (p.cells == n_) return Leaf(p, depth);
    if (!first_lab_.empty() && ComparePrefix(depth, first_trace_) != 0 &&
        ComparePrefix(depth, best_trace_) < 0) {
      return kContinue;
    }
    // First smallest non-singleton cell.
    std::size_t target = n_;
    std::size_t target_size = n_ + 1;
    for (std::size_t s = 0; s < n_; s = p.end[s]) {
      const std::size_t size = p.end[s] - s;
      if (size > 1 && size < target_size) {
        target = s;
        target_size = size;
      }
    }
    std::vector<Point> children(p.lab.begin() + target, p.lab.begin() + p.end[target]);
    std::sort(children.begin(), children.end());
    std::vector<Point> explored;
    for (Point w : children) {
      if (!explored.empty() && !generators_.empty()) {
        std::vector<Point> parent = PrefixOrbits();
        const std::size_t root = Find(parent, w);
        bool equivalent = false;
        for (Point x : explored) {
          if (Find(parent, x) == root) {
            equivalent = true;
            break;
          }
        }
        if (equivalent) continue;
      }
      Partition64 child = p;
      const auto it = std::find(child.lab.begin() + target, child.lab.begin() + p.end[target], w);
      std::iter_swap(child.lab.begin() + target, it);
      child.end[target] = static_cast<Point>(target + 1);
      child.end[target + 1] = p.end[target];
      ++child.cells;
      trace_.resize(depth + 1);
      trace_.push_back(Refine(child, {target}));
      seq_.push_back(w);
      const int r = Search(child, depth + 1);
      seq_.pop_back();
      explored.push_back(w);
      if (r < static_cast<int>(depth)) return r;
    }
    return kContinue;
  }

  std::size_t n_;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;

  std::vector<std::uint64_t> trace_;
  std::vector<Point> seq_;

  std::vector<std::uint64_t> first_trace_, best_trace_;
  std::vector<Point> first_lab_, best_lab_;
  std::vector<Point> first_seq_, best_seq_;
  std::vector<std::uint64_t> first_rows_, best_rows_;

  std::vector<Perm> generators_;
  std::uint64_t nodes_ = 0;
};

void CheckSize(const Digraph& d) {
  if (d.vertex_count() > kEngineLimit) {
    throw BudgetExceeded("digraph has " + std::to_string(d.vertex_count()) +
                         " vertices; the automorphism engine accepts at most " +
                         std::to_string(kEngineLimit));
  }
}

}  // namespace

Canonical Canonicalize(const Digraph& d) {
  CheckSize(d);
  return Engine(d).Run();
}

PermGroup AutomorphismGroup(const Digraph& d) {
  Canonical c = Canonicalize(d);
  return PermGroup(d.vertex_count(), std::move(c.generators));
}

Certificate CanonicalForm(const Digraph& d) { return Canonicalize(d).certificate; }

std::optional<Perm> Isomorphism(const Digraph& d1, const Digraph& d2) {
  if (d1.vertex_count() != d2.vertex_count()) return std::nullopt;
  const Canonical c1 = Canonicalize(d1);
  const Canonical c2 = Canonicalize(d2);
  if (c1.certificate != c2.certificate) return std::nullopt;
  std::vector<Point> images(d1.vertex_count());
  for (std::size_t i = 0; i < images.size(); ++i) images[c1.labeling[i]] = c2.labeling[i];
  return Perm(std::move(images));
}

}  // namespace cayci
