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

#include "cayci/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cayci/errors.hpp"

namespace cayci {
namespace {

int Mod(long long x, int n) {
  const long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

GroupSpec GroupSpec::Dihedral(int n) {
  if (n < 3) throw std::invalid_argument("dihedral groups require n >= 3");
  return GroupSpec(GroupKind::kDihedral, n);
}

GroupSpec GroupSpec::Cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic groups require n >= 1");
  return GroupSpec(GroupKind::kCyclic, n);
}

GroupSpec GroupSpec::Parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("group must look like dihedral:N or cyclic:N, got '" + std::string(text) + "'");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view digits = text.substr(colon + 1);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("bad group order in '" + std::string(text) + "'");
  }
  try {
    if (kind == "dihedral" || kind == "D") return Dihedral(n);
    if (kind == "cyclic" || kind == "Z") return Cyclic(n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown group kind '" + std::string(kind) + "'");
}

std::string GroupSpec::ToString() const {
  return (dihedral() ? "dihedral:" : "cyclic:") + std::to_string(n_);
}

std::size_t IndexOf(const GroupSpec& spec, Element g) {
  return static_cast<std::size_t>(g.reflection) * spec.n() + g.rotation;
}

Element ElementAt(const GroupSpec& spec, std::size_t index) {
  const auto n = static_cast<std::size_t>(spec.n());
  return Element{static_cast<int>(index % n), static_cast<int>(index / n)};
}

void ValidateElement(const GroupSpec& spec, Element g) {
  if (g.rotation < 0 || g.rotation >= spec.n() || g.reflection < 0 || g.reflection > 1 ||
      (!spec.dihedral() && g.reflection != 0)) {
    throw std::invalid_argument("element does not belong to " + spec.ToString());
  }
}

Element Multiply(const GroupSpec& spec, Element g, Element h) {
  // b a^j = a^{-j} b
  const long long j = g.reflection ? -static_cast<long long>(h.rotation) : h.rotation;
  return Element{Mod(g.rotation + j, spec.n()), g.reflection ^ h.reflection};
}

Element Inverse(const GroupSpec& spec, Element g) {
  if (g.reflection) return g;
  return Element{Mod(-static_cast<long long>(g.rotation), spec.n()), 0};
}

std::uint64_t ElementOrder(const GroupSpec& spec, Element g) {
  if (g.reflection) return 2;
  const int n = spec.n();
  return static_cast<std::uint64_t>(n / std::gcd(g.rotation, n));
}

std::vector<GroupAut> Automorphisms(const GroupSpec& spec) {
  const int n = spec.n();
  std::vector<GroupAut> result;
  for (int r = 0; r < n; ++r) {
    if (std::gcd(r, n) != 1) continue;
    if (spec.dihedral()) {
      for (int s = 0; s < n; ++s) result.push_back({r, s});
    } else {
      result.push_back({r, 0});
    }
  }
  return result;
}

Element ApplyAut(const GroupSpec& spec, GroupAut aut, Element g) {
  const long long image = static_cast<long long>(aut.r) * g.rotation + (g.reflection ? aut.s : 0);
  return Element{Mod(image, spec.n()), g.reflection};
}

GroupAut ComposeAuts(const GroupSpec& spec, GroupAut first, GroupAut second) {
  // a -> a^{r1} -> a^{r1 r2};  b -> a^{s1} b -> a^{r2 s1 + s2} b
  const int n = spec.n();
  return GroupAut{Mod(static_cast<long long>(first.r) * second.r, n),
                  Mod(static_cast<long long>(second.r) * first.s + second.s, n)};
}

GroupAut InverseAut(const GroupSpec& spec, GroupAut aut) {
  const int n = spec.n();
  int r_inv = 0;
  for (int x = 0; x < n; ++x) {
    if (Mod(static_cast<long long>(aut.r) * x, n) == Mod(1, n)) {
      r_inv = x;
      break;
    }
  }
  // sigma_{r,s}^-1 sends b to a^{-r^-1 s} b.
  return GroupAut{r_inv, Mod(-static_cast<long long>(r_inv) * aut.s, n)};
}

std::uint64_t AutOrder(const GroupSpec& spec, GroupAut aut) {
  const long long n = spec.n();
  long long r_power = Mod(aut.r, spec.n());  // r^w
  long long geometric = 1 % n;               // 1 + r + ... + r^{w-1}
  for (std::uint64_t w = 1;; ++w) {
    const bool r_ok = r_power == 1 % n;
    const bool s_ok = !spec.dihedral() || (static_cast<long long>(aut.s) * geometric) % n == 0;
    if (r_ok && s_ok) return w;
    geometric = (geometric + r_power) % n;
    r_power = (r_power * aut.r) % n;
  }
}

Perm AutPermutation(const GroupSpec& spec, GroupAut aut) {
  std::vector<Point> images(spec.order());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = static_cast<Point>(IndexOf(spec, ApplyAut(spec, aut, ElementAt(spec, i))));
  }
  return Perm(std::move(images));
}

Perm RightMultiplication(const GroupSpec& spec, Element g) {
  std::vector<Point> images(spec.order());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = static_cast<Point>(IndexOf(spec, Multiply(spec, ElementAt(spec, i), g)));
  }
  return Perm(std::move(images));
}

// ---------------------------------------------------------------------------
// ConnectionSet

ConnectionSet::ConnectionSet(const GroupSpec& spec, std::vector<Element> elements) {
  for (Element g : elements) {
    ValidateElement(spec, g);
    if (g == Element{}) throw std::invalid_argument("connection set contains the identity");
  }
  std::sort(elements.begin(), elements.end(), [&](Element x, Element y) {
    return IndexOf(spec, x) < IndexOf(spec, y);
  });
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw std::invalid_argument("connection set is empty");
  elements_ = std::move(elements);
}

ConnectionSet ConnectionSet::FromMask(const GroupSpec& spec, std::uint64_t mask) {
  if (spec.order() > 64) throw std::invalid_argument("FromMask: group order exceeds 64");
  std::vector<Element> elements;
  for (std::size_t i = 0; i < spec.order(); ++i) {
    if (mask >> i & 1u) elements.push_back(ElementAt(spec, i));
  }
  return ConnectionSet(spec, std::move(elements));
}

bool ConnectionSet::contains(const GroupSpec& spec, Element g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g, [&](Element x, Element y) {
    return IndexOf(spec, x) < IndexOf(spec, y);
  });
}

std::uint64_t ConnectionSet::Mask(const GroupSpec& spec) const {
  if (spec.order() > 64) throw std::invalid_argument("Mask: group order exceeds 64");
  std::uint64_t mask = 0;
  for (Element g : elements_) mask |= std::uint64_t{1} << IndexOf(spec, g);
  return mask;
}

std::vector<std::size_t> ConnectionSet::Indices(const GroupSpec& spec) const {
  std::vector<std::size_t> result;
  for (Element g : elements_) result.push_back(IndexOf(spec, g));
  return result;
}

ConnectionSet ApplyAut(const GroupSpec& spec, GroupAut aut, const ConnectionSet& set) {
  std::vector<Element> image;
  for (Element g : set.elements()) image.push_back(ApplyAut(spec, aut, g));
  return ConnectionSet(spec, std::move(image));
}

bool IsSymmetric(const GroupSpec& spec, const ConnectionSet& set) {
  return std::all_of(set.elements().begin(), set.elements().end(),
                     [&](Element g) { return set.contains(spec, Inverse(spec, g)); });
}

std::optional<GroupAut> SetsEquivalent(const GroupSpec& spec, const ConnectionSet& s,
                                       const ConnectionSet& t) {
  if (s.size() != t.size()) return std::nullopt;
  for (GroupAut aut : Automorphisms(spec)) {
    if (ApplyAut(spec, aut, s) == t) return aut;
  }
  return std::nullopt;
}

std::vector<Element> GeneratedSubgroup(const GroupSpec& spec, const ConnectionSet& set) {
  std::vector<bool> seen(spec.order(), false);
  std::vector<Element> members{Element{}};
  seen[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : set.elements()) {
      const Element next = Multiply(spec, members[i], s);
      const std::size_t idx = IndexOf(spec, next);
      if (!seen[idx]) {
        seen[idx] = true;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end(), [&](Element x, Element y) {
    return IndexOf(spec, x) < IndexOf(spec, y);
  });
  return members;
}

std::vector<GroupAut> SetStabilizerAuts(const GroupSpec& spec, const ConnectionSet& set) {
  std::vector<GroupAut> result;
  for (GroupAut aut : Automorphisms(spec)) {
    if (ApplyAut(spec, aut, set) == set) result.push_back(aut);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Text syntax

Element ParseElement(const GroupSpec& spec, std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw ParseError("empty element");
  Element result{};
  std::size_t pos = 0;
  while (true) {
    const std::size_t star = compact.find('*', pos);
    const std::string factor =
        compact.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    Element f{};
    if (factor == "1" || factor == "e") {
      // identity
    } else if (factor == "b") {
      if (!spec.dihedral()) throw ParseError("'b' is not an element of " + spec.ToString());
      f = Element{0, 1};
    } else if (factor == "a") {
      f = Element{Mod(1, spec.n()), 0};
    } else if (factor.size() > 2 && factor[0] == 'a' && factor[1] == '^') {
      long long k = 0;
      const char* first = factor.data() + 2;
      const char* last = factor.data() + factor.size();
      const auto [ptr, ec] = std::from_chars(first, last, k);
      if (ec != std::errc() || ptr != last) throw ParseError("bad exponent in '" + factor + "'");
      f = Element{Mod(k, spec.n()), 0};
    } else {
      throw ParseError("cannot parse factor '" + factor + "' in '" + std::string(text) + "'");
    }
    result = Multiply(spec, result, f);
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return result;
}

ConnectionSet ParseConnectionSet(const GroupSpec& spec, std::string_view text) {
  std::vector<Element> elements;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    elements.push_back(ParseElement(spec, item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  try {
    return ConnectionSet(spec, std::move(elements));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string FormatElement(const GroupSpec&, Element g) {
  std::string out;
  if (g.rotation == 1) {
    out = "a";
  } else if (g.rotation > 1) {
    out = "a^" + std::to_string(g.rotation);
  }
  if (g.reflection) out += out.empty() ? "b" : "*b";
  return out.empty() ? "1" : out;
}

std::string FormatSet(const GroupSpec& spec, const ConnectionSet& set) {
  std::string out;
  for (Element g : set.elements()) {
    if (!out.empty()) out += ',';
    out += FormatElement(spec, g);
  }
  return out;
}

}  // namespace cayci
