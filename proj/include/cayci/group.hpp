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

#ifndef CAYCI_GROUP_HPP_
#define CAYCI_GROUP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayci/perm.hpp"

namespace cayci {

enum class GroupKind { kDihedral, kCyclic };

// The dihedral group <a, b | a^n = b^2 = 1, abab = 1> of order 2n (n >= 3),
// or the cyclic group <a | a^n = 1> of order n (n >= 1).
//
// Dihedral groups with n = 2 are rejected: Aut(D_4) is Sym(3), which the
// sigma_{r,s} description used throughout this library does not cover.
class GroupSpec {
 public:
  static GroupSpec Dihedral(int n);
  static GroupSpec Cyclic(int n);

  // "dihedral:4", "cyclic:9".
  static GroupSpec Parse(std::string_view text);

  GroupKind kind() const { return kind_; }
  bool dihedral() const { return kind_ == GroupKind::kDihedral; }
  int n() const { return n_; }
  std::size_t order() const { return dihedral() ? 2 * static_cast<std::size_t>(n_) : n_; }
  std::string ToString() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec(GroupKind kind, int n) : kind_(kind), n_(n) {}
  GroupKind kind_;
  int n_;
};

// a^rotation * b^reflection. Cyclic elements always have reflection == 0.
struct Element {
  int rotation = 0;
  int reflection = 0;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// Canonical vertex order: a^0, ..., a^{n-1}, then b, ab, ..., a^{n-1}b.
std::size_t IndexOf(const GroupSpec& spec, Element g);
Element ElementAt(const GroupSpec& spec, std::size_t index);

// Throws std::invalid_argument when g is not a normalized element of spec.
void ValidateElement(const GroupSpec& spec, Element g);

Element Multiply(const GroupSpec& spec, Element g, Element h);
Element Inverse(const GroupSpec& spec, Element g);
std::uint64_t ElementOrder(const GroupSpec& spec, Element g);

// sigma_{r,s}: a^i -> a^{ri}, a^j b -> a^{rj+s} b, gcd(r, n) = 1. For cyclic
// groups s is always 0.
struct GroupAut {
  int r = 1;
  int s = 0;
  friend auto operator<=>(const GroupAut&, const GroupAut&) = default;
};

// All automorphisms, r ascending over units mod n, then s ascending.
// n * phi(n) of them for dihedral groups, phi(n) for cyclic groups.
std::vector<GroupAut> Automorphisms(const GroupSpec& spec);

Element ApplyAut(const GroupSpec& spec, GroupAut aut, Element g);

// The automorphism "apply first, then second" in (r, s) coordinates.
GroupAut ComposeAuts(const GroupSpec& spec, GroupAut first, GroupAut second);
GroupAut InverseAut(const GroupSpec& spec, GroupAut aut);

// Least w >= 1 with r^w = 1 and s(r^{w-1} + ... + r + 1) = 0 (mod n).
std::uint64_t AutOrder(const GroupSpec& spec, GroupAut aut);

// Vertex permutations on the canonical order.
Perm AutPermutation(const GroupSpec& spec, GroupAut aut);
Perm RightMultiplication(const GroupSpec& spec, Element g);  // x -> x g

// A nonempty set of non-identity elements, kept sorted by canonical index.
class ConnectionSet {
 public:
  // Deduplicates; throws std::invalid_argument on the identity, an invalid
  // element, or an empty set.
  ConnectionSet(const GroupSpec& spec, std::vector<Element> elements);

  // Bit i set <=> ElementAt(spec, i) is a member. Requires |G| <= 64.
  static ConnectionSet FromMask(const GroupSpec& spec, std::uint64_t mask);

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const GroupSpec& spec, Element g) const;
  std::uint64_t Mask(const GroupSpec& spec) const;
  std::vector<std::size_t> Indices(const GroupSpec& spec) const;

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

 private:
  std::vector<Element> elements_;
};

ConnectionSet ApplyAut(const GroupSpec& spec, GroupAut aut, const ConnectionSet& set);
bool IsSymmetric(const GroupSpec& spec, const ConnectionSet& set);

// First automorphism (in Automorphisms() order) carrying s onto t.
std::optional<GroupAut> SetsEquivalent(const GroupSpec& spec, const ConnectionSet& s,
                                       const ConnectionSet& t);

// <S> as a sorted element list.
std::vector<Element> GeneratedSubgroup(const GroupSpec& spec, const ConnectionSet& set);

// Aut(G, S) = {sigma : S^sigma = S}.
std::vector<GroupAut> SetStabilizerAuts(const GroupSpec& spec, const ConnectionSet& set);

// Element syntax: a product of factors joined by '*', each factor one of
// "a", "a^k" (k may be negative), "b", "1" or "e". Exponents are reduced
// mod n and whitespace is ignored. "b" is rejected for cyclic groups.
Element ParseElement(const GroupSpec& spec, std::string_view text);
// Comma-separated elements.
ConnectionSet ParseConnectionSet(const GroupSpec& spec, std::string_view text);

std::string FormatElement(const GroupSpec& spec, Element g);
std::string FormatSet(const GroupSpec& spec, const ConnectionSet& set);

}  // namespace cayci

#endif  // CAYCI_GROUP_HPP_
