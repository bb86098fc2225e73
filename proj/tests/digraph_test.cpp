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

#include <random>

#include "cayci/autengine.hpp"
#include "cayci/digraph.hpp"
#include "cayci/errors.hpp"
#include "cayci/group.hpp"
#include "cayci/harness.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace cayci {
namespace {

bool Isomorphic(const Digraph& x, const Digraph& y) { return CanonicalForm(x) == CanonicalForm(y); }

TEST(DigraphTest, ArcsAndValidation) {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(2, 1);
  d.add_arc(0, 1);
  EXPECT_EQ(d.arc_count(), 2u);
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {2, 1}}));
  EXPECT_TRUE(d.has_arc(2, 1));
  EXPECT_FALSE(d.has_arc(1, 2));
  EXPECT_EQ(d.out_mask(0), 0b10u);
  EXPECT_THROW(d.add_arc(1, 1), std::invalid_argument);
  EXPECT_THROW(d.add_arc(0, 3), std::out_of_range);
  Digraph big(130);
  big.add_arc(129, 0);
  big.add_arc(64, 128);
  EXPECT_TRUE(big.has_arc(129, 0));
  EXPECT_TRUE(big.has_arc(64, 128));
  EXPECT_EQ(big.arc_count(), 2u);
}

TEST(CayleyTest, Examples) {
  const GroupSpec d6 = GroupSpec::Dihedral(3);
  const Digraph k33 = Cayley(d6, ParseConnectionSet(d6, "b,a*b,a^2*b"));
  EXPECT_EQ(k33.arc_count(), 18u);
  EXPECT_TRUE(IsGraph(k33));
  for (std::size_t u = 0; u < 3; ++u) {
    for (std::size_t v = 0; v < 6; ++v) EXPECT_EQ(k33.has_arc(u, v), v >= 3);
  }
  const GroupSpec z5 = GroupSpec::Cyclic(5);
  const Digraph c5 = Cayley(z5, ParseConnectionSet(z5, "a"));
  EXPECT_EQ(c5, DirectedCycle(5));
  EXPECT_FALSE(IsGraph(c5));
  EXPECT_TRUE(StronglyConnected(c5));
  EXPECT_TRUE(StronglyConnected(Digraph(1)));
  const GroupSpec d18 = GroupSpec::Dihedral(9);
  EXPECT_FALSE(StronglyConnected(Cayley(d18, ParseConnectionSet(d18, "a^3,b"))));
  EXPECT_TRUE(StronglyConnected(Cayley(d18, ParseConnectionSet(d18, "a,b"))));
  const GroupSpec z9 = GroupSpec::Cyclic(9);
  EXPECT_FALSE(IsGraph(Cayley(z9, ParseConnectionSet(z9, "a,a^2"))));
  EXPECT_EQ(Cayley(z5, ParseConnectionSet(z5, "a,a^4")), CycleGraph(5));
  // x -> s x: from b the arc labelled a lands on a*b.
  const Digraph d = Cayley(d6, ParseConnectionSet(d6, "a"));
  EXPECT_TRUE(d.has_arc(3, 4));
  EXPECT_TRUE(d.has_arc(0, 1));
}

TEST(CayleyTest, GraphIffSymmetric) {
  for (const GroupSpec& spec : {GroupSpec::Dihedral(3), GroupSpec::Dihedral(4), GroupSpec::Cyclic(7)}) {
    for (const ConnectionSet& s : oracle::AllSets(spec, 4)) {
      EXPECT_EQ(IsGraph(Cayley(spec, s)), IsSymmetric(spec, s)) << FormatSet(spec, s);
    }
  }
}

TEST(CayleyTest, ConnectedIffGenerating) {
  for (int n = 3; n <= 7; ++n) {
    const GroupSpec spec = GroupSpec::Dihedral(n);
    for (const ConnectionSet& s : oracle::AllSets(spec, 4)) {
      EXPECT_EQ(StronglyConnected(Cayley(spec, s)), GeneratedSubgroup(spec, s).size() == spec.order())
          << FormatSet(spec, s);
    }
  }
}

TEST(CayleyTest, RightTranslationsAreAutomorphisms) {
  std::mt19937_64 rng(3);
  for (int n = 3; n <= 15; ++n) {
    const GroupSpec spec = GroupSpec::Dihedral(n);
    for (int trial = 0; trial < 5; ++trial) {
      const std::uint64_t mask = (rng() & ((std::uint64_t{1} << spec.order()) - 1)) | 2;
      const ConnectionSet s = ConnectionSet::FromMask(spec, mask & ~std::uint64_t{1});
      const Digraph d = Cayley(spec, s);
      for (std::size_t i = 0; i < spec.order(); ++i) {
        EXPECT_TRUE(IsAutomorphism(d, RightMultiplication(spec, ElementAt(spec, i))));
      }
      for (GroupAut f : SetStabilizerAuts(spec, s)) EXPECT_TRUE(IsAutomorphism(d, AutPermutation(spec, f)));
    }
  }
}

TEST(CayleyTest, RegularValency) {
  const GroupSpec d10 = GroupSpec::Dihedral(5);
  for (const ConnectionSet& s : oracle::SetsOfSize(d10, 3)) {
    const Digraph d = Cayley(d10, s);
    for (std::size_t v = 0; v < d10.order(); ++v) {
      EXPECT_EQ(Neighbors(d, v, Direction::kOut).size(), 3u);
      EXPECT_EQ(Neighbors(d, v, Direction::kIn).size(), 3u);
    }
  }
}

TEST(NeighborsTest, Directions) {
  const Digraph c = DirectedCycle(4);
  EXPECT_EQ(Neighbors(c, 0, Direction::kOut), std::vector<std::size_t>{1});
  EXPECT_EQ(Neighbors(c, 0, Direction::kIn), std::vector<std::size_t>{3});
  EXPECT_TRUE(Neighbors(EmptyGraph(3), 1, Direction::kOut).empty());
  EXPECT_THROW(Neighbors(c, 4, Direction::kIn), std::out_of_range);
  const GroupSpec d12 = GroupSpec::Dihedral(6);
  const ConnectionSet s = ParseConnectionSet(d12, "a,a^5,a*b,a^4*b");
  EXPECT_EQ(Neighbors(Cayley(d12, s), 0, Direction::kOut), s.Indices(d12));
}

TEST(NeighborsTest, BlownUpCycleNeighbourhoods) {
  // Each vertex of block i is joined to both blocks i - 1 and i + 1.
  for (int n : {3, 5, 7, 9}) {
    const GroupSpec spec = GroupSpec::Dihedral(n);
    const std::string set = "a,a^" + std::to_string(n - 1) + ",a^2*b,b";
    const Digraph d = Cayley(spec, ParseConnectionSet(spec, set));
    const Partition blocks = AbCosetPartition(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::size_t> expected;
      for (int j : {(i + n - 1) % n, (i + 1) % n}) {
        for (Point x : blocks.blocks()[j]) expected.push_back(x);
      }
      std::sort(expected.begin(), expected.end());
      for (Point v : blocks.blocks()[i]) EXPECT_EQ(Neighbors(d, v, Direction::kOut), expected);
    }
  }
}

TEST(DistanceSetTest, EvenWitnessSecondNeighbourhood) {
  for (int n : {6, 8, 10, 12}) {
    const GroupSpec spec = GroupSpec::Dihedral(n);
    const std::string set =
        "a,a^" + std::to_string(n - 1) + ",a*b,a^" + std::to_string(n / 2 + 1) + "*b";
    const Digraph d = Cayley(spec, ParseConnectionSet(spec, set));
    EXPECT_EQ(DistanceSet(d, 0, 0), std::vector<std::size_t>{0});
    EXPECT_EQ(DistanceSet(d, 0, 1).size(), 4u);
    EXPECT_EQ(DistanceSet(d, 0, 2).size(), 7u) << n;
  }
}

TEST(DistanceSetTest, EvenWitnessSecondNeighbourhoodMembers) {
  for (int m : {3, 4, 5, 6}) {
    const int n = 2 * m;
    const GroupSpec spec = GroupSpec::Dihedral(n);
    const std::string set = "a,a^" + std::to_string(n - 1) + ",a*b,a^" + std::to_string(m + 1) + "*b";
    const Digraph d = Cayley(spec, ParseConnectionSet(spec, set));
    std::vector<std::size_t> expected;
    for (Element g : {Element{2, 0}, Element{0, 1}, Element{m, 1}, Element{m, 0}, Element{2, 1},
                      Element{(m + 2) % n, 1}, Element{n - 2, 0}}) {
      expected.push_back(IndexOf(spec, g));
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(DistanceSet(d, 0, 2), expected) << n;
  }
}

TEST(DistanceSetTest, RequiresUndirected) {
  EXPECT_THROW(DistanceSet(DirectedCycle(5), 0, 1), std::invalid_argument);
  EXPECT_TRUE(DistanceSet(CycleGraph(6), 0, 4).empty());
  EXPECT_EQ(DistanceSet(CycleGraph(6), 0, 3), std::vector<std::size_t>{3});
  EXPECT_TRUE(DistanceSet(CompleteGraph(5), 2, 2).empty());
}

TEST(QuotientTest, BlownUpCycleQuotient) {
  for (int n = 3; n <= 11; n += 2) {
    const GroupSpec spec = GroupSpec::Dihedral(n);
    const std::string set = "a,a^" + std::to_string(n - 1) + ",a^2*b,b";
    const Digraph d = Cayley(spec, ParseConnectionSet(spec, set));
    const Digraph q = Quotient(d, AbCosetPartition(n));
    EXPECT_EQ(q.vertex_count(), static_cast<std::size_t>(n));
    EXPECT_TRUE(Isomorphic(q, CycleGraph(n)));
    EXPECT_TRUE(Isomorphic(LexProduct(CycleGraph(n), EmptyGraph(2)), d));
  }
}

TEST(QuotientTest, SingletonsAreIdentity) {
  const GroupSpec d10 = GroupSpec::Dihedral(5);
  const Digraph d = Cayley(d10, ParseConnectionSet(d10, "a,a^2*b"));
  EXPECT_EQ(Quotient(d, Partition::Singletons(10)), d);
  EXPECT_THROW(Quotient(d, Partition::Singletons(9)), std::invalid_argument);
}

TEST(LexProductTest, Basics) {
  EXPECT_EQ(LexProduct(HeawoodGraph(), EmptyGraph(1)), HeawoodGraph());
  const Digraph k2 = CompleteGraph(2);
  EXPECT_EQ(LexProduct(k2, EmptyGraph(3)), CompleteBipartite(3, 3));
  EXPECT_EQ(LexProduct(k2, k2), CompleteGraph(4));
  const Digraph p = LexProduct(DirectedCycle(3), EmptyGraph(2));
  EXPECT_EQ(p.arc_count(), 12u);
  EXPECT_TRUE(p.has_arc(0 * 2 + 1, 1 * 2 + 0));
}

TEST(RelabelTest, PreservesIsomorphismClass) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Digraph d = oracle::RandomDigraph(7, 0.4, rng);
    const Perm p = oracle::RandomPerm(7, rng);
    const Digraph e = Relabel(d, p);
    EXPECT_EQ(e.arc_count(), d.arc_count());
    for (const auto& [u, v] : d.arcs()) EXPECT_TRUE(e.has_arc(p[u], p[v]));
    EXPECT_EQ(Relabel(e, p.inverse()), d);
  }
}

TEST(NamedTest, Families) {
  EXPECT_EQ(CompleteGraph(5).arc_count(), 20u);
  EXPECT_EQ(CompleteBipartite(3, 4).arc_count(), 24u);
  EXPECT_EQ(OrientedCompleteBipartite(3, 4).arc_count(), 12u);
  EXPECT_EQ(EmptyGraph(4).arc_count(), 0u);
  EXPECT_EQ(OrientedCompleteBipartite(1, 1), Digraph(2, {{0, 1}}));
  EXPECT_TRUE(IsGraph(CompleteBipartite(3, 3)));
  EXPECT_EQ(CycleGraph(5).arc_count(), 10u);
  const Digraph h = HeawoodGraph();
  EXPECT_EQ(h.vertex_count(), 14u);
  EXPECT_EQ(h.arc_count(), 42u);
  EXPECT_TRUE(IsGraph(h));
  // Distance profile 1, 3, 6, 4 of the incidence graph of the Fano plane.
  for (std::size_t v = 0; v < 14; ++v) {
    EXPECT_EQ(DistanceSet(h, v, 1).size(), 3u);
    EXPECT_EQ(DistanceSet(h, v, 2).size(), 6u);
    EXPECT_EQ(DistanceSet(h, v, 3).size(), 4u);
  }
  EXPECT_EQ(NamedDigraph("heawood"), h);
  EXPECT_EQ(NamedDigraph("cycle:5"), CycleGraph(5));
  EXPECT_EQ(NamedDigraph("complete_bipartite:3,3"), CompleteBipartite(3, 3));
  EXPECT_THROW(NamedDigraph("petersen:2"), ParseError);
}

TEST(TextTest, RoundTrip) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const Digraph d = oracle::RandomDigraph(1 + trial, 0.3, rng);
    EXPECT_EQ(ReadText(WriteText(d)), d);
  }
  EXPECT_EQ(ReadText("# comment\n3\n0 1\n\n1 2 # tail\n"), Digraph(3, {{0, 1}, {1, 2}}));
  for (const char* bad : {"", "x", "3\n0", "3\n0 5", "3\n1 1", "3\n0 1 2"}) {
    EXPECT_THROW(ReadText(bad), ParseError) << bad;
  }
}

}  // namespace
}  // namespace cayci
