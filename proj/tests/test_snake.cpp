#include "qsnake/errors.hpp"
#include "qsnake/kronecker.hpp"
#include "qsnake/lattice.hpp"
#include "qsnake/snake.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <set>

using namespace qsnake;

namespace {

std::vector<int> face_weights(const SnakeGraph& g) {
  std::vector<int> w;
  for (const auto& t : g.tiles()) w.push_back(t.face_weight);
  return w;
}

TileSet all_tiles(const SnakeGraph& g) { return g.num_tiles() == 64 ? ~TileSet{0} : (TileSet{1} << g.num_tiles()) - 1; }

}  // namespace

TEST(Snake, StraightCountsAreFibonacci) {
  std::uint64_t a = 1, b = 2;  // F_2, F_3
  for (int k = 1; k <= 25; ++k) {
    const auto g = build_straight(k);
    EXPECT_EQ(count_matchings(g), b) << k;
    if (k <= 14) {
      EXPECT_EQ(enumerate_matchings(g).size(), b) << k;
    }
    const auto c = a + b;
    a = b;
    b = c;
  }
  EXPECT_EQ(count_matchings(SnakeGraph::single_edge()), 1u);
}

TEST(Snake, KroneckerBuilders) {
  EXPECT_EQ(face_weights(build_kronecker_G(0)), std::vector<int>{1});
  EXPECT_EQ(face_weights(build_kronecker_G(1)), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(face_weights(build_kronecker_G(3)), (std::vector<int>{1, 2, 1, 2, 1, 2, 1}));
  const auto& conv = resolved_h_convention();
  EXPECT_EQ(build_kronecker_H(0, conv).num_tiles(), 0);
  EXPECT_EQ(enumerate_matchings(build_kronecker_H(0, conv)).size(), 1u);
  EXPECT_EQ(build_kronecker_H(1, conv).num_tiles(), 2);
  EXPECT_EQ(build_kronecker_H(3, conv).num_tiles(), 6);
  EXPECT_TRUE(build_kronecker_G(4).is_straight());
}

TEST(Snake, MatchingCounts) {
  EXPECT_EQ(enumerate_matchings(build_kronecker_G(1)).size(), 5u);
  EXPECT_EQ(enumerate_matchings(build_kronecker_H(1, resolved_h_convention())).size(), 3u);
  EXPECT_EQ(enumerate_matchings(build_demo_snake()).size(), 11u);
  EXPECT_EQ(count_matchings(build_demo_snake()), 11u);
  EXPECT_EQ(face_weights(build_demo_snake()), (std::vector<int>{3, 1, 2, 3, 1}));
}

TEST(Snake, EnumeratedMatchingsArePerfectAndDistinct) {
  for (const auto& g : {build_kronecker_G(3), build_demo_snake(), build_straight(7)}) {
    const auto ms = enumerate_matchings(g);
    std::set<std::vector<int>> seen;
    for (const auto& m : ms) {
      EXPECT_TRUE(is_perfect_matching(g, m.edges));
      EXPECT_TRUE(seen.insert(edge_list(m.edges)).second);
    }
    EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end(),
                               [](const Matching& x, const Matching& y) { return edge_list(x.edges) < edge_list(y.edges); }));
  }
}

TEST(Snake, ExtremalTwists) {
  for (const auto& g : {build_kronecker_G(1), build_kronecker_G(4), build_demo_snake()}) {
    EXPECT_EQ(twist_set(g, minimal_matching(g)), TileSet{0});
    EXPECT_EQ(twist_set(g, maximal_matching(g)), all_tiles(g));
  }
  const auto g1 = build_kronecker_G(1);
  EXPECT_EQ(twist_weights(g1, twist_set(g1, maximal_matching(g1))), (std::vector<int>{1, 1, 2}));
}

TEST(Snake, SerialAndParallelKernelsAgree) {
  const auto g = build_kronecker_G(6);
  const auto p = enumerate_matchings(g, Exec::parallel);
  const auto s = enumerate_matchings(g, Exec::serial);
  ASSERT_EQ(p.size(), s.size());
  std::vector<EdgeSet> edges;
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_EQ(p[i].edges, s[i].edges);
    EXPECT_EQ(p[i].twist, s[i].twist);
    edges.push_back(p[i].edges);
  }
  EXPECT_EQ(twist_sets(g, edges, Exec::parallel), twist_sets(g, edges, Exec::serial));
}

TEST(Snake, TwistTileFlipsOneTile) {
  const auto g = build_demo_snake();
  for (const auto& m : enumerate_matchings(g)) {
    for (int t = 0; t < g.num_tiles(); ++t) {
      const auto flipped = twist_tile(g, m.edges, t);
      if (!flipped) continue;
      EXPECT_TRUE(is_perfect_matching(g, *flipped));
      EXPECT_EQ(twist_set(g, *flipped) ^ m.twist, TileSet{1} << t);
    }
  }
}

TEST(Snake, WeightTwoTilesHaveTwistedNeighbours) {
  for (int n = 1; n <= 8; ++n) {
    const auto g = build_kronecker_G(n);
    for (const auto& m : enumerate_matchings(g)) {
      for (int t : tile_list(m.twist)) {
        if (g.tiles()[static_cast<std::size_t>(t)].face_weight != 2) continue;
        EXPECT_TRUE(m.twist >> (t - 1) & 1U);
        EXPECT_TRUE(m.twist >> (t + 1) & 1U);
      }
    }
  }
}

TEST(Sigma, Properties) {
  const auto kg = kronecker_G(4);
  const auto& g = kg.graph;
  EXPECT_EQ(sigma(g, minimal_matching(g)), minimal_matching(g));
  const auto ms = enumerate_matchings(g);
  for (const auto& m : ms) {
    const auto s = sigma(g, m.edges);
    EXPECT_TRUE(is_perfect_matching(g, s));
    EXPECT_EQ(sigma(g, s), m.edges);
    const auto ts = twist_set(g, s);
    EXPECT_EQ(y_degrees(kg, ts), y_degrees(kg, m.twist));
    EXPECT_EQ(alpha2(kg, ts), -alpha2(kg, m.twist));
  }
  EXPECT_THROW(sigma_edge_map(build_demo_snake()), DomainError);
}

TEST(Lattice, DemoGraph) {
  const auto g = build_demo_snake();
  const auto lat = build_lattice(g);
  EXPECT_EQ(lat.nodes.size(), 11u);
  EXPECT_EQ(lat.edges.size(), 15u);
  EXPECT_TRUE(check_lattice(g, lat).ok());
  EXPECT_EQ(lat.nodes[static_cast<std::size_t>(lat.min_node)].twist, TileSet{0});
  for (const auto& e : lat.edges) {
    EXPECT_EQ(e.label, g.tiles()[static_cast<std::size_t>(e.tile)].face_weight);
  }
}

TEST(Lattice, SingleTileAndKronecker) {
  const auto one = build_lattice(build_kronecker_G(0));
  EXPECT_EQ(one.nodes.size(), 2u);
  EXPECT_EQ(one.edges.size(), 1u);
  for (int n = 0; n <= 6; ++n) {
    const auto g = build_kronecker_G(n);
    const auto lat = lattice_of(g);
    const auto c = check_lattice(g, lat);
    EXPECT_TRUE(c.ok()) << n << ": " << c.summary();
    EXPECT_EQ(check_lattice(g, lat, Exec::serial).ok(), c.ok());
    for (const auto& e : lat.edges) {
      const auto lo = lat.nodes[static_cast<std::size_t>(e.lower)].twist, hi = lat.nodes[static_cast<std::size_t>(e.upper)].twist;
      EXPECT_EQ(std::popcount(hi), std::popcount(lo) + 1);
    }
  }
}

TEST(Lattice, DotIsDeterministic) {
  const auto g = build_kronecker_G(2);
  const auto a = to_dot(g, build_lattice(g), "G2");
  EXPECT_EQ(a, to_dot(g, build_lattice(g, Exec::serial), "G2"));
  EXPECT_EQ(a.rfind("digraph G2 {", 0), 0u);
  EXPECT_NE(a.find("[label=\"{}\"];"), std::string::npos);
  EXPECT_NE(a.find("rankdir=BT;"), std::string::npos);
}
