#include "qsnake/errors.hpp"
#include "qsnake/seed.hpp"
#include "qsnake/suites.hpp"
#include "qsnake/typea.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace qsnake;

namespace {

VertexSubset subset(std::initializer_list<int> vs) {
  VertexSubset s = 0;
  for (int v : vs) s |= VertexSubset{1} << (v - 1);
  return s;
}

}  // namespace

TEST(PathQuiver, ParseAndArrows) {
  const auto q = PathQuiver::parse("<><<");
  EXPECT_EQ(q.n, 5);
  EXPECT_TRUE(q.arrow(2, 1));
  EXPECT_TRUE(q.arrow(2, 3));
  EXPECT_TRUE(q.arrow(4, 3));
  EXPECT_TRUE(q.arrow(5, 4));
  EXPECT_FALSE(q.arrow(1, 2));
  EXPECT_THROW(PathQuiver::parse("<x"), DomainError);
  EXPECT_EQ(PathQuiver::all(4).size(), 8u);
  EXPECT_EQ(PathQuiver::parse("").n, 1);
  EXPECT_THROW(ArcDatum::parse(q, "3..1"), DomainError);
  EXPECT_THROW(ArcDatum::parse(q, "1..6"), DomainError);
  EXPECT_THROW(ArcDatum::parse(q, "1-2"), DomainError);
}

TEST(SuccessorClosed, Examples) {
  const ArcDatum fig{PathQuiver::parse("<><<"), 1, 5};
  const auto sc = successor_closed_subsets(fig);
  const auto s134 = subset({1, 3, 4});
  EXPECT_NE(std::find(sc.begin(), sc.end(), s134), sc.end());
  EXPECT_TRUE(is_successor_closed(fig, s134));
  EXPECT_EQ(phi(fig, s134), 2);
  EXPECT_EQ(phi(fig, 0), 0);
  EXPECT_EQ(sc.front(), 0u);
  EXPECT_EQ(sc.back(), fig.interval());

  const ArcDatum chain{PathQuiver::parse(">>"), 1, 3};
  EXPECT_EQ(successor_closed_subsets(chain), (std::vector<VertexSubset>{0, subset({3}), subset({2, 3}), subset({1, 2, 3})}));
}

TEST(SuccessorClosed, PhiIdentity) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& q : PathQuiver::all(n)) {
      for (const auto& d : all_arcs(q)) {
        for (VertexSubset s : successor_closed_subsets(d)) EXPECT_EQ(phi_by_arrows(d, s), phi(d, s));
      }
    }
  }
}

TEST(TranG, Examples) {
  EXPECT_EQ(tran_g_vector(ArcDatum{PathQuiver::parse(""), 1, 1}), (std::vector<int>{-1, 0}));
  EXPECT_EQ(tran_g_vector(ArcDatum{PathQuiver::parse(">>"), 1, 3}), (std::vector<int>{0, 0, -1, 0, 0, 0}));
}

TEST(TranG, MatchesDegreeOfExpansion) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& q : PathQuiver::all(n)) {
      const auto bt = q.exchange_matrix();
      for (const auto& d : all_arcs(q)) {
        auto g = tran_g_vector(d);
        g.resize(static_cast<std::size_t>(n));
        EXPECT_EQ(g_vector(expand_arc(d), bt), g);
      }
    }
  }
}

TEST(FPolynomial, SmallCases) {
  const ArcDatum a1{PathQuiver::parse(""), 1, 1};
  const auto t1 = typea_torus(a1.quiver);
  EXPECT_EQ(quantum_F_polynomial(a1, t1), monomial(t1, {0, 0}) + monomial(t1, b_vector(a1.quiver, 1), QLaurent::monomial(1)));

  const ArcDatum lin{PathQuiver::parse(">"), 1, 2};
  const auto t2 = typea_torus(lin.quiver);
  const auto f = quantum_F_polynomial(lin, t2);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f.coeff({0, 0, 0, 0}), QLaurent(1));
  EXPECT_EQ(f.coeff(b_vector(lin.quiver, subset({2}))), QLaurent::monomial(1));
  EXPECT_EQ(f.coeff(b_vector(lin.quiver, subset({1, 2}))), QLaurent::monomial(1));
}

TEST(ExpandArc, A1IsSingleMutation) {
  const auto q = PathQuiver::parse("");
  const auto x = expand_arc(ArcDatum{q, 1, 1});
  EXPECT_EQ(x, mutate(initial_seed(q.exchange_matrix()), 1).cluster[0]);
  EXPECT_EQ(x.size(), 2u);
}

TEST(ExpandArc, UnitCoefficientsAndClassicalLimit) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& q : PathQuiver::all(n)) {
      for (const auto& d : all_arcs(q)) {
        const auto x = expand_arc(d);
        const auto sc = successor_closed_subsets(d);
        EXPECT_EQ(x.size(), sc.size());
        // q = 1: one term per matching of the snake graph, each with coefficient 1.
        const auto g = build_typea_snake(d);
        ClassicalLaurent want(2 * n);
        for (const auto& m : enumerate_matchings(g)) {
          VertexSubset s = 0;
          for (int w : twist_weights(g, m.twist)) s |= VertexSubset{1} << (w - 1);
          auto e = b_vector(q, s);
          const auto gv = tran_g_vector(d);
          for (std::size_t i = 0; i < e.size(); ++i) e[i] += gv[i];
          want.add_term(e, 1);
        }
        EXPECT_EQ(specialize_classical(x), want);
      }
    }
  }
}

TEST(ExpandArc, SetEqualsExchangeGraph) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& line : check_typea(n).lines) EXPECT_TRUE(line.second) << line.first;
  }
}

TEST(TypeASnake, MatchingsAreSuccessorClosedSubsets) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& q : PathQuiver::all(n)) {
      for (const auto& d : all_arcs(q)) {
        const auto g = build_typea_snake(d);
        EXPECT_EQ(g.num_tiles(), d.b - d.a + 1);
        EXPECT_EQ(count_matchings(g), successor_closed_subsets(d).size());
        EXPECT_EQ(twist_set(g, minimal_matching(g)), TileSet{0});
      }
    }
  }
}
