#include "qsnake/errors.hpp"
#include "qsnake/kronecker.hpp"
#include "qsnake/seed.hpp"
#include "qsnake/suites.hpp"
#include "qsnake/typea.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace qsnake;

TEST(PrincipalPair, Kronecker) {
  const auto [b, lam] = principal_pair(kronecker_btilde());
  EXPECT_EQ(b, IntMatrix({{0, 2}, {-2, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(lam.rows(), (std::vector<std::vector<int>>{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, -2}, {0, 1, 2, 0}}));
}

TEST(PrincipalPair, Rank1) {
  const auto [b, lam] = principal_pair(IntMatrix(std::vector<std::vector<int>>{{0}}));
  EXPECT_EQ(b, IntMatrix(std::vector<std::vector<int>>{{0}, {1}}));
  EXPECT_EQ(lam.rows(), (std::vector<std::vector<int>>{{0, -1}, {1, 0}}));
}

TEST(PrincipalPair, CompatibleForAllPathQuivers) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& q : PathQuiver::all(n)) {
      const auto [b, lam] = principal_pair(q.exchange_matrix());
      IntMatrix l(lam.rows());
      IntMatrix want(n, 2 * n);
      for (int i = 0; i < n; ++i) want(i, i) = 1;
      EXPECT_EQ(b.transpose() * l, want) << q.orientation;
    }
  }
  EXPECT_THROW(principal_pair(IntMatrix({{0, 1}, {1, 0}})), DomainError);
}

TEST(MutateMatrix, FominZelevinsky) {
  const IntMatrix b({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(mutate_matrix(b, 1), IntMatrix({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}, {1, 0, 0}, {0, -1, 1}, {0, 0, 1}}));
  for (int k = 0; k < 3; ++k) EXPECT_EQ(mutate_matrix(mutate_matrix(b, k), k), b);
}

TEST(Mutate, KroneckerFirstStep) {
  const auto s = mutate(initial_seed(kronecker_btilde()), 1);
  EXPECT_EQ(s.cluster[0], kmono(-1, 0, 1, 0) + kmono(-1, 2, 0, 0));
  EXPECT_EQ(s.cluster[1], kmono(0, 1, 0, 0));
  EXPECT_EQ(s.history, std::vector<int>{1});
}

TEST(Mutate, Involution) {
  const auto s0 = initial_seed(kronecker_btilde());
  for (int k = 1; k <= 2; ++k) {
    const auto s = mutate(mutate(s0, k), k);
    EXPECT_EQ(s.cluster, s0.cluster);
    EXPECT_EQ(s.b, s0.b);
    EXPECT_EQ(s.lambda_current, s0.lambda_current);
  }
}

TEST(GVector, Values) {
  const auto bt = kronecker_btilde();
  EXPECT_EQ(g_vector(kmono(1, 0, 0, 0), bt), (std::vector<int>{1, 0}));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(g_vector(kronecker_x(n + 3), bt), (std::vector<int>{-n - 1, n + 2}));
  EXPECT_THROW(g_vector(kmono(1, 0, 0, 0) + kmono(0, 0, 1, 0), bt), InhomogeneousElement);
}

TEST(Quantization, SmallCases) {
  const auto bt = kronecker_btilde();
  const auto s0 = initial_seed(bt);
  const auto r0 = verify_quantization(s0, bt);
  EXPECT_TRUE(r0.pass);
  EXPECT_EQ(r0.compatibility_multiplier, 1);
  EXPECT_EQ(g_matrix(s0, bt), IntMatrix::identity(2));
  EXPECT_EQ(c_matrix(s0), IntMatrix::identity(2));
  const auto r = verify_quantization(mutate_sequence(s0, {1, 2, 1}), bt);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.compatibility_multiplier, 1);
}

TEST(Quantization, AllShortSequences) {
  EXPECT_TRUE(check_quantization(kronecker_btilde(), 6, "Kronecker").pass());
  for (const auto& q : PathQuiver::all(3)) EXPECT_TRUE(check_quantization(q.exchange_matrix(), 6, q.orientation).pass());
}

TEST(Seeds, PairwiseQCommuteAndPositivity) {
  std::size_t seen = 0;
  for_each_mutation_sequence(initial_seed(kronecker_btilde()), 8, [&](const QuantumSeed& s) {
    const auto v = s.variables();
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_TRUE(testutil::nonnegative(v[i]));
      for (std::size_t j = 0; j < v.size(); ++j) {
        EXPECT_EQ(commutation_exponent(v[i], v[j]), 2 * s.lambda_current(static_cast<int>(i), static_cast<int>(j)));
      }
    }
    ++seen;
  });
  EXPECT_EQ(seen, 511u);
}

TEST(Bfs, TypeACounts) {
  const std::vector<std::size_t> want{0, 2, 5, 9, 14, 20};
  for (int n = 1; n <= 5; ++n) {
    const auto r = exchange_graph_bfs(initial_seed(PathQuiver::parse(std::string(static_cast<std::size_t>(n - 1), '>')).exchange_matrix()), 10000);
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.variables.size(), want[static_cast<std::size_t>(n)]) << n;
  }
  const auto a2 = exchange_graph_bfs(initial_seed(IntMatrix({{0, 1}, {-1, 0}})), 100);
  EXPECT_EQ(a2.variables.size(), 5u);
  EXPECT_EQ(a2.seeds, 5u);
}

TEST(Bfs, SerialMatchesParallel) {
  const auto b = PathQuiver::parse("<><").exchange_matrix();
  const auto p = exchange_graph_bfs(initial_seed(b), 10000, Exec::parallel);
  const auto s = exchange_graph_bfs(initial_seed(b), 10000, Exec::serial);
  EXPECT_EQ(p.variables, s.variables);
  EXPECT_EQ(p.seeds, s.seeds);
}

TEST(Bfs, KroneckerIsInfinite) {
  const auto r = exchange_graph_bfs(initial_seed(kronecker_btilde()), 20);
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.seeds, 20u);
}
