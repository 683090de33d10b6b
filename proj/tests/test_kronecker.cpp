#include "qsnake/errors.hpp"
#include "qsnake/kronecker.hpp"
#include "qsnake/qbinom.hpp"
#include "qsnake/suites.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace qsnake;

namespace {

QLaurent q(int doubled) { return QLaurent::monomial(doubled); }

void expect_pass(const CheckReport& r) {
  EXPECT_FALSE(r.lines.empty());
  for (const auto& [what, ok] : r.lines) EXPECT_TRUE(ok) << what;
}

}  // namespace

TEST(Kronecker, X3) {
  const auto x3 = kmono(-1, 2, 0, 0) + kmono(-1, 0, 1, 0);
  EXPECT_EQ(x_via_qbinom(0), x3);
  EXPECT_EQ(x_via_matchings(0), x3);
  EXPECT_EQ(x_via_mutation(3)[3], x3);
  EXPECT_EQ(kronecker_x(1), kmono(1, 0, 0, 0));
  EXPECT_EQ(kronecker_x(2), kmono(0, 1, 0, 0));
}

TEST(Kronecker, X4HasFiveMatchings) {
  const auto x4 = x_via_matchings(1);
  EXPECT_EQ(x4.size(), 4u);
  BigInt total = 0;
  for (const auto& [a, c] : x4.terms()) total += eval_at_one(c);
  EXPECT_EQ(total, 5);
  EXPECT_EQ(x4.coeff({-2, 1, 1, 0}), q(-1) + q(1));
}

TEST(Kronecker, RoutesAgree) {
  const auto mut = x_via_mutation(13);
  for (int n = 0; n <= 10; ++n) {
    const auto a = x_via_qbinom(n);
    EXPECT_EQ(a, x_via_matchings(n, Exec::parallel)) << n;
    EXPECT_EQ(a, x_via_matchings(n, Exec::serial)) << n;
    EXPECT_EQ(a, mut[static_cast<std::size_t>(n + 3)]) << n;
    EXPECT_TRUE(testutil::nonnegative(a));
  }
}

TEST(Kronecker, NegativeIndices) {
  const auto neg = x_negative_via_mutation(8);
  EXPECT_EQ(neg[0], kmono(2, -1, 0, 1) + kmono(0, -1, 0, 0));
  EXPECT_EQ(neg[0], kronecker_x(0));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(x_negative_via_matchings(n), neg[static_cast<std::size_t>(n)]) << n;
}

TEST(Kronecker, CommutationWithFrozen) {
  const auto y1 = kmono(0, 0, 1, 0), y2 = kmono(0, 0, 0, 1);
  for (int n = 0; n <= 10; ++n) {
    const auto x = x_via_qbinom(n);
    EXPECT_EQ(commutation_exponent(x, y1), 2 * (n + 1));
    EXPECT_EQ(commutation_exponent(x, y2), -2 * (n + 2));
  }
  EXPECT_EQ(commutation_exponent(y1, y2), -4);
}

TEST(Kronecker, ExchangeRelations) { expect_pass(check_exchange_relations(10)); }

TEST(Alpha, G3TileValues) {
  EXPECT_EQ(kronecker_G(3).tile_alpha2, (std::vector<int>{-3, 2, -1, 0, 1, -2, 3}));
  const auto kg = kronecker_G(5);
  EXPECT_EQ(alpha2(kg, 0), 0);
}

TEST(Alpha, H1IsZero) {
  const auto kg = kronecker_H(1, resolved_h_convention());
  std::vector<Exponent> nus;
  for (const auto& m : enumerate_matchings(kg.graph)) {
    EXPECT_EQ(alpha2(kg, m.twist), 0);
    nus.push_back(nu(kg, m));
  }
  std::sort(nus.begin(), nus.end());
  EXPECT_EQ(nus, (std::vector<Exponent>{{-1, -1, 1, 0}, {-1, 1, 0, 0}, {1, -1, 1, 1}}));
}

TEST(Nu, GnFormula) {
  for (int n = 0; n <= 5; ++n) {
    const auto kg = kronecker_G(n);
    for (const auto& m : enumerate_matchings(kg.graph)) {
      const auto [a, b] = y_degrees(kg, m.twist);
      EXPECT_EQ(nu(kg, m), (Exponent{-n - 1 + 2 * b, n + 2 - 2 * a, a, b}));
    }
  }
}

TEST(BPS, S0AndS1) {
  EXPECT_EQ(s_elem(0), kmono(0, 0, 0, 0));
  EXPECT_EQ(s_elem(1), kmono(-1, 1, 0, 0) + kmono(-1, -1, 1, 0) + kmono(1, -1, 1, 1));
  expect_pass(check_s1(resolved_h_convention()));
  const auto x1 = kmono(1, 0, 0, 0), x2 = kmono(0, 1, 0, 0), y2 = kmono(0, 0, 0, 1);
  EXPECT_EQ(s_elem(1), kronecker_x(0) * kronecker_x(3) - q(1) * (y2 * x1 * x2));
}

TEST(HConvention, UniqueSurvivor) {
  const auto res = resolve_h_convention(6);
  ASSERT_EQ(res.candidates.size(), 4u);
  ASSERT_EQ(res.survivors.size(), 1u);
  EXPECT_EQ(res.survivors.front(), resolved_h_convention());
  EXPECT_FALSE(res.survivors.front().remove_first);
  EXPECT_EQ(res.survivors.front().weight1_offset, 1);
}

TEST(Recursions, LoopAndRS) {
  expect_pass(check_loop_recursion(10));
  expect_pass(check_rs_recursions(10, resolved_h_convention()));
  const auto x1 = kmono(1, 0, 0, 0), x2 = kmono(0, 1, 0, 0), x3 = kronecker_x(3);
  const auto y1 = kmono(0, 0, 1, 0), y2 = kmono(0, 0, 0, 1);
  EXPECT_EQ(x2 * s_elem(1), x3 + q(2) * (x1 * y1 * y2));
}

TEST(Coefficients, Values) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(c_coeff(0, n + 1, n), QLaurent(1));
  EXPECT_EQ(d_coeff(1, 0, 1), QLaurent(1));
  EXPECT_TRUE(c_coeff(3, 0, 2).is_zero());
  EXPECT_TRUE(d_coeff(0, 3, 2).is_zero());
  for (int n = 0; n <= 10; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int r = 0; p + r <= n; ++r) {
        EXPECT_EQ(eval_at_one(c_coeff(p, r, n)), binomial(n - r, p) * binomial(n + 1 - p, r));
      }
    }
  }
}

TEST(Coefficients, TablesAndRecursions) {
  const auto t = coeff_tables(10);
  expect_pass(check_coefficient_recursions(t, 10));
  expect_pass(check_coefficient_equalities(t, 10));
  for (const auto& [key, v] : t.ctilde) {
    const auto& [p, r, n] = key;
    EXPECT_TRUE(p + r <= n || (p == 0 && r == n + 1));
  }
}

TEST(Coefficients, BarInvariant) { expect_pass(check_bar_invariance(12)); }

TEST(LevelSets, Sizes) { expect_pass(check_level_counts(10)); }

TEST(Classical, Limits) {
  ClassicalLaurent want = ClassicalLaurent::monomial({-1, 2, 0, 0}) + ClassicalLaurent::monomial({-1, 0, 1, 0});
  EXPECT_EQ(classical_x(0), want);
  expect_pass(check_classical_limits(10));
}
