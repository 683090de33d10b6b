#include "qsnake/errors.hpp"
#include "qsnake/qbinom.hpp"
#include "qsnake/qlaurent.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace qsnake;

namespace {

QLaurent q(int doubled, long long c = 1) { return QLaurent::monomial(doubled, c); }

// Sum over k-subsets of {0..n-1} of q^{sum(s_i) - k(k-1)/2}.
QLaurent gauss_by_subsets(int n, int k) {
  QLaurent out;
  for (unsigned s = 0; s < (1U << n); ++s) {
    if (__builtin_popcount(s) != k) continue;
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1U) sum += i;
    }
    out += q(2 * (sum - k * (k - 1) / 2));
  }
  return out;
}

}  // namespace

TEST(QLaurent, ZeroIsEmpty) {
  QLaurent z = q(1) - q(1);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.size(), 0u);
  EXPECT_EQ(QLaurent(0), QLaurent());
}

TEST(QLaurent, ToString) {
  EXPECT_EQ((q(-1) + QLaurent(2) + q(2)).to_string(), "q^(-1/2) + 2 + q");
  EXPECT_EQ(QLaurent().to_string(), "0");
}

TEST(QLaurent, RingAxiomsOnRandomTriples) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto a = testutil::random_qlaurent(rng), b = testutil::random_qlaurent(rng), c = testutil::random_qlaurent(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(bar(a * b), bar(a) * bar(b));
    EXPECT_EQ(bar(bar(a)), a);
  }
}

TEST(QLaurent, AsUnit) {
  EXPECT_EQ(q(3).as_unit(), std::make_pair(3, 1));
  EXPECT_EQ((-q(-2)).as_unit(), std::make_pair(-2, -1));
  EXPECT_FALSE(q(0, 2).as_unit());
  EXPECT_FALSE((q(0) + q(2)).as_unit());
}

TEST(QInt, Values) {
  EXPECT_TRUE(qint(0).is_zero());
  EXPECT_EQ(qint(1), QLaurent(1));
  EXPECT_EQ(qint(2), q(1) + q(-1));
  EXPECT_EQ(qint(3), q(-2) + QLaurent(1) + q(2));
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(bar(qint(n)), qint(n));
}

TEST(QBinom, SmallValues) {
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(qbinom(n, 0), QLaurent(1));
  EXPECT_EQ(qbinom(2, 1), q(1) + q(-1));
  EXPECT_EQ(qbinom(4, 2), q(-4) + q(-2) + QLaurent(2) + q(2) + q(4));
  EXPECT_EQ(bar(qbinom(3, 1)), qbinom(3, 1));
}

TEST(QBinom, DomainErrors) {
  EXPECT_THROW(qbinom(2, 3), DomainError);
  EXPECT_THROW(qbinom(-1, 0), DomainError);
  EXPECT_THROW(qbinom(3, -1), DomainError);
}

TEST(QBinom, PascalRuleAndSymmetry) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) {
      EXPECT_EQ(qbinom(n, k), qbinom(n - 1, k - 1).shifted(-(n - k)) + qbinom(n - 1, k).shifted(k)) << n << "," << k;
    }
  }
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(bar(qbinom(n, k)), qbinom(n, k));
      EXPECT_EQ(eval_at_one(qbinom(n, k)), binomial(n, k));
    }
  }
}

TEST(GaussBinom, MatchesSubsetInversionOracle) {
  EXPECT_EQ(gauss_binom(2, 1), QLaurent(1) + q(2));
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto g = gauss_binom(n, k);
      EXPECT_EQ(g, gauss_by_subsets(n, k)) << n << "," << k;
      EXPECT_EQ(qbinom(n, k), g.shifted(-k * (n - k)));
      for (const auto& [e, c] : g.terms()) {
        EXPECT_GE(e, 0);
        EXPECT_EQ(e % 2, 0);
        EXPECT_GT(c, 0);
      }
    }
  }
}

TEST(GaussBinom, AtMinusOne) {
  EXPECT_EQ(eval_int(gauss_binom(4, 2), -1), 2);
  EXPECT_EQ(eval_int(gauss_binom(4, 1), -1), 0);
  for (int n = 0; n <= 14; ++n) {
    for (int k = 0; k <= n; ++k) {
      const BigInt want = (k % 2 == 1 && n % 2 == 0) ? BigInt(0) : binomial(n / 2, k / 2);
      EXPECT_EQ(eval_int(gauss_binom(n, k), -1), want) << n << "," << k;
    }
  }
}

TEST(EvalInt, Errors) {
  EXPECT_THROW(eval_int(q(1), 2), EvaluationError);
  EXPECT_THROW(eval_int(q(-2), 0), DomainError);
  EXPECT_THROW(eval_int(q(-2) + q(2), 2), EvaluationError);
  EXPECT_EQ(eval_int(q(-2, 2) + QLaurent(1), 2), 2);
  EXPECT_EQ(eval_int(q(-2) + q(4, 3), -1), 2);
}
