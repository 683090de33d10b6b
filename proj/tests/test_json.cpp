#include "qsnake/json_io.hpp"
#include "qsnake/kronecker.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace qsnake;

TEST(Json, BigIntEncoding) {
  EXPECT_TRUE(bigint_to_json(BigInt(42)).is_number_integer());
  BigInt big = BigInt(1) << 100;
  const auto j = bigint_to_json(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(bigint_from_json(j), big);
  EXPECT_EQ(bigint_from_json(bigint_to_json(-big)), -big);
}

TEST(Json, QLaurentLayout) {
  const auto p = QLaurent::monomial(-1, 3) + QLaurent::monomial(2, -1);
  EXPECT_EQ(to_json(p), nlohmann::json::parse("[[-1,3],[2,-1]]"));
  EXPECT_EQ(qlaurent_from_json(to_json(p)), p);
}

TEST(Json, TorusRoundTrip) {
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    const auto x = testutil::random_element(rng, kronecker_torus());
    EXPECT_EQ(torus_from_json(nlohmann::json::parse(to_json(x).dump())), x);
  }
  const auto x = x_via_qbinom(10);
  EXPECT_EQ(torus_from_json(to_json(x)), x);
}

TEST(Json, TorusLayout) {
  const auto j = to_json(kronecker_x(3));
  EXPECT_EQ(j["m"], 4);
  EXPECT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["exp"], nlohmann::json::parse("[-1,0,1,0]"));
  EXPECT_EQ(j["terms"][1]["exp"], nlohmann::json::parse("[-1,2,0,0]"));
  EXPECT_EQ(j["terms"][1]["coeff"], nlohmann::json::parse("[[0,1]]"));
}
