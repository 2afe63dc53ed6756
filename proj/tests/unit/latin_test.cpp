#include <gtest/gtest.h>

#include <sstream>

#include "tfa/expr.hpp"
#include "tfa/latin.hpp"
#include "tfa/oracle.hpp"

namespace tfa {
namespace {

VdpTable table_of(const std::string& expr, unsigned k) {
  return VdpTable::from_function(Expr::parse(expr).at(k), k);
}

TEST(Latin, OrderTwoExample) {
  const auto s = make_latin_spec(table_of("x + 1", 1), table_of("x", 1));
  EXPECT_EQ(latin_matrix(s), (std::vector<std::uint64_t>{1, 0, 0, 1}));
  std::ostringstream csv;
  write_latin_csv(csv, s);
  EXPECT_EQ(csv.str(), "1,0\n0,1\n");
}

TEST(Latin, RandomSpecsAreLatin) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = random_latin_spec(2, seed);
    EXPECT_FALSE(verify_latin(s)) << seed;
    EXPECT_EQ(check_measure_preservation(s.tx).measure_preserving, Verdict::pass);
    EXPECT_EQ(check_measure_preservation(s.ty).measure_preserving, Verdict::pass);
  }
  const auto big = random_latin_spec(6, 77);
  EXPECT_TRUE(balanced_mod([&](std::uint64_t a, std::uint64_t b) { return latin_entry(big, a, b); }, 6));
}

TEST(Latin, SameSeedSameSpec) {
  const auto a = random_latin_spec(8, 1234);
  const auto b = random_latin_spec(8, 1234);
  EXPECT_EQ(a.tx, b.tx);
  EXPECT_EQ(a.ty, b.ty);
  EXPECT_NE(random_latin_spec(8, 1235).tx, a.tx);
}

TEST(Latin, ConstantColumnTableIsCaught) {
  const auto good = random_latin_spec(3, 5);
  const LatinSquareSpec bad{3, good.tx, VdpTable(3, std::vector<std::uint64_t>(8, 0))};
  const auto v = verify_latin(bad);
  ASSERT_TRUE(v);
  EXPECT_TRUE(v->in_row);
  EXPECT_EQ(v->line, 0u);
  EXPECT_EQ(latin_entry(bad, 0, v->first), latin_entry(bad, 0, v->second));
  EXPECT_THROW(make_latin_spec(good.tx, VdpTable(3, std::vector<std::uint64_t>(8, 0))), DomainError);
}

TEST(Latin, EntryCostAndRange) {
  const auto s = random_latin_spec(8, 3);
  EvalCounters c;
  latin_entry(s, 255, 255, c);
  EXPECT_EQ(c.loads, 16u);
  EXPECT_EQ(c.adds, 15u);
  EXPECT_THROW(latin_entry(s, 256, 0), DomainError);
  EXPECT_THROW(verify_latin(random_latin_spec(13, 1)), CapExceeded);
}

TEST(Latin, EntryMatchesMatrix) {
  const auto s = random_latin_spec(7, 99);
  const auto m = latin_matrix(s);
  for (std::uint64_t a = 0; a < 128; ++a) {
    for (std::uint64_t b = 0; b < 128; ++b) ASSERT_EQ(latin_entry(s, a, b), m[a * 128 + b]);
  }
}

}  // namespace
}  // namespace tfa
