#include <gtest/gtest.h>

#include "random_expr.hpp"
#include "tfa/expr.hpp"
#include "tfa/oracle.hpp"

namespace tfa {
namespace {

WordFunction fn(const std::string& s, unsigned k) { return Expr::parse(s).at(k); }

TEST(Bijective, Examples) {
  EXPECT_TRUE(bijective_mod(fn("x + 1", 8), 8).bijective);
  const auto r = bijective_mod(fn("2*x", 4), 4);
  EXPECT_FALSE(r.bijective);
  ASSERT_TRUE(r.collision);
  EXPECT_EQ(*r.collision, (std::pair<std::uint64_t, std::uint64_t>{0, 8}));
  EXPECT_TRUE(bijective_mod(fn("x + (x*x | 5)", 16), 16).bijective);
  EXPECT_THROW(bijective_mod(fn("x", 25), 25), CapExceeded);
}

TEST(Transitive, Examples) {
  const auto r = transitive_mod(fn("x + 1", 10), 10);
  EXPECT_TRUE(r.transitive);
  EXPECT_EQ(r.cycle_length, 1024u);
  const auto swap = transitive_mod(fn("x ^ 1", 3), 3);
  EXPECT_FALSE(swap.transitive);
  EXPECT_TRUE(swap.bijective);
  EXPECT_EQ(swap.cycle_length, 2u);
  EXPECT_FALSE(transitive_mod(fn("x + (x*x | 3)", 10), 10).transitive);
  // The orbit of 0 falls into the fixed point 14 and never returns.
  const auto doubling = transitive_mod(fn("2*x + 2", 4), 4);
  EXPECT_FALSE(doubling.transitive);
  EXPECT_FALSE(doubling.bijective);
  EXPECT_TRUE(doubling.collision);
}

TEST(Balanced, Examples) {
  EXPECT_TRUE(balanced_mod([](std::uint64_t x, std::uint64_t y) { return x + y; }, 2));
  EXPECT_FALSE(balanced_mod([](std::uint64_t x, std::uint64_t y) { return x & y; }, 2));
  EXPECT_THROW(balanced_mod([](std::uint64_t x, std::uint64_t) { return x; }, 13), CapExceeded);
}

TEST(Nesting, VerdictsProjectToLowerPrecision) {
  for (const auto& s : testing::random_corpus(41, 200)) {
    const Expr e = Expr::parse(s);
    for (unsigned k = 2; k <= 10; ++k) {
      const auto r = transitive_mod(e.at(k), k);
      if (r.transitive) ASSERT_TRUE(r.bijective);
      for (unsigned j = 1; j < k; ++j) {
        if (r.bijective) ASSERT_TRUE(bijective_mod(e.at(j), j).bijective) << s;
        if (r.transitive) ASSERT_TRUE(transitive_mod(e.at(j), j).transitive) << s;
      }
    }
  }
}

TEST(Parallel, LargeScanAgreesWithWitness) {
  const auto r = bijective_mod(fn("x*x + x", 18), 18);
  EXPECT_FALSE(r.bijective);
  ASSERT_TRUE(r.collision);
  const auto f = fn("x*x + x", 18);
  EXPECT_EQ(f(r.collision->first), f(r.collision->second));
  EXPECT_TRUE(bijective_mod(fn("x + (x*x | 7)", 20), 20).bijective);
}

}  // namespace
}  // namespace tfa
