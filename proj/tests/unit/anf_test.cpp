#include <gtest/gtest.h>

#include "tfa/anf.hpp"
#include "tfa/expr.hpp"
#include "tfa/gallery.hpp"

namespace tfa {
namespace {

std::vector<bool> truth(const std::string& expr, unsigned j) {
  return coordinate(Expr::parse(expr).at(j + 1), j).truth;
}

TEST(Coordinate, Examples) {
  EXPECT_EQ(truth("x + 1", 0), (std::vector<bool>{1, 0}));
  // psi_1 = chi_1, indexed by x = chi_0 + 2 chi_1.
  EXPECT_EQ(truth("x", 1), (std::vector<bool>{0, 0, 1, 1}));
  // psi_1 of x + 1 is chi_1 xor chi_0.
  EXPECT_EQ(truth("x + 1", 1), (std::vector<bool>{0, 1, 1, 0}));
}

TEST(MeasurePreservation, Examples) {
  EXPECT_EQ(check_measure_preservation_anf(Expr::parse("x").at(10), 10).measure_preserving,
            Verdict::pass);
  const auto r = check_measure_preservation_anf(Expr::parse("2*x").at(10), 10);
  EXPECT_EQ(r.measure_preserving, Verdict::fail);
  EXPECT_EQ(r.first_failure()->level, 0u);
}

TEST(Ergodicity, Examples) {
  EXPECT_EQ(check_ergodicity_anf(Expr::parse("x + 1").at(14), 14).ergodic, Verdict::pass);
  const auto r = check_ergodicity_anf(Expr::parse("x ^ 1").at(6), 6);
  EXPECT_EQ(r.measure_preserving, Verdict::pass);
  EXPECT_EQ(r.ergodic, Verdict::fail);
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_EQ(r.first_failure()->condition, "phi_j odd weight");
  EXPECT_EQ(r.first_failure()->level, 1u);
  EXPECT_EQ(*r.first_failure()->value, 0u);
  for (std::uint64_t c = 0; c < 32; ++c) {
    const auto k = check_ergodicity_anf(klimov_shamir(c).expr.at(10), 10);
    EXPECT_EQ(k.ergodic == Verdict::pass, c % 8 == 5 || c % 8 == 7) << c;
  }
}

TEST(Cost, EvaluationsAreTwoToTheKPlusOneMinusTwo) {
  const Expr e = Expr::parse("x + (x*x | 5)");
  for (unsigned k = 1; k <= 12; ++k) {
    std::uint64_t calls = 0;
    const WordFunction counted = [&](std::uint64_t x) {
      ++calls;
      return e.evaluate(x, k);
    };
    check_ergodicity_anf(counted, k);
    EXPECT_EQ(calls, (std::uint64_t{1} << (k + 1)) - 2) << k;
  }
}

TEST(Cap, Enforced) {
  EXPECT_THROW(check_ergodicity_anf(Expr::parse("x").at(23), 23), CapExceeded);
}

}  // namespace
}  // namespace tfa
