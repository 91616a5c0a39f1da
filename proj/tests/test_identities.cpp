#include <veritool/identities.hpp>

#include <gtest/gtest.h>

#include "oracle.hpp"

using veritool::ExactInt;
using veritool::ExactRational;

namespace {

ExactRational q(std::int64_t n, std::int64_t d = 1) { return {ExactInt(n), ExactInt(d)}; }

// Direct evaluation of C(x, k) for rational x from the falling product, for
// cross-checking the identity sides.
ExactRational falling_binomial(const ExactRational& x, std::uint64_t k) {
  ExactRational r(1);
  for (std::uint64_t i = 0; i < k; ++i) r = r * (x - q(static_cast<std::int64_t>(i))) / q(static_cast<std::int64_t>(i + 1));
  return r;
}

}  // namespace

TEST(Lemma25, Examples) {
  const auto a = veritool::lemma25_sides(0, q(7, 2));
  EXPECT_EQ(a.lhs, q(7, 2));
  EXPECT_EQ(a.rhs, q(7, 2));
  const auto b = veritool::lemma25_sides(1, q(3));
  EXPECT_EQ(b.lhs, q(5));
  EXPECT_EQ(b.rhs, q(5));
  EXPECT_TRUE(veritool::lemma25_sides(2, q(-1, 2)).agree());
}

TEST(Lemma25, HoldsOnGrid) {
  std::vector<ExactRational> xs;
  for (std::int64_t x = -5; x <= 10; ++x) xs.push_back(q(x));
  xs.push_back(q(-1, 2));
  xs.push_back(q(1, 2));
  xs.push_back(q(7, 3));
  for (std::uint64_t n = 0; n <= 60; ++n) {
    for (const auto& x : xs) EXPECT_TRUE(veritool::lemma25_sides(n, x).agree()) << n << " " << x.str();
  }
}

TEST(Lemma25, LeftSideMatchesDirectEvaluation) {
  for (std::uint64_t n = 0; n <= 8; ++n) {
    for (const auto& x : {q(-1, 2), q(7, 3), q(4)}) {
      ExactRational lhs;
      for (std::uint64_t k = 0; k <= n; ++k) {
        const ExactInt c = oracle::binomial(n, k);
        lhs += ExactRational(c * c) * falling_binomial(x + q(static_cast<std::int64_t>(k)), 2 * n + 1);
      }
      EXPECT_EQ(veritool::lemma25_sides(n, x).lhs, lhs);
    }
  }
}

TEST(Staver, Examples) {
  const auto one = veritool::staver_sides(1);
  EXPECT_EQ(one.lhs, q(2));
  EXPECT_EQ(one.rhs, q(2));
  const auto two = veritool::staver_sides(2);
  EXPECT_EQ(two.lhs, q(5));
  EXPECT_EQ(two.rhs, q(5));
  EXPECT_TRUE(veritool::staver_sides(3).agree());
  EXPECT_THROW(veritool::staver_sides(0), std::invalid_argument);
}

TEST(Staver, HoldsUpTo300) {
  for (std::uint64_t n = 1; n <= 300; ++n) EXPECT_TRUE(veritool::staver_sides(n).agree()) << n;
}

TEST(WZPair, FValues) {
  EXPECT_EQ(veritool::wz_f(0, 0), q(1));
  EXPECT_EQ(veritool::wz_f(0, 1), q(3));
  // weight 3k+2j+1: (4/16) * 4 * 2 * 1 = 2
  EXPECT_EQ(veritool::wz_f(1, 0), q(2));
  EXPECT_EQ(veritool::wz_f(1, 1), q(27));
}

TEST(WZPair, GValues) {
  EXPECT_EQ(veritool::wz_g(0, 5), q(0));
  EXPECT_EQ(veritool::wz_g(1, 0), q(-2));
  EXPECT_EQ(veritool::wz_g(1, 1), q(-2));
  const auto pt = veritool::wz_point(1, 1);
  EXPECT_EQ(pt.f_value, q(27));
  EXPECT_EQ(pt.g_value, q(-2));
}

TEST(WZPair, FAtZeroIsTheSeriesTerm) {
  for (std::uint64_t k = 0; k <= 40; ++k) {
    const ExactInt c = oracle::central(k);
    EXPECT_EQ(veritool::wz_f(k, 0), ExactRational(ExactInt(3 * k + 1) * c * c * c, ExactInt::pow(ExactInt(16), k)));
  }
}

TEST(WZPair, RelationExamples) {
  EXPECT_TRUE(veritool::wz_pair_relation(0, 1).is_zero());
  EXPECT_TRUE(veritool::wz_pair_relation(1, 1).is_zero());
  EXPECT_TRUE(veritool::wz_pair_relation(3, 2).is_zero());
  const auto s = veritool::wz_relation_sides(0, 1);
  EXPECT_EQ(s.lhs, q(-2));
  EXPECT_EQ(s.rhs, q(-2));
  EXPECT_THROW(veritool::wz_pair_relation(0, 0), std::invalid_argument);
}

TEST(WZPair, RelationHoldsOnGrid) {
  for (std::uint64_t k = 0; k <= 60; ++k) {
    for (std::uint64_t j = 1; j <= 60; ++j) ASSERT_TRUE(veritool::wz_pair_relation(k, j).is_zero()) << k << "," << j;
  }
}

// With weight 2k+2j+1 in place of 3k+2j+1 the relation already breaks at k=1.
TEST(WZPair, AlternativeWeightIsNotAPair) {
  const auto f_alt = [](std::int64_t k, std::int64_t j) {
    const ExactInt c = oracle::central(static_cast<std::uint64_t>(k));
    return ExactRational(ExactInt(2 * k + 2 * j + 1) * c * c * veritool::binomial(2 * k + 2 * j, k + j) *
                             veritool::binomial(2 * k + 2 * j, 2 * j),
                         ExactInt::pow(ExactInt(16), static_cast<unsigned long>(k)) * veritool::binomial(2 * j, j));
  };
  const ExactRational defect =
      f_alt(1, 0) - f_alt(1, 1) - veritool::wz_g(2, 1) + veritool::wz_g(1, 1);
  EXPECT_FALSE(defect.is_zero());
}

TEST(WZPair, TelescopingExamples) {
  EXPECT_TRUE(veritool::telescoped_identity_defect(1).is_zero());
  EXPECT_TRUE(veritool::telescoped_identity_defect(2).is_zero());
  EXPECT_TRUE(veritool::telescoped_identity_defect(10).is_zero());
  EXPECT_THROW(veritool::telescoped_identity_defect(0), std::invalid_argument);
}

TEST(WZPair, TelescopingHoldsUpTo40) {
  for (std::uint64_t n = 1; n <= 40; ++n) EXPECT_TRUE(veritool::telescoped_identity_defect(n).is_zero()) << n;
}

TEST(FloorSuperadditivity, Examples) {
  EXPECT_EQ(veritool::floor_superadditivity(1, 1, 2), std::make_pair(true, true));
  EXPECT_EQ(veritool::floor_superadditivity(0, 0, 9), std::make_pair(true, true));
  EXPECT_EQ(veritool::floor_superadditivity(7, 9, 5), std::make_pair(true, true));
  EXPECT_THROW(veritool::floor_superadditivity(1, 1, 1), std::invalid_argument);
}

TEST(FloorSuperadditivity, Exhaustive) {
  for (std::uint64_t m = 2; m <= 64; ++m) {
    for (std::uint64_t a = 0; a <= 200; ++a) {
      for (std::uint64_t b = 0; b <= 200; ++b) {
        const auto [doubled, additive] = veritool::floor_superadditivity(a, b, m);
        ASSERT_TRUE(doubled && additive) << a << " " << b << " " << m;
      }
    }
  }
}
