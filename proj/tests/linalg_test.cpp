#include "tourforge/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "tourforge/errors.hpp"
#include "tourforge/matrix.hpp"

using namespace tourforge;
using namespace tftest;

TEST(Det, SmallKnownValues) {
  EXPECT_EQ(det(RatMatrix(0, 0)), 1);  // 0x0 by convention
  EXPECT_EQ(det(RatMatrix{{5}}), 5);
  EXPECT_EQ(det(RatMatrix{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(det(RatMatrix::identity(6)), 1);
  EXPECT_EQ(det(RatMatrix{{1, 1}, {1, 1}}), 0);
}

TEST(Det, GoldenOperands) {
  EXPECT_EQ(det(golden_b1()), det_cofactor(golden_b1()));
  EXPECT_EQ(det(golden_b1_rotated()), det_cofactor(golden_b1_rotated()));
  EXPECT_EQ(det(golden_b2()), det_cofactor(golden_b2()));
  // The two arrangements differ by a 5-cycle row permutation (even), so
  // their determinants agree.
  EXPECT_EQ(det(golden_b1()), det(golden_b1_rotated()));
}

TEST(Det, MatchesCofactorOracleOnRandomMatrices) {
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3), size(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = size(rng);
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = rat(num(rng), den(rng));
    EXPECT_EQ(det(m), det_cofactor(m));
  }
}

TEST(Det, NonSquareRejected) {
  EXPECT_THROW(det(RatMatrix(2, 3)), ShapeError);
}

TEST(Rank, KnownValues) {
  EXPECT_EQ(rank_q(RatMatrix(0, 4)), 0);
  EXPECT_EQ(rank_q(RatMatrix::identity(4)), 4);
  EXPECT_EQ(rank_q(RatMatrix{{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(rank_q(RatMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 2);
  auto a = rational_vector({1, -1, 2});
  auto b = rational_vector({3, 0, 1, -2});
  EXPECT_EQ(rank_q(outer_product(a, b)), 1);
}

TEST(RankGf2, ReducesMod2) {
  EXPECT_EQ(rank_gf2(RatMatrix{{1, 1}, {1, 1}}), 1);
  EXPECT_EQ(rank_gf2(RatMatrix{{1, 1}, {1, 0}}), 2);
  EXPECT_EQ(rank_gf2(RatMatrix{{2, 0}, {0, 1}}), 1);   // 2 = 0 mod 2
  EXPECT_EQ(rank_gf2(RatMatrix{{1, -1}, {1, 1}}), 1);  // -1 = 1 mod 2
  EXPECT_EQ(rank_gf2(RatMatrix(3, 3)), 0);
  auto a = rational_vector({1, -1, 1});
  auto b = rational_vector({1, 1, 1, 1});
  EXPECT_EQ(rank_gf2(outer_product(a, b)), 1);
}

TEST(RankGf2, NonIntegralRejected) {
  RatMatrix m(1, 1);
  m.at(0, 0) = rat(1, 2);
  EXPECT_THROW(rank_gf2(m), Error);
}

TEST(Inverse, HandVerifiedTwoByTwo) {
  RatMatrix m{{-1, 0}, {1, -1}};
  RatMatrix inv = inverse(m);
  EXPECT_EQ(inv, (RatMatrix{{-1, 0}, {-1, -1}}));
  EXPECT_EQ(m * inv, RatMatrix::identity(2));
}

TEST(Inverse, RandomRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-4, 4), size(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    int n = size(rng);
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = num(rng);
    if (det(m) == 0) continue;
    EXPECT_EQ(m * inverse(m), RatMatrix::identity(n));
    EXPECT_EQ(inverse(m) * m, RatMatrix::identity(n));
  }
}

TEST(Inverse, SingularRejected) {
  EXPECT_THROW(inverse(RatMatrix{{1, 1}, {1, 1}}), SingularError);
}

TEST(Solve, ExactSolution) {
  RatMatrix a{{2, 1}, {1, 1}};
  RatMatrix b{{1, 0, 3}, {0, 1, -1}};
  RatMatrix x = solve(a, b);
  EXPECT_EQ(a * x, b);
  EXPECT_THROW(solve(RatMatrix{{1, 1}, {1, 1}}, b), SingularError);
}

TEST(NullVector, FindsKernelVector) {
  RatMatrix m{{1, 2, 3}, {2, 4, 6}};
  auto v = null_vector(m);
  ASSERT_TRUE(v.has_value());
  bool nonzero = false;
  for (const auto& x : *v) nonzero = nonzero || x != 0;
  EXPECT_TRUE(nonzero);
  for (int i = 0; i < m.rows(); ++i) {
    Rational sum = 0;
    for (int j = 0; j < m.cols(); ++j) sum += m.at(i, j) * (*v)[j];
    EXPECT_EQ(sum, 0);
  }
}

TEST(NullVector, FullColumnRankHasNone) {
  EXPECT_FALSE(null_vector(RatMatrix::identity(3)).has_value());
  EXPECT_FALSE(null_vector(RatMatrix{{1, 0}, {0, 1}, {1, 1}}).has_value());
}

TEST(Pivot, OneByOne) {
  EXPECT_EQ(pivot_real(RatMatrix{{1}}, 0, 0), (RatMatrix{{-1}}));
  EXPECT_EQ(pivot_real(RatMatrix{{-1}}, 0, 0), (RatMatrix{{1}}));
}

TEST(Pivot, TwoByTwo) {
  EXPECT_EQ(pivot_real(RatMatrix{{1, 1}, {1, 1}}, 0, 0),
            (RatMatrix{{-1, 1}, {1, 0}}));
}

TEST(Pivot, KeepsPivotRowAndColumn) {
  RatMatrix m{{1, 0, -1}, {1, -1, 1}, {0, 1, 1}};
  RatMatrix p = pivot_real(m, 1, 2);
  EXPECT_EQ(p.at(1, 2), -m.at(1, 2));
  for (int j = 0; j < 3; ++j)
    if (j != 2) EXPECT_EQ(p.at(1, j), m.at(1, j));
  for (int i = 0; i < 3; ++i)
    if (i != 1) EXPECT_EQ(p.at(i, 2), m.at(i, 2));
  EXPECT_EQ(p.at(0, 0), m.at(0, 0) - m.at(1, 2) * m.at(0, 2) * m.at(1, 0));
}

TEST(Pivot, InvolutionAtTheSamePosition) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    RatMatrix m = random_sign_matrix(rng, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (m.at(i, j) == 0) continue;
        EXPECT_EQ(pivot_real(pivot_real(m, i, j), i, j), m);
      }
  }
}

TEST(Pivot, RejectsNonUnitPivot) {
  EXPECT_THROW(pivot_real(RatMatrix{{0}}, 0, 0), PivotError);
  EXPECT_THROW(pivot_real(RatMatrix{{2}}, 0, 0), PivotError);
}
