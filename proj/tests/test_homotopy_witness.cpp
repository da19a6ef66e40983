#include <gtest/gtest.h>

#include "sectcx/homotopy_witness.hpp"

using namespace sectcx;

TEST(GridEndo, PhiStartIsIdentity) {
  for (int n = 0; n <= 4; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) EXPECT_EQ(eval({Family::phi, n, 0}, {i, j}), (GridPoint{i, j}));
}

TEST(GridEndo, PsiEndIsDiagonalProjection) {
  for (int n = 0; n <= 4; ++n)
    for (int s : {n, n + 1})
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) EXPECT_EQ(eval({Family::psi, n, s}, {i, j}), (GridPoint{i, i}));
}

TEST(GridEndo, LowDimensionalValues) {
  EXPECT_EQ(eval({Family::phi, 1, 1}, {1, 0}), (GridPoint{1, 1}));
  EXPECT_EQ(eval({Family::phi, 1, 1}, {0, 1}), (GridPoint{0, 1}));
  EXPECT_THROW(eval({Family::phi, 1, 1}, {2, 0}), DomainError);
  EXPECT_THROW(eval({Family::phi, 1, 3}, {0, 0}), DomainError);
}

TEST(GridEndo, OrderPreserving) {
  for (int n = 0; n <= 4; ++n)
    for (int s = 0; s <= n + 1; ++s) {
      EXPECT_TRUE(preserves_order({Family::phi, n, s}));
      EXPECT_TRUE(preserves_order({Family::psi, n, s}));
    }
}

TEST(Squares, SquaresCommuteUpToFour) {
  auto r = square_check(4);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.failures.empty()) << (r.failures.empty() ? "" : r.failures.front().describe());
  EXPECT_GT(r.squares_checked, 0);
}

TEST(Squares, BoundaryCaseOfCofaceSquare) {
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s <= n; ++s) {
      int l = n - s;
      EXPECT_TRUE(square_commutes(Family::phi, Square::coface, n, s, l, s));
    }
}

TEST(Squares, LiteralIndexRuleFailsForDegeneracies) {
  // phi, codegeneracy square at l = n - s with s' = s does not commute.
  EXPECT_FALSE(square_commutes(Family::phi, Square::codegeneracy, 2, 1, 1, 1));
  EXPECT_FALSE(square_commutes(Family::phi, Square::codegeneracy, 2, 1, 1, 0));
  auto r = square_check(4);
  EXPECT_FALSE(r.literal_failures.empty());
}
