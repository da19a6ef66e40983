#include <gtest/gtest.h>

#include "sectcx/chain_complex.hpp"
#include "sectcx/examples.hpp"
#include "sectcx/height.hpp"

using namespace sectcx;

TEST(Rational, ParsesDecimalsAndFractions) {
  EXPECT_EQ(parse_rational("1"), Rational(1));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(parse_rational("0.5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational(".75"), Rational(3, 4));
  EXPECT_EQ(format_rational(Rational(6, 4)), "3/2");
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1.2.3"), ParseError);
}

TEST(Height, LevelsOfTriangle) {
  auto ex = examples::triangle();
  auto lv = validate_height(ex.space, ex.heights);
  EXPECT_EQ(lv.levels(), (std::vector<Rational>{0, 1, 2}));
}

TEST(Height, ConstantHeightHasOneLevel) {
  auto ex = examples::cylinder();
  for (auto& [k, v] : ex.heights.values) v = Rational(5, 3);
  EXPECT_EQ(validate_height(ex.space, ex.heights).level_count(), 1);
}

TEST(Height, RejectsEdgeAgainstHeights) {
  auto ex = examples::triangle();
  ex.heights.values["0"] = 3;
  try {
    validate_height(ex.space, ex.heights);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("'01'"), std::string::npos);
  }
}

TEST(Height, RejectsMissingVertex) {
  auto ex = examples::triangle();
  ex.heights.values.erase("1");
  EXPECT_THROW(validate_height(ex.space, ex.heights), DomainError);
}

namespace {
std::vector<int> betti(const SimplicialSet& x) { return betti_numbers(normalized_chains(PrimeField(2), x, 3), 2); }
}  // namespace

TEST(Fiber, CylinderBottomIsCircle) {
  auto ex = examples::cylinder();
  auto lv = validate_height(ex.space, ex.heights);
  auto f0 = fiber(ex.space, lv, 0);
  EXPECT_EQ(betti(f0), (std::vector<int>{1, 1, 0}));
  EXPECT_TRUE(validate(f0).ok());
}

TEST(Fiber, SubdividedSphereMiddleIsCircle) {
  auto ex = examples::sphere_subdivided();
  auto lv = validate_height(ex.space, ex.heights);
  EXPECT_EQ(betti(fiber(ex.space, lv, 1)), (std::vector<int>{1, 1, 0}));
}

TEST(Fiber, NonLevelIsEmpty) {
  auto ex = examples::cylinder();
  auto lv = validate_height(ex.space, ex.heights);
  EXPECT_TRUE(fiber(ex.space, lv, Rational(1, 2)).empty());
}

TEST(Subdivision, Numbers) {
  auto t = examples::triangle();
  EXPECT_EQ(subdivision_number(t.space, validate_height(t.space, t.heights)), 2);
  auto s = examples::sphere_subdivided();
  EXPECT_EQ(subdivision_number(s.space, validate_height(s.space, s.heights)), 1);
  auto c = examples::cylinder();
  EXPECT_EQ(subdivision_number(c.space, validate_height(c.space, c.heights)), 2);
  EXPECT_EQ(subdivision_number(SimplicialSet{}, LevelIndex{}), 0);
}

TEST(Subdivision, IsSubdivided) {
  auto s = examples::sphere_subdivided();
  EXPECT_TRUE(is_subdivided(s.space, validate_height(s.space, s.heights)));
  auto t = examples::triangle();
  EXPECT_FALSE(is_subdivided(t.space, validate_height(t.space, t.heights)));
  auto c = examples::cylinder();
  for (auto& [k, v] : c.heights.values) v = 0;
  EXPECT_TRUE(is_subdivided(c.space, validate_height(c.space, c.heights)));
}
