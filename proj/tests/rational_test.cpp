#include "tourforge/rational.hpp"

#include <gtest/gtest.h>

#include "tourforge/errors.hpp"

using namespace tourforge;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(rat(2, 4), rat(1, 2));
  EXPECT_EQ(rat(-2, -4), rat(1, 2));
  EXPECT_EQ(rat(2, -4), rat(-1, 2));
  EXPECT_EQ(rat(0, 7), rat(0));
  EXPECT_EQ(rat(1, -2).get_den(), 2);  // denominator normalized positive
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(rat(1, 0), Error);
}

TEST(Rational, ExactArithmetic) {
  EXPECT_EQ(rat(1, 3) + rat(1, 6), rat(1, 2));
  EXPECT_EQ(rat(1, 3) * rat(3, 5), rat(1, 5));
  EXPECT_EQ(rat(1) - rat(1, 3) - rat(1, 3) - rat(1, 3), rat(0));
  EXPECT_EQ(rat(7, 2) / rat(7), rat(1, 2));
}

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(rat_from_string("5"), rat(5));
  EXPECT_EQ(rat_from_string("-5"), rat(-5));
  EXPECT_EQ(rat_from_string("3/6"), rat(1, 2));
  EXPECT_EQ(rat_from_string("-3/6"), rat(-1, 2));
  EXPECT_EQ(rat_to_string(rat(7)), "7");
  EXPECT_EQ(rat_to_string(rat(-1, 2)), "-1/2");
  for (const char* s : {"7", "-7", "22/7", "-22/7"})
    EXPECT_EQ(rat_to_string(rat_from_string(s)), s);
}

TEST(Rational, ParseErrors) {
  for (const char* s : {"", "x", "1/0", "1/", "/2", "1.5", "1/2/3", "2 "})
    EXPECT_THROW(rat_from_string(s), ParseError) << s;
}

TEST(Rational, BigValuesStayExact) {
  Rational big = rat_from_string("123456789012345678901234567890");
  Rational other = rat_from_string("987654321098765432109876543210");
  EXPECT_EQ(rat_to_string(big * rat(2) - big - big), "0");
  EXPECT_EQ((big / other) * other, big);
  EXPECT_EQ(rat_to_string(rat_from_string(rat_to_string(big / other))),
            rat_to_string(big / other));
}

TEST(Rational, IsIntegral) {
  EXPECT_TRUE(is_integral(rat(4, 2)));
  EXPECT_FALSE(is_integral(rat(1, 2)));
}

TEST(Rational, ToLong) {
  EXPECT_EQ(rat_to_long(rat(-42)), -42);
  EXPECT_THROW(rat_to_long(rat(1, 2)), Error);
  EXPECT_THROW(rat_to_long(rat_from_string("123456789012345678901234567890")),
               Error);
}
