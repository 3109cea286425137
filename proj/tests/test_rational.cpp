#include <gtest/gtest.h>

#include "infogreedy/errors.hpp"
#include "infogreedy/rational.hpp"

using namespace infogreedy;

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("1/3"), Rational(1, 3));
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("-5/10"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("+2"), Rational(2));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1/-2", "1.5", "1//2"})
    EXPECT_THROW(parse_rational(bad), InputError) << bad;
}

TEST(Rational, FormatsInLowestTerms) {
  EXPECT_EQ(to_string(frac(6, 9)), "2/3");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_EQ(to_string(frac(-3, 6)), "-1/2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, RoundTripsThroughText) {
  for (long num = -12; num <= 12; ++num)
    for (long den = 1; den <= 7; ++den) {
      const auto r = frac(num, den);
      EXPECT_EQ(parse_rational(to_string(r)), r);
    }
}
