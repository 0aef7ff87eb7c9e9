#include <gtest/gtest.h>

#include <unordered_set>

#include "virhc/rational.hpp"

using virhc::ParseError;
using virhc::Rational;

TEST(Rational, StoredInLowestTerms) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(8, 4).to_string(), "2");
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(Rational(1, 0), virhc::ParameterError);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("5"), Rational(5));
  EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("1/2"), Rational(1, 2));
  for (const char* bad : {"", "1/0", "x", "1/", "/2", "1.5", "2/-3", "1//2", " 1"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }
}

TEST(Rational, ArbitraryPrecision) {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000);
  EXPECT_EQ(big.to_string(), "1" + std::string(120, '0'));
  EXPECT_EQ(big / big, Rational(1));
}

TEST(Rational, ArithmeticAndOrder) {
  const Rational x(1, 3), y(-1, 6);
  EXPECT_EQ(x + y, Rational(1, 6));
  EXPECT_EQ(x - y, Rational(1, 2));
  EXPECT_EQ(x * y, Rational(-1, 18));
  EXPECT_EQ(x / y, Rational(-2));
  EXPECT_EQ(-x, Rational(-1, 3));
  EXPECT_LT(y, x);
  EXPECT_EQ(pow(Rational(-2, 3), 3), Rational(-8, 27));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
}

TEST(Rational, Predicates) {
  EXPECT_TRUE(Rational(0).is_zero());
  EXPECT_TRUE(Rational(3, 3).is_one());
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_TRUE(Rational(3, 2).is_half_integer_lattice());
  EXPECT_FALSE(Rational(1, 3).is_half_integer_lattice());
  EXPECT_EQ(Rational(-7).to_long(), -7);
  EXPECT_THROW((void)Rational(1, 2).to_long(), virhc::ParameterError);
  EXPECT_EQ(Rational(-1, 2).sign(), -1);
}

TEST(Rational, HashAgreesWithEquality) {
  std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(-1, 2)};
  EXPECT_EQ(s.size(), 2U);
}
