#include <gtest/gtest.h>

#include "popmatch/error.hpp"
#include "popmatch/rational.hpp"

namespace popmatch {
namespace {

TEST(Rational, NormalisesOnParse) {
  EXPECT_EQ(Rational::parse("2/4").to_string(), "1/2");
  EXPECT_EQ(Rational::parse("-6/3").to_string(), "-2");
  EXPECT_EQ(Rational::parse("7").to_string(), "7");
  EXPECT_EQ(Rational::parse("0/5").to_string(), "0");
}

TEST(Rational, FormatParseRoundTrip) {
  for (const char* s : {"0", "1", "-1", "7/2", "-13/17", "123456789012345678901234567891/7"}) {
    const Rational r = Rational::parse(s);
    EXPECT_EQ(Rational::parse(r.to_string()), r) << s;
    EXPECT_EQ(r.to_string(), s);
  }
}

TEST(Rational, RejectsMalformed) {
  for (const char* s : {"1/0", "", "abc", "1/", "/2", "1.5", "--1", "1/-2"}) {
    try {
      (void)Rational::parse(s);
      ADD_FAILURE() << "accepted " << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
    }
  }
}

TEST(Rational, ExactArithmetic) {
  const Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(7, 2) - Rational(2), Rational(3, 2));
  EXPECT_EQ(Rational(7, 2) * Rational(2), Rational(7));
  EXPECT_EQ(Rational(1) / Rational(3), third);
  EXPECT_EQ(-Rational(5, 4), Rational(-5, 4));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(-3, 4).sign(), -1);
  EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW((void)(Rational(1) / Rational(0)), Error); }

}  // namespace
}  // namespace popmatch
