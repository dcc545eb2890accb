#include <gtest/gtest.h>

#include <numbers>

#include "spacs/angles.hpp"
#include "spacs/error.hpp"

namespace {

constexpr double pi = std::numbers::pi;

TEST(ParseAngle, RationalMultiplesOfPiAreBitExact) {
  EXPECT_EQ(spacs::parse_angle("pi"), pi);
  EXPECT_EQ(spacs::parse_angle("pi/9"), pi / 9);
  EXPECT_EQ(spacs::parse_angle("2pi/3"), 2 * pi / 3);
  EXPECT_EQ(spacs::parse_angle("2*pi/3"), 2 * pi / 3);
  EXPECT_EQ(spacs::parse_angle(" 3 * pi / 4 "), 3 * pi / 4);
  EXPECT_EQ(spacs::parse_angle("-pi/4"), -pi / 4);
  EXPECT_EQ(spacs::parse_angle("+pi/2"), pi / 2);
}

TEST(ParseAngle, PlainDecimals) {
  EXPECT_EQ(spacs::parse_angle("0.25"), 0.25);
  EXPECT_EQ(spacs::parse_angle("-1e-3"), -1e-3);
  EXPECT_EQ(spacs::parse_real("+2"), 2.0);
}

TEST(ParseAngle, RejectsMalformedInput) {
  for (const char* bad : {"", "pi/", "pi/0", "pi/-3", "xpi", "2.5pi", "pi*2", "1.0abc", "--1"}) {
    EXPECT_THROW(spacs::parse_angle(bad), spacs::Error) << bad;
  }
}

TEST(FormatReal, SeventeenSignificantDigitsRoundTrip) {
  const double x = 0.1 + 0.2;
  EXPECT_EQ(spacs::format_real(x), "0.30000000000000004");
  EXPECT_EQ(std::stod(spacs::format_real(pi / 9)), pi / 9);
  EXPECT_EQ(spacs::format_real(0.0), "0");
}

}  // namespace
