#include <numbers>

#include <gtest/gtest.h>

#include "uqfi/errors.hpp"
#include "uqfi/parse.hpp"

using namespace uqfi;

constexpr double kPi = std::numbers::pi;

TEST(ParseAngle, SymbolicFractionsOfPi) {
  EXPECT_EQ(parse_angle("pi"), kPi);
  EXPECT_EQ(parse_angle("pi/4"), kPi / 4);
  EXPECT_EQ(parse_angle("3pi/2"), 3 * kPi / 2);
  EXPECT_EQ(parse_angle("2*pi/3"), 2 * kPi / 3);
  EXPECT_EQ(parse_angle("-pi/8"), -kPi / 8);
  EXPECT_EQ(parse_angle(" 0.5pi "), 0.5 * kPi);
}

TEST(ParseAngle, DecimalRadians) {
  EXPECT_EQ(parse_angle("0.785"), 0.785);
  EXPECT_EQ(parse_angle("1e-3"), 1e-3);
  EXPECT_EQ(parse_angle("0"), 0.0);
}

TEST(ParseAngle, RejectsGarbage) {
  for (const char* bad : {"", "pie", "pi/0", "pi/", "x", "1.2.3", "pi*2", "3/4"}) {
    EXPECT_THROW(parse_angle(bad), DomainError) << bad;
  }
}

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("0.6+0.8i"), cplx(0.6, 0.8));
  EXPECT_EQ(parse_complex("0.5-0.5i"), cplx(0.5, -0.5));
  EXPECT_EQ(parse_complex("1"), cplx(1.0, 0.0));
  EXPECT_EQ(parse_complex("-i"), cplx(0.0, -1.0));
  EXPECT_EQ(parse_complex("i"), cplx(0.0, 1.0));
  EXPECT_EQ(parse_complex("0.25i"), cplx(0.0, 0.25));
  EXPECT_EQ(parse_complex("1e-3-2e-3i"), cplx(1e-3, -2e-3));
  EXPECT_EQ(parse_complex("-1+i"), cplx(-1.0, 1.0));
}

TEST(ParseComplex, RejectsGarbage) {
  for (const char* bad : {"", "a+bi", "1+2j", "1++2i"}) {
    EXPECT_THROW(parse_complex(bad), DomainError) << bad;
  }
}

TEST(FormatDouble, RoundTrips) {
  for (double v : {kPi, 0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}
