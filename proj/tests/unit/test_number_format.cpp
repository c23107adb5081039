#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <limits>

#include "qfid/errors.hpp"
#include "qfid/number_format.hpp"
#include "qfid/rng.hpp"

namespace qfid {
namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

TEST(FormatG17, ShortestRoundTrip) {
  EXPECT_EQ(format_g17(0.5), "0.5");
  EXPECT_EQ(format_g17(0.1), "0.1");
  EXPECT_EQ(format_g17(1.0 / 3.0), "0.3333333333333333");
  EXPECT_EQ(format_g17(-2.0), "-2");
}

TEST(FormatFixed17, SeventeenDecimals) {
  EXPECT_EQ(format_fixed17(1.0), "1.00000000000000000");
  EXPECT_EQ(format_fixed17(0.0), "0.00000000000000000");
}

TEST(FormatComplex, SignsAndZeros) {
  EXPECT_EQ(format_complex(Complex(1, 0)), "1+0i");
  EXPECT_EQ(format_complex(Complex(0.25, -0.5)), "0.25-0.5i");
  EXPECT_EQ(format_complex(Complex(0.0, -0.0)), "0-0i");
  EXPECT_EQ(format_complex(Complex(-1e-300, 2e10)), "-1e-300+2e+10i");
}

TEST(ParseComplex, InvertsFormatBitExactly) {
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Complex z(rng.normal() * std::pow(10.0, rng.uniform() * 40 - 20), rng.normal());
    const Complex back = parse_complex(format_complex(z));
    EXPECT_TRUE(same_bits(z.real(), back.real()) && same_bits(z.imag(), back.imag())) << format_complex(z);
  }
  const Complex nz = parse_complex(format_complex(Complex(-0.0, -0.0)));
  EXPECT_TRUE(std::signbit(nz.real()));
  EXPECT_TRUE(std::signbit(nz.imag()));
}

TEST(ParseComplex, AcceptsBareRealAndExponents) {
  EXPECT_EQ(parse_complex("0.5"), Complex(0.5, 0));
  EXPECT_EQ(parse_complex("1e-3-2E+2i"), Complex(1e-3, -200));
  EXPECT_EQ(parse_complex("+1+1i"), Complex(1, 1));
}

TEST(ParseComplex, RejectsGarbage) {
  for (const char* bad : {"", "i", "1+i", "1+2", "1+2j", "abc", "1 +2i", "1+2i "}) {
    EXPECT_THROW(parse_complex(bad), ParseError) << bad;
  }
}

TEST(ParseDouble, WholeStringOnly) {
  EXPECT_EQ(parse_double("+2.5"), 2.5);
  EXPECT_THROW(parse_double("2.5x"), ParseError);
  EXPECT_THROW(parse_double(""), ParseError);
}

}  // namespace
}  // namespace qfid
