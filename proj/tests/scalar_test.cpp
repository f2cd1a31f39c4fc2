#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>

#include "ufp/scalar.hpp"

namespace {

using ufp::NumericMode;
using ufp::Scalar;
using boost::multiprecision::cpp_rational;

constexpr auto kExact = NumericMode::ExactRational;
constexpr auto kFloat = NumericMode::Float;

TEST(ParseRational, AcceptsFractionsIntegersAndDecimals) {
  EXPECT_EQ(ufp::parse_rational("1/2"), mpq_class(1, 2));
  EXPECT_EQ(ufp::parse_rational("-6/4"), mpq_class(-3, 2));
  EXPECT_EQ(ufp::parse_rational("7"), mpq_class(7));
  EXPECT_EQ(ufp::parse_rational("1e-6"), mpq_class(1, 1000000));
  EXPECT_EQ(ufp::parse_rational("0.125"), mpq_class(1, 8));
  EXPECT_EQ(ufp::parse_rational("-.5"), mpq_class(-1, 2));
  EXPECT_EQ(ufp::parse_rational("2.5E+2"), mpq_class(250));
  EXPECT_EQ(ufp::parse_rational("+3."), mpq_class(3));
}

TEST(ParseRational, RejectsMalformedLiterals) {
  for (const char* bad : {"", "-", "1/0", "1/", "/2", "1.2.3", "1e", "abc", "1/2/3", "0x10", "1 ", "e5", "."}) {
    EXPECT_THROW(ufp::parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(Scalar, DecimalLiteralsRoundToNearestInFloatMode) {
  for (const char* text : {"1e-6", "0.1", "2.675", "1e-320", "123456789.987654321", "1/3", "-2/7"}) {
    const double expected = std::string(text).find('/') == std::string::npos
                                ? std::strtod(text, nullptr)
                                : (text[0] == '-' ? -2.0 / 7.0 : 1.0 / 3.0);
    EXPECT_EQ(Scalar::parse(text, kFloat).to_double(), expected) << text;
  }
}

TEST(Scalar, ToStringUsesCanonicalFractionsAndShortestDecimals) {
  EXPECT_EQ(Scalar::parse("6/4", kExact).to_string(), "3/2");
  EXPECT_EQ(Scalar::integer(1, kExact).to_string(), "1");
  EXPECT_EQ(Scalar::integer(-5, kExact).to_string(), "-5");
  EXPECT_EQ(Scalar::real(0.1).to_string(), "0.1");
  EXPECT_EQ(Scalar::real(1.0).to_string(), "1");
  EXPECT_EQ(Scalar::real(std::numeric_limits<double>::infinity()).to_string(), "inf");
  EXPECT_EQ(Scalar::real(-std::numeric_limits<double>::infinity()).to_string(), "-inf");
  EXPECT_EQ(Scalar::real(std::nan("")).to_string(), "nan");
}

TEST(Scalar, MixedModesAreRejected) {
  const Scalar a = Scalar::integer(1, kExact);
  const Scalar b = Scalar::integer(1, kFloat);
  EXPECT_THROW(a + b, std::logic_error);
  EXPECT_THROW((void)(a < b), std::logic_error);
  EXPECT_THROW((void)b.rational(), std::logic_error);
}

TEST(Scalar, ExactDivisionByZeroThrows) {
  EXPECT_THROW(Scalar::integer(1, kExact) / Scalar::integer(0, kExact), std::domain_error);
  EXPECT_TRUE(std::isinf((Scalar::integer(1, kFloat) / Scalar::integer(0, kFloat)).to_double()));
}

TEST(Scalar, FloorSignAbs) {
  EXPECT_EQ(Scalar::parse("-7/2", kExact).floor(), -4);
  EXPECT_EQ(Scalar::parse("7/2", kExact).floor(), 3);
  EXPECT_EQ(Scalar::real(-3.5).floor(), Scalar::real(-4.0));
  EXPECT_EQ(Scalar::parse("-7/2", kExact).abs().to_string(), "7/2");
  EXPECT_EQ(Scalar::parse("-7/2", kExact).sign(), -1);
  EXPECT_EQ(Scalar::integer(0, kExact).sign(), 0);
}

TEST(Scalar, ModeConversionIsExactForDoubles) {
  const Scalar tenth = Scalar::real(0.1);
  const Scalar exact = tenth.in_mode(kExact);
  EXPECT_EQ(exact.rational(), mpq_class(0.1));
  EXPECT_EQ(exact.in_mode(kFloat), tenth);
  EXPECT_THROW(Scalar::real(std::numeric_limits<double>::infinity()).to_rational(), std::domain_error);
}

// Exact-mode arithmetic and ordering agree with an independent rational type.
TEST(ScalarProperty, ExactArithmeticMatchesBoostRationals) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 97);
  for (int trial = 0; trial < 2000; ++trial) {
    const long an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
    const Scalar a = Scalar::exact(mpq_class(an, ad));
    const Scalar b = Scalar::exact(mpq_class(bn, bd));
    const cpp_rational ra(an, ad);
    const cpp_rational rb(bn, bd);
    const auto as_boost = [](const Scalar& s) { return cpp_rational(s.to_string()); };
    ASSERT_EQ(as_boost(a + b), ra + rb);
    ASSERT_EQ(as_boost(a - b), ra - rb);
    ASSERT_EQ(as_boost(a * b), ra * rb);
    if (bn != 0) ASSERT_EQ(as_boost(a / b), ra / rb);
    ASSERT_EQ(a < b, ra < rb);
    ASSERT_EQ(a == b, ra == rb);
    ASSERT_EQ(a <= b, ra <= rb);
  }
}

}  // namespace
