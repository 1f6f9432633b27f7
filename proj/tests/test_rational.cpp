#include "nilform/random.hpp"
#include "nilform/rational.hpp"

#include <gtest/gtest.h>

using nilform::Rational;

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
    EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
    EXPECT_EQ(Rational(8, 4).to_string(), "2");
    EXPECT_TRUE(Rational(0, 5).is_zero());
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "7", "-7", "1/2", "-22/7", "123456789012345678901234567891/7"})
        EXPECT_EQ(Rational::parse(s).to_string(), s);
    EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
    for (const char* bad : {"", "1/", "/2", "1/-2", "a", "1.5", "1/0"})
        EXPECT_ANY_THROW(Rational::parse(bad)) << bad;
}

TEST(Rational, FieldAxiomsOnRandomSamples) {
    nilform::Rng rng(11);
    for (int t = 0; t < 500; ++t) {
        const Rational a = rng.rational(), b = rng.rational(), c = rng.nonzero_rational();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a / c) * c, a);
        EXPECT_EQ(a - a, Rational(0));
        EXPECT_EQ(-(-a), a);
    }
}

TEST(Rational, OrderingAndPow) {
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
    EXPECT_GT(Rational(2), Rational(3, 2));
    EXPECT_EQ(nilform::pow(Rational(-2, 3), 3), Rational(-8, 27));
    EXPECT_EQ(nilform::pow(Rational(5), 0), Rational(1));
}

TEST(Rational, DivisionByZeroThrows) {
    Rational a(1);
    EXPECT_ANY_THROW(a /= Rational(0));
}

TEST(Rng, DeterministicAndBounded) {
    nilform::Rng a(5), b(5);
    for (int i = 0; i < 200; ++i) {
        const auto x = a.uniform(-3, 3);
        EXPECT_EQ(x, b.uniform(-3, 3));
        EXPECT_GE(x, -3);
        EXPECT_LE(x, 3);
    }
}
