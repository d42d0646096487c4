#include "polyalg/exact_linalg.hpp"

#include <gtest/gtest.h>

#include <climits>
#include <random>
#include <sstream>

using polyalg::Rational;

TEST(Rational, ReducesOnConstruction) {
    EXPECT_EQ(Rational(6, 4).str(), "3/2");
    EXPECT_EQ(Rational(-6, -4).str(), "3/2");
    EXPECT_EQ(Rational(6, -4).str(), "-3/2");
    EXPECT_EQ(Rational(0, 5).str(), "0");
    EXPECT_EQ(Rational(10, 5), Rational(2));
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
    EXPECT_EQ(Rational::parse("-3/4"), Rational(-3, 4));
    EXPECT_EQ(Rational::parse("+7"), Rational(7));
    EXPECT_EQ(Rational::parse("4/8").str(), "1/2");
    EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
    EXPECT_EQ(Rational::parse("-2/123456789012345678901234567890").str(), "-1/61728394506172839450617283945");
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "a", "1/-2", " 1", "1 "}) {
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
    }
    std::ostringstream os;
    os << Rational(-5, 3);
    EXPECT_EQ(os.str(), "-5/3");
}

TEST(Rational, Arithmetic) {
    const Rational a(1, 2), b(1, 3);
    EXPECT_EQ(a + b, Rational(5, 6));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 6));
    EXPECT_EQ(a / b, Rational(3, 2));
    EXPECT_EQ(-a, Rational(-1, 2));
    EXPECT_THROW(a / Rational(0), std::domain_error);
    Rational c = a;
    c += b;
    c *= Rational(6);
    EXPECT_EQ(c, Rational(5));
}

TEST(Rational, OverflowSpillsToBigAndBack) {
    const Rational big(LLONG_MAX);
    const Rational sum = big + big;
    EXPECT_EQ(sum.str(), "18446744073709551614");
    EXPECT_EQ(sum - big, big);
    const Rational sq = big * big;
    EXPECT_EQ(sq / big, big);
    EXPECT_EQ(Rational(LLONG_MIN).str(), "-9223372036854775808");
    EXPECT_EQ(-Rational(LLONG_MIN), Rational(LLONG_MAX) + Rational(1));
    const Rational tiny(1, LLONG_MAX);
    EXPECT_EQ((tiny * tiny) * big * big, Rational(1));
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_LT(Rational(LLONG_MAX) * Rational(3), Rational(LLONG_MAX) * Rational(4));
    EXPECT_EQ(polyalg::abs(Rational(-7, 2)), Rational(7, 2));
    EXPECT_EQ(Rational(-7, 2).sign(), -1);
    EXPECT_EQ(Rational(0).sign(), 0);
    EXPECT_TRUE(Rational(4, 2).is_integer());
    EXPECT_FALSE(Rational(3, 2).is_integer());
}

TEST(Rational, FieldAxiomsOnRandomValues) {
    std::mt19937_64 rng(7);
    auto draw = [&]() {
        // Mix small values with values near the inline limit.
        const long long scale = (rng() % 3 == 0) ? (1LL << 40) : 7;
        const long long num = static_cast<long long>(rng() % 2001) - 1000;
        const long long den = static_cast<long long>(rng() % 999) + 1;
        return Rational(num * scale, den) * Rational(static_cast<long long>(rng() % 5) + 1, 3);
    };
    for (int t = 0; t < 2000; ++t) {
        const Rational a = draw(), b = draw(), c = draw();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!a.is_zero()) EXPECT_EQ(a * (Rational(1) / a), Rational(1));
        EXPECT_EQ(Rational::parse(a.str()), a);
    }
}

TEST(Rational, EigenMatrices) {
    polyalg::Matrix<Rational> m(2, 2);
    m << Rational(1, 2), Rational(1), Rational(0), Rational(2);
    const polyalg::Matrix<Rational> sq = m * m;
    EXPECT_EQ(sq(0, 0), Rational(1, 4));
    EXPECT_EQ(sq(0, 1), Rational(5, 2));
    EXPECT_EQ(sq(1, 1), Rational(4));
}
