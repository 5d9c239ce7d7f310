#include <gtest/gtest.h>

#include <climits>

#include "bott/integer.hpp"

using bott::Integer;

TEST(Integer, SmallArithmetic) {
    EXPECT_EQ(Integer(7) + Integer(-9), Integer(-2));
    EXPECT_EQ(Integer(6) * Integer(-7), Integer(-42));
    EXPECT_EQ(Integer(-7) / Integer(2), Integer(-3));
    EXPECT_EQ(Integer(-7) % Integer(2), Integer(-1));
    EXPECT_TRUE(Integer(0).is_zero());
    EXPECT_TRUE(Integer(1).is_one());
    EXPECT_EQ(Integer(-5).sign(), -1);
}

TEST(Integer, PromotesOnOverflow) {
    const Integer big = Integer(INT64_MAX) + Integer(1);
    EXPECT_FALSE(big.is_small());
    EXPECT_EQ(big.str(), "9223372036854775808");
    EXPECT_EQ(big - Integer(1), Integer(INT64_MAX));
    EXPECT_TRUE((big - Integer(1)).is_small());

    const Integer sq = Integer(INT64_MAX) * Integer(INT64_MAX);
    EXPECT_EQ(sq.str(), "85070591730234615847396907784232501249");
    EXPECT_EQ(sq / Integer(INT64_MAX), Integer(INT64_MAX));
    EXPECT_EQ(-Integer(INT64_MIN), big);
}

TEST(Integer, ParseAndPrint) {
    EXPECT_EQ(Integer::parse("-123"), Integer(-123));
    EXPECT_EQ(Integer::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
    EXPECT_THROW(Integer::parse("12a"), std::invalid_argument);
    EXPECT_THROW(Integer::parse(""), std::invalid_argument);
}

TEST(Integer, NumberTheory) {
    EXPECT_EQ(bott::gcd(Integer(12), Integer(-18)), Integer(6));
    EXPECT_EQ(bott::gcd(Integer(0), Integer(0)), Integer(0));
    EXPECT_EQ(bott::floor_mod(Integer(-7), Integer(4)), Integer(1));
    EXPECT_TRUE(bott::divides(Integer(3), Integer(-12)));
    EXPECT_FALSE(bott::divides(Integer(2), Integer(1)));
    EXPECT_EQ(bott::pow(Integer(2), 100).str(), "1267650600228229401496703205376");
    EXPECT_EQ(bott::mod_inverse(Integer(3), Integer(7)), Integer(5));
    EXPECT_FALSE(bott::mod_inverse(Integer(2), Integer(4)).has_value());
    EXPECT_EQ(bott::abs(Integer(-3)), Integer(3));
}

TEST(Integer, OrderingAcrossRepresentations) {
    const Integer big = bott::pow(Integer(10), 30);
    EXPECT_LT(Integer(5), big);
    EXPECT_LT(-big, Integer(INT64_MIN));
    EXPECT_TRUE(big.is_odd() == false);
    EXPECT_TRUE((big + Integer(1)).is_odd());
}
