#include <random>

#include <gtest/gtest.h>

#include <asympoly/rational.hpp>

#include "test_support.hpp"

using namespace asympoly;
using asympoly::test_support::q;

namespace {

void expect_canonical(const Rational& r) {
	EXPECT_GT(r.den(), 0);
	EXPECT_EQ(boost::multiprecision::gcd(r.num(), r.den()), 1);
	if (r.is_zero()) {
		EXPECT_EQ(r.den(), 1);
	}
}

}  // namespace

TEST(Rational, AlreadyCanonical) {
	const Rational r = q(27, 16);
	EXPECT_EQ(r.num(), 27);
	EXPECT_EQ(r.den(), 16);
}

TEST(Rational, SignAndGcdNormalization) {
	const Rational r = q(-4, -8);
	EXPECT_EQ(r.num(), 1);
	EXPECT_EQ(r.den(), 2);

	const Rational s = q(6, -4);
	EXPECT_EQ(s.num(), -3);
	EXPECT_EQ(s.den(), 2);
}

TEST(Rational, UniqueZero) {
	const Rational r = q(0, 7);
	EXPECT_EQ(r.num(), 0);
	EXPECT_EQ(r.den(), 1);
	EXPECT_EQ(r, Rational{});
	EXPECT_EQ(q(0, -3), q(0, 5));
}

TEST(Rational, ZeroDenominatorThrows) {
	EXPECT_THROW(q(1, 0), DivisionByZero);
	EXPECT_THROW(Rational{1} / Rational{}, DivisionByZero);
	EXPECT_THROW(Rational{}.reciprocal(), DivisionByZero);
	try {
		q(3, 0);
	} catch (const DivisionByZero& e) {
		EXPECT_STREQ(e.what(), "division by zero");
	}
}

TEST(Rational, Arithmetic) {
	EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
	EXPECT_EQ(q(1, 2) - q(1, 2), Rational{});
	EXPECT_EQ(q(-5, 4) * q(16, 5), Rational{-4});
	EXPECT_EQ(q(27, 16) / q(3, 4), q(9, 4));
	EXPECT_EQ(q(-2, 3).pow(3), q(-8, 27));
	EXPECT_EQ(q(5, 7).pow(0), Rational{1});
	EXPECT_LT(q(-1, 2), q(1, 3));
	EXPECT_GT(q(7, 3), Rational{2});
}

TEST(Rational, FromString) {
	EXPECT_EQ(Rational::from_string("0.5"), q(1, 2));
	EXPECT_EQ(Rational::from_string("-0.125"), q(-1, 8));
	EXPECT_EQ(Rational::from_string("27/16"), q(27, 16));
	EXPECT_EQ(Rational::from_string("-12"), Rational{-12});
	EXPECT_EQ(Rational::from_string("123456789012345678901234567890").num().str(),
	          "123456789012345678901234567890");
	EXPECT_THROW(Rational::from_string(""), std::invalid_argument);
	EXPECT_THROW(Rational::from_string("1/"), std::invalid_argument);
	EXPECT_THROW(Rational::from_string("1.2.3"), std::invalid_argument);
	EXPECT_THROW(Rational::from_string("abc"), std::invalid_argument);
}

TEST(Rational, ToString) {
	EXPECT_EQ(q(27, 16).to_string(), "27/16");
	EXPECT_EQ(q(-519, 1).to_string(), "-519");
	EXPECT_EQ(Rational{}.to_string(), "0");
}

TEST(Rational, BitLength) {
	EXPECT_EQ(Rational{}.bit_length(), 0u);
	EXPECT_EQ(Rational{255}.bit_length(), 8u);
	EXPECT_EQ(q(1, 1024).bit_length(), 11u);
}

TEST(Rational, CanonicalFormSurvivesRandomArithmetic) {
	std::mt19937 rng(7);
	std::uniform_int_distribution<int> dist(-50, 50);
	for (int i = 0; i < 2000; ++i) {
		int d1 = dist(rng), d2 = dist(rng);
		if (d1 == 0 || d2 == 0)
			continue;
		const Rational a = q(dist(rng), d1);
		const Rational b = q(dist(rng), d2);
		expect_canonical(a + b);
		expect_canonical(a - b);
		expect_canonical(a * b);
		if (!b.is_zero()) {
			expect_canonical(a / b);
			EXPECT_EQ((a / b) * b, a);
		}
		EXPECT_EQ(a + b - b, a);
	}
}

TEST(Rational, LeadingZerosAreDecimal) {
	EXPECT_EQ(Rational::from_string("010"), Rational{10});
	EXPECT_EQ(Rational::from_string("09/012"), q(3, 4));
	EXPECT_EQ(Rational::from_string("0.09"), q(9, 100));
	EXPECT_EQ(Rational::from_string("000"), Rational{});
}
