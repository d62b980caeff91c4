#include <random>

#include <gtest/gtest.h>

#include <asympoly/polynomial.hpp>

#include "test_support.hpp"

using namespace asympoly;
using asympoly::test_support::ints;
using asympoly::test_support::q;

TEST(Degree, NegativeInfinityIsBelowEverything) {
	const Degree inf = Degree::negative_infinity();
	EXPECT_FALSE(inf.is_finite());
	EXPECT_LT(inf, Degree{0});
	EXPECT_LT(inf, 0);
	EXPECT_EQ(inf, Degree::negative_infinity());
	EXPECT_GT(Degree{3}, Degree{1});
	EXPECT_EQ(inf.to_string(), "-inf");
}

TEST(Polynomial, FromCoeffsKeepsDegree) {
	const Polynomial p = ints({7, 0, 0, 8});
	EXPECT_EQ(p.degree(), 3);
	EXPECT_EQ(p.coeff(3), Rational{8});
	EXPECT_EQ(p.coeff(0), Rational{7});

	const Polynomial lin = ints({5, 3});
	EXPECT_EQ(lin.degree(), 1);
}

TEST(Polynomial, AllZeroInputIsZeroPolynomial) {
	const Polynomial z = ints({0, 0, 0});
	EXPECT_TRUE(z.is_zero());
	EXPECT_FALSE(z.degree().is_finite());
	EXPECT_EQ(z, Polynomial{});
	EXPECT_TRUE(z.coeffs().empty());
}

TEST(Polynomial, CoeffOutsideRangeIsZero) {
	const Polynomial p = ints({1, 2});
	EXPECT_EQ(p.coeff(-1), Rational{});
	EXPECT_EQ(p.coeff(5), Rational{});
}

TEST(Polynomial, AddAndSubtractRenormalize) {
	EXPECT_EQ(ints({-4, 1}) + ints({0, -1}), ints({-4}));
	EXPECT_EQ((ints({-4, 1}) + ints({0, -1})).degree(), 0);
	EXPECT_EQ(ints({128, 32, 8}) + Polynomial{}, ints({128, 32, 8}));
	EXPECT_EQ(ints({0, 0, 1}) - ints({-1, 0, 1}), ints({1}));
	EXPECT_TRUE((ints({3, 2, 1}) - ints({3, 2, 1})).is_zero());
}

TEST(Polynomial, Multiply) {
	// (8x^2+32x+128)(x-4) = 8x^3 - 512: the cross terms cancel pairwise
	const Polynomial prod = ints({128, 32, 8}) * ints({-4, 1});
	EXPECT_EQ(prod, ints({-512, 0, 0, 8}));
	// and division undoes it
	const auto [quot, rem] = divmod(prod, ints({-4, 1}));
	EXPECT_EQ(quot, ints({128, 32, 8}));
	EXPECT_TRUE(rem.is_zero());

	EXPECT_TRUE((ints({1, 2, 3}) * Polynomial{}).is_zero());
	EXPECT_EQ(ints({1, 1}) * ints({-1, 1}), ints({-1, 0, 1}));
}

TEST(Polynomial, DegreeOfProductIsSum) {
	std::mt19937 rng(3);
	for (int i = 0; i < 200; ++i) {
		const int da = static_cast<int>(rng() % 8), db = static_cast<int>(rng() % 8);
		const Polynomial a = test_support::random_poly(rng, da, 20);
		const Polynomial b = test_support::random_poly(rng, db, 20);
		EXPECT_EQ((a * b).degree(), da + db);
	}
}

TEST(Polynomial, Evaluate) {
	EXPECT_EQ(ints({128, 32, 8})(Rational{0}), Rational{128});
	EXPECT_EQ(ints({-4, 1})(Rational{4}), Rational{});
	// sum of coefficients of 5x^3+13x^2+3x+9
	EXPECT_EQ(ints({9, 3, 13, 5})(Rational{1}), Rational{30});
	EXPECT_EQ(Polynomial{}(q(3, 7)), Rational{});
}

TEST(Polynomial, HornerAgreesWithTermByTermSum) {
	std::mt19937 rng(11);
	for (int i = 0; i < 300; ++i) {
		const Polynomial p = test_support::random_rational_poly(rng, 10, 30);
		const Rational x = q(static_cast<long long>(rng() % 41) - 20, static_cast<long long>(rng() % 9) + 1);
		Rational direct;
		for (std::size_t d = 0; d < p.coeffs().size(); ++d)
			direct += p.coeffs()[d] * x.pow(static_cast<unsigned>(d));
		EXPECT_EQ(p(x), direct);
	}
}

TEST(DivMod, EuclideanExample) {
	const auto [quot, rem] = divmod(ints({7, 0, 0, 8}), ints({-4, 1}));
	EXPECT_EQ(quot, ints({128, 32, 8}));
	EXPECT_EQ(rem, ints({519}));
}

TEST(DivMod, ObliqueExample) {
	const Polynomial a = ints({9, 3, 13, 5});
	const Polynomial b = ints({7, 5, 4});
	const auto [quot, rem] = divmod(a, b);
	EXPECT_EQ(quot, Polynomial({q(27, 16), q(5, 4)}));
	EXPECT_LE(rem.degree(), 1);
	EXPECT_EQ(quot * b + rem, a);
}

TEST(DivMod, SelfDivision) {
	const Polynomial p = Polynomial({q(1, 3), Rational{0}, q(-7, 2)});
	const auto [quot, rem] = divmod(p, p);
	EXPECT_EQ(quot, ints({1}));
	EXPECT_TRUE(rem.is_zero());
	EXPECT_FALSE(rem.degree().is_finite());
}

TEST(DivMod, LowerDegreeNumerator) {
	const auto [quot, rem] = divmod(ints({1, 1}), ints({1, 0, 1}));
	EXPECT_TRUE(quot.is_zero());
	EXPECT_EQ(rem, ints({1, 1}));
}

TEST(DivMod, ZeroDivisorThrows) { EXPECT_THROW(divmod(ints({1, 2}), Polynomial{}), DivisionByZero); }

TEST(DivMod, ReconstructionProperty) {
	std::mt19937 rng(2024);
	std::uniform_int_distribution<int> deg(0, 12);
	for (int i = 0; i < 500; ++i) {
		const Polynomial a = test_support::random_poly(rng, deg(rng), 99);
		const Polynomial b = test_support::random_poly(rng, deg(rng), 99);
		const auto [quot, rem] = divmod(a, b);
		EXPECT_EQ(quot * b + rem, a);
		EXPECT_LT(rem.degree(), b.degree());
		// quotient matches an independent schoolbook division
		EXPECT_EQ(quot, Polynomial(test_support::naive_quotient(a, b)));
	}
}
