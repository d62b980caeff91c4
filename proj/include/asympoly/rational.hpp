#ifndef ASYMPOLY_RATIONAL_HPP
#define ASYMPOLY_RATIONAL_HPP

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace asympoly {

using BigInt = boost::multiprecision::cpp_int;

/// Raised for x/0 on rationals and for division by the zero polynomial.
class DivisionByZero : public std::domain_error {
public:
	DivisionByZero() : std::domain_error("division by zero") {}
};

/// Exact fraction in canonical form: den > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
	Rational() : m_num(0), m_den(1) {}

	Rational(long long v) : m_num(v), m_den(1) {}  // NOLINT: implicit by intent

	Rational(BigInt v) : m_num(std::move(v)), m_den(1) {}  // NOLINT

	Rational(BigInt num, BigInt den) : m_num(std::move(num)), m_den(std::move(den)) {
		if (m_den == 0)
			throw DivisionByZero{};
		normalize();
	}

	/// Parses "p", "-p", "p/q" or a decimal such as "-0.125". Throws
	/// std::invalid_argument on anything else.
	static Rational from_string(std::string_view text);

	const BigInt& num() const { return m_num; }
	const BigInt& den() const { return m_den; }

	bool is_zero() const { return m_num == 0; }
	bool is_integer() const { return m_den == 1; }
	int sign() const { return m_num.sign(); }

	Rational operator-() const {
		Rational r;
		r.m_num = -m_num;
		r.m_den = m_den;
		return r;
	}

	Rational& operator+=(const Rational& o) {
		if (m_den == o.m_den) {
			m_num += o.m_num;
		} else {
			m_num = m_num * o.m_den + o.m_num * m_den;
			m_den *= o.m_den;
		}
		normalize();
		return *this;
	}

	Rational& operator-=(const Rational& o) {
		if (m_den == o.m_den) {
			m_num -= o.m_num;
		} else {
			m_num = m_num * o.m_den - o.m_num * m_den;
			m_den *= o.m_den;
		}
		normalize();
		return *this;
	}

	Rational& operator*=(const Rational& o) {
		if (is_zero() || o.is_zero()) {
			*this = Rational{};
			return *this;
		}
		// cross-reduce first so the products stay small
		BigInt g1 = gcd(m_num, o.m_den);
		BigInt g2 = gcd(o.m_num, m_den);
		m_num = (m_num / g1) * (o.m_num / g2);
		m_den = (m_den / g2) * (o.m_den / g1);
		check_invariants();
		return *this;
	}

	Rational& operator/=(const Rational& o) {
		if (o.is_zero())
			throw DivisionByZero{};
		return *this *= o.reciprocal();
	}

	Rational reciprocal() const {
		if (is_zero())
			throw DivisionByZero{};
		Rational r;
		r.m_num = m_den;
		r.m_den = m_num;
		if (r.m_den < 0) {
			r.m_num = -r.m_num;
			r.m_den = -r.m_den;
		}
		return r;
	}

	Rational pow(unsigned exponent) const {
		Rational r;
		r.m_num = boost::multiprecision::pow(m_num, exponent);
		r.m_den = boost::multiprecision::pow(m_den, exponent);
		return r;
	}

	friend Rational operator+(Rational a, const Rational& b) { return a += b; }
	friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

	// canonical form makes member-wise equality exact equality
	friend bool operator==(const Rational& a, const Rational& b) {
		return a.m_num == b.m_num && a.m_den == b.m_den;
	}

	friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
		BigInt lhs = a.m_num * b.m_den;
		BigInt rhs = b.m_num * a.m_den;
		if (lhs < rhs)
			return std::strong_ordering::less;
		if (lhs > rhs)
			return std::strong_ordering::greater;
		return std::strong_ordering::equal;
	}

	Rational abs() const { return sign() < 0 ? -*this : *this; }

	/// Larger of the numerator and denominator bit lengths.
	std::size_t bit_length() const {
		auto bits = [](const BigInt& v) -> std::size_t {
			if (v == 0)
				return 0;
			return boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
		};
		if (is_zero())
			return 0;
		return std::max(bits(m_num), bits(m_den));
	}

	/// "p" for integers, "p/q" otherwise.
	std::string to_string() const {
		if (is_integer())
			return m_num.str();
		return m_num.str() + "/" + m_den.str();
	}

	friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
		return os << r.to_string();
	}

private:
	static BigInt gcd(const BigInt& a, const BigInt& b) {
		return boost::multiprecision::gcd(a, b);
	}

	void normalize() {
		if (m_den < 0) {
			m_num = -m_num;
			m_den = -m_den;
		}
		if (m_num == 0) {
			m_den = 1;
			return;
		}
		BigInt g = gcd(m_num, m_den);
		if (g != 1) {
			m_num /= g;
			m_den /= g;
		}
		check_invariants();
	}

	void check_invariants() const {
		assert(m_den > 0);
		assert(m_num != 0 || m_den == 1);
		assert(gcd(m_num, m_den) == 1);
	}

	BigInt m_num;
	BigInt m_den;
};

namespace detail {

inline bool all_digits(std::string_view s) {
	if (s.empty())
		return false;
	for (char c : s)
		if (c < '0' || c > '9')
			return false;
	return true;
}

/// Decimal digits to BigInt. Leading zeros are stripped because the string
/// constructor of cpp_int reads them as an octal prefix.
inline BigInt decimal(std::string_view digits) {
	auto first = digits.find_first_not_of('0');
	if (first == std::string_view::npos)
		return BigInt(0);
	return BigInt(std::string(digits.substr(first)));
}

}  // namespace detail

inline Rational Rational::from_string(std::string_view text) {
	std::string_view body = text;
	bool negative = false;
	if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
		negative = body.front() == '-';
		body.remove_prefix(1);
	}
	auto bad = [&] { return std::invalid_argument("not a rational literal: '" + std::string(text) + "'"); };

	Rational value;
	if (auto slash = body.find('/'); slash != std::string_view::npos) {
		auto p = body.substr(0, slash);
		auto q = body.substr(slash + 1);
		if (!detail::all_digits(p) || !detail::all_digits(q))
			throw bad();
		value = Rational(detail::decimal(p), detail::decimal(q));
	} else if (auto dot = body.find('.'); dot != std::string_view::npos) {
		auto whole = body.substr(0, dot);
		auto frac = body.substr(dot + 1);
		if (!detail::all_digits(whole) || !detail::all_digits(frac))
			throw bad();
		BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
		value = Rational(detail::decimal(std::string(whole) + std::string(frac)), scale);
	} else {
		if (!detail::all_digits(body))
			throw bad();
		value = Rational(detail::decimal(body));
	}
	return negative ? -value : value;
}

}  // namespace asympoly

#endif  // ASYMPOLY_RATIONAL_HPP
