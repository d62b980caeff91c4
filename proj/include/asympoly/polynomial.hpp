#ifndef ASYMPOLY_POLYNOMIAL_HPP
#define ASYMPOLY_POLYNOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace asympoly {

/// Polynomial degree. The zero polynomial has degree negative infinity,
/// which compares below every finite degree.
class Degree {
public:
	constexpr Degree() = default;
	constexpr explicit Degree(std::int64_t d) : m_value(d) {}

	static constexpr Degree negative_infinity() { return Degree{}; }

	constexpr bool is_finite() const { return m_value.has_value(); }
	constexpr std::int64_t value() const { return m_value.value(); }

	friend constexpr bool operator==(const Degree&, const Degree&) = default;

	friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
		if (!a.is_finite() || !b.is_finite())
			return a.is_finite() <=> b.is_finite();
		return *a.m_value <=> *b.m_value;
	}

	friend constexpr bool operator==(const Degree& a, std::int64_t b) { return a == Degree{b}; }
	friend constexpr std::strong_ordering operator<=>(const Degree& a, std::int64_t b) {
		return a <=> Degree{b};
	}

	std::string to_string() const { return is_finite() ? std::to_string(*m_value) : "-inf"; }

private:
	std::optional<std::int64_t> m_value;
};

/// Dense univariate polynomial over the rationals; coefficient i belongs to x^i.
/// Trailing zeros are never stored, so the zero polynomial is the empty sequence.
class Polynomial {
public:
	Polynomial() = default;

	explicit Polynomial(std::vector<Rational> coeffs) : m_coeffs(std::move(coeffs)) { trim(); }

	Polynomial(std::initializer_list<Rational> coeffs) : m_coeffs(coeffs) { trim(); }

	static Polynomial constant(Rational c) { return Polynomial(std::vector<Rational>{std::move(c)}); }

	/// c * x^d
	static Polynomial monomial(Rational c, std::size_t d) {
		std::vector<Rational> v(d + 1);
		v[d] = std::move(c);
		return Polynomial(std::move(v));
	}

	bool is_zero() const { return m_coeffs.empty(); }

	Degree degree() const {
		if (m_coeffs.empty())
			return Degree::negative_infinity();
		return Degree{static_cast<std::int64_t>(m_coeffs.size() - 1)};
	}

	/// Coefficient of x^d; zero for any d outside the stored range, negative d included.
	Rational coeff(std::int64_t d) const {
		if (d < 0 || d >= static_cast<std::int64_t>(m_coeffs.size()))
			return Rational{};
		return m_coeffs[static_cast<std::size_t>(d)];
	}

	/// Leading coefficient; zero for the zero polynomial.
	Rational leading() const { return m_coeffs.empty() ? Rational{} : m_coeffs.back(); }

	std::span<const Rational> coeffs() const { return m_coeffs; }

	Polynomial operator-() const {
		Polynomial r = *this;
		for (auto& c : r.m_coeffs)
			c = -c;
		return r;
	}

	Polynomial& operator+=(const Polynomial& o) {
		if (o.m_coeffs.size() > m_coeffs.size())
			m_coeffs.resize(o.m_coeffs.size());
		for (std::size_t i = 0; i < o.m_coeffs.size(); ++i)
			m_coeffs[i] += o.m_coeffs[i];
		trim();
		return *this;
	}

	Polynomial& operator-=(const Polynomial& o) {
		if (o.m_coeffs.size() > m_coeffs.size())
			m_coeffs.resize(o.m_coeffs.size());
		for (std::size_t i = 0; i < o.m_coeffs.size(); ++i)
			m_coeffs[i] -= o.m_coeffs[i];
		trim();
		return *this;
	}

	Polynomial& operator*=(const Rational& s) {
		if (s.is_zero()) {
			m_coeffs.clear();
			return *this;
		}
		for (auto& c : m_coeffs)
			c *= s;
		return *this;
	}

	friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
	friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
	friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
	friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

	friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
		if (a.is_zero() || b.is_zero())
			return {};
		std::vector<Rational> out(a.m_coeffs.size() + b.m_coeffs.size() - 1);
		for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
			if (a.m_coeffs[i].is_zero())
				continue;
			for (std::size_t j = 0; j < b.m_coeffs.size(); ++j)
				out[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
		}
		return Polynomial(std::move(out));
	}

	Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

	friend bool operator==(const Polynomial&, const Polynomial&) = default;

	/// Horner evaluation.
	Rational operator()(const Rational& x) const {
		Rational acc;
		for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
			acc *= x;
			acc += *it;
		}
		return acc;
	}

private:
	void trim() {
		while (!m_coeffs.empty() && m_coeffs.back().is_zero())
			m_coeffs.pop_back();
	}

	std::vector<Rational> m_coeffs;
};

struct DivModResult {
	Polynomial quotient;
	Polynomial remainder;
};

/// Euclidean division: a = quotient * b + remainder with deg(remainder) < deg(b).
inline DivModResult divmod(const Polynomial& a, const Polynomial& b) {
	if (b.is_zero())
		throw DivisionByZero{};
	if (a.degree() < b.degree())
		return {Polynomial{}, a};

	const auto db = static_cast<std::size_t>(b.degree().value());
	const auto da = static_cast<std::size_t>(a.degree().value());
	const Rational lead_inv = b.leading().reciprocal();

	std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
	std::vector<Rational> quot(da - db + 1);
	for (std::size_t shift = da - db + 1; shift-- > 0;) {
		const Rational q = rem[shift + db] * lead_inv;
		quot[shift] = q;
		if (q.is_zero())
			continue;
		for (std::size_t i = 0; i <= db; ++i)
			rem[shift + i] -= q * b.coeffs()[i];
	}
	rem.resize(db);
	return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

}  // namespace asympoly

#endif  // ASYMPOLY_POLYNOMIAL_HPP
