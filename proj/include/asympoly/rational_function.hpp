#ifndef ASYMPOLY_RATIONAL_FUNCTION_HPP
#define ASYMPOLY_RATIONAL_FUNCTION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "polynomial.hpp"

namespace asympoly {

/// A well-formed input that cannot be a rational function (zero denominator).
class SemanticError : public std::domain_error {
public:
	using std::domain_error::domain_error;
};

/// numerator(x) / denominator(x). The denominator is never the zero polynomial.
class RationalFunction {
public:
	RationalFunction(Polynomial numerator, Polynomial denominator)
		: m_num(std::move(numerator)), m_den(std::move(denominator)) {
		if (m_den.is_zero())
			throw SemanticError("denominator is zero");
	}

	const Polynomial& numerator() const { return m_num; }
	const Polynomial& denominator() const { return m_den; }

	/// n, the numerator degree (negative infinity for a zero numerator).
	Degree n() const { return m_num.degree(); }

	/// k = deg(numerator) - deg(denominator); empty when the numerator is zero.
	std::optional<std::int64_t> k() const {
		if (m_num.is_zero())
			return std::nullopt;
		return m_num.degree().value() - m_den.degree().value();
	}

	/// True when there is no polynomial part: deg(numerator) < deg(denominator).
	bool is_proper() const { return m_num.degree() < m_den.degree(); }

	/// a_r, zero outside [0, n].
	Rational a(std::int64_t r) const { return m_num.coeff(r); }
	/// b_i, zero outside [0, n - k].
	Rational b(std::int64_t i) const { return m_den.coeff(i); }

	friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
	Polynomial m_num;
	Polynomial m_den;
};

}  // namespace asympoly

#endif  // ASYMPOLY_RATIONAL_FUNCTION_HPP
