#ifndef ASYMPOLY_ASYMPTOTE_HPP
#define ASYMPOLY_ASYMPTOTE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational_function.hpp"

namespace asympoly {

enum class Method { Determinant, Recurrence, Division };

inline std::string_view to_string(Method m) {
	switch (m) {
	case Method::Determinant: return "determinant";
	case Method::Recurrence: return "recurrence";
	case Method::Division: return "division";
	}
	return "unknown";
}

/// The (alpha+1) x (alpha+1) upper-Hessenberg coefficient matrix whose
/// determinant yields the coefficient of x^(k-alpha) in the asymptote.
///
///   row 0:        a_n       a_{n-1}     ...  a_{n-alpha}
///   row 1:        b_{n-k}   b_{n-k-1}   ...  b_{n-k-alpha}
///   row i >= 1:   column j holds b_{n-k-(j-i+1)} for j >= i-1, else 0
///
/// Coefficients with an index outside the polynomial's range are zero.
struct CoefficientMatrix {
	std::int64_t alpha = 0;
	SquareMatrix entries;

	friend bool operator==(const CoefficientMatrix&, const CoefficientMatrix&) = default;
};

/// Per-coefficient record: theta is the coefficient of x^(k-alpha),
/// theta_prime = (-1)^alpha * det_value and theta = theta_prime / b_{n-k}^(alpha+1).
struct ThetaTrace {
	std::int64_t alpha = 0;
	Rational theta;
	Rational theta_prime;
	Rational det_value;
	std::optional<CoefficientMatrix> matrix;
};

struct AsymptoteResult {
	Polynomial asymptote;
	Polynomial remainder;
	Method method = Method::Determinant;
	std::vector<ThetaTrace> traces;
	/// deg(numerator) < deg(denominator): no polynomial part, the asymptote is y = 0.
	bool proper_fraction = false;
};

struct AsymptoteOptions {
	/// Keep each coefficient matrix in the traces (Determinant method only).
	bool keep_matrices = false;
};

namespace detail {

/// Degree gap of an input whose asymptote has a polynomial part; throws otherwise.
inline std::int64_t require_gap(const RationalFunction& rf) {
	auto k = rf.k();
	if (!k || *k < 0)
		throw std::domain_error("numerator degree is below denominator degree");
	return *k;
}

inline Rational sign_power(std::int64_t alpha, Rational v) {
	return alpha % 2 == 0 ? v : -v;
}

}  // namespace detail

inline CoefficientMatrix build_matrix(const RationalFunction& rf, std::int64_t alpha) {
	const std::int64_t k = detail::require_gap(rf);
	if (alpha < 0)
		throw std::out_of_range("alpha is negative");
	if (alpha > k)
		throw std::out_of_range("alpha exceeds degree gap");

	const std::int64_t n = rf.n().value();
	const auto dim = static_cast<std::size_t>(alpha + 1);
	CoefficientMatrix out{alpha, SquareMatrix(dim)};
	for (std::size_t j = 0; j < dim; ++j)
		out.entries(0, j) = rf.a(n - static_cast<std::int64_t>(j));
	for (std::size_t i = 1; i < dim; ++i) {
		for (std::size_t j = i - 1; j < dim; ++j) {
			auto offset = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i) + 1;
			out.entries(i, j) = rf.b(n - k - offset);
		}
	}
	return out;
}

/// theta_alpha from the determinant of its coefficient matrix.
inline ThetaTrace theta_det(const RationalFunction& rf, std::int64_t alpha, bool keep_matrix = false) {
	CoefficientMatrix m = build_matrix(rf, alpha);
	const Rational lead = rf.denominator().leading();

	ThetaTrace t;
	t.alpha = alpha;
	t.det_value = det_hessenberg(m.entries);
	t.theta_prime = detail::sign_power(alpha, t.det_value);
	t.theta = t.theta_prime / lead.pow(static_cast<unsigned>(alpha + 1));
	if (keep_matrix)
		t.matrix = std::move(m);
	return t;
}

/// All theta'_0..theta'_k from the recurrence
///   theta'_0 = a_n
///   theta'_j = a_{n-j} b^j - sum_{m<j} b_{n-k-(j-m)} b^(j-1-m) theta'_m
/// where b = b_{n-k}. No determinant is evaluated.
inline std::vector<ThetaTrace> theta_recurrence_all(const RationalFunction& rf) {
	const std::int64_t k = detail::require_gap(rf);
	const std::int64_t n = rf.n().value();
	const Rational lead = rf.denominator().leading();

	// lead^0 .. lead^(k+1)
	std::vector<Rational> lead_pow(static_cast<std::size_t>(k + 2));
	lead_pow[0] = Rational{1};
	for (std::size_t p = 1; p < lead_pow.size(); ++p)
		lead_pow[p] = lead_pow[p - 1] * lead;

	std::vector<ThetaTrace> traces;
	traces.reserve(static_cast<std::size_t>(k + 1));
	for (std::int64_t j = 0; j <= k; ++j) {
		Rational tp = rf.a(n - j) * lead_pow[static_cast<std::size_t>(j)];
		for (std::int64_t m = 0; m < j; ++m) {
			const Rational b = rf.b(n - k - (j - m));
			if (b.is_zero())
				continue;
			tp -= b * lead_pow[static_cast<std::size_t>(j - 1 - m)] * traces[static_cast<std::size_t>(m)].theta_prime;
		}
		ThetaTrace t;
		t.alpha = j;
		t.det_value = detail::sign_power(j, tp);
		t.theta = tp / lead_pow[static_cast<std::size_t>(j + 1)];
		t.theta_prime = std::move(tp);
		traces.push_back(std::move(t));
	}
	return traces;
}

inline AsymptoteResult asymptote_of(const RationalFunction& rf, Method method, AsymptoteOptions opts = {}) {
	AsymptoteResult out;
	out.method = method;
	if (rf.numerator().is_zero() || rf.is_proper()) {
		out.proper_fraction = true;
		out.remainder = rf.numerator();
		return out;
	}

	if (method == Method::Division) {
		auto [q, r] = divmod(rf.numerator(), rf.denominator());
		out.asymptote = std::move(q);
		out.remainder = std::move(r);
		return out;
	}

	const std::int64_t k = *rf.k();
	if (method == Method::Determinant) {
		for (std::int64_t alpha = 0; alpha <= k; ++alpha)
			out.traces.push_back(theta_det(rf, alpha, opts.keep_matrices));
	} else {
		out.traces = theta_recurrence_all(rf);
	}

	std::vector<Rational> coeffs(static_cast<std::size_t>(k + 1));
	for (const auto& t : out.traces)
		coeffs[static_cast<std::size_t>(k - t.alpha)] = t.theta;
	out.asymptote = Polynomial(std::move(coeffs));
	out.remainder = rf.numerator() - out.asymptote * rf.denominator();
	return out;
}

/// E(x) = b^phi * a(x) - b(x) * sum_{alpha<phi} b^(phi-1-alpha) theta'_alpha x^(k-alpha),
/// with b = b_{n-k}. theta_primes must hold theta'_0..theta'_{phi-1} at least.
inline Polynomial lemma21_expression(const RationalFunction& rf, std::int64_t phi,
                                     std::span<const Rational> theta_primes) {
	const std::int64_t k = detail::require_gap(rf);
	if (phi < 1 || phi > k)
		throw std::out_of_range("phi must lie in [1, k]");
	if (theta_primes.size() < static_cast<std::size_t>(phi))
		throw std::invalid_argument("not enough theta' values");

	const Rational lead = rf.denominator().leading();
	Polynomial partial;
	for (std::int64_t alpha = 0; alpha < phi; ++alpha) {
		Rational c = lead.pow(static_cast<unsigned>(phi - 1 - alpha)) * theta_primes[static_cast<std::size_t>(alpha)];
		partial += Polynomial::monomial(std::move(c), static_cast<std::size_t>(k - alpha));
	}
	return rf.numerator() * lead.pow(static_cast<unsigned>(phi)) - rf.denominator() * partial;
}

/// theta'_0..theta'_last from the determinant definition.
inline std::vector<Rational> theta_primes_by_determinant(const RationalFunction& rf, std::int64_t last) {
	std::vector<Rational> out;
	for (std::int64_t alpha = 0; alpha <= last; ++alpha)
		out.push_back(theta_det(rf, alpha).theta_prime);
	return out;
}

inline Polynomial lemma21_expression(const RationalFunction& rf, std::int64_t phi) {
	detail::require_gap(rf);
	if (phi < 1 || phi > *rf.k())
		throw std::out_of_range("phi must lie in [1, k]");
	return lemma21_expression(rf, phi, theta_primes_by_determinant(rf, phi - 1));
}

struct Lemma21Report {
	std::int64_t phi = 0;
	bool passed = false;
	/// Degrees above n - phi whose coefficient in E is not zero.
	std::vector<std::int64_t> violating_degrees;
	/// Coefficient of x^(n-phi) in E, and the theta'_phi it should equal.
	Rational surviving;
	Rational expected;
};

/// theta_primes must hold theta'_0..theta'_phi.
inline Lemma21Report check_lemma21(const RationalFunction& rf, std::int64_t phi,
                                   std::span<const Rational> theta_primes) {
	if (theta_primes.size() <= static_cast<std::size_t>(phi < 0 ? 0 : phi))
		throw std::invalid_argument("not enough theta' values");
	const Polynomial e = lemma21_expression(rf, phi, theta_primes);
	const std::int64_t cut = rf.n().value() - phi;

	Lemma21Report rep;
	rep.phi = phi;
	if (e.degree().is_finite())
		for (std::int64_t d = cut + 1; d <= e.degree().value(); ++d)
			if (!e.coeff(d).is_zero())
				rep.violating_degrees.push_back(d);
	rep.surviving = e.coeff(cut);
	rep.expected = theta_primes[static_cast<std::size_t>(phi)];
	rep.passed = rep.violating_degrees.empty() && rep.surviving == rep.expected;
	return rep;
}

/// Builds E for the given phi and checks that every term above x^(n-phi)
/// cancels and the x^(n-phi) coefficient equals theta'_phi.
inline Lemma21Report check_lemma21(const RationalFunction& rf, std::int64_t phi) {
	detail::require_gap(rf);
	if (phi < 1 || phi > *rf.k())
		throw std::out_of_range("phi must lie in [1, k]");
	return check_lemma21(rf, phi, theta_primes_by_determinant(rf, phi));
}

}  // namespace asympoly

#endif  // ASYMPOLY_ASYMPTOTE_HPP
