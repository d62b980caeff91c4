#ifndef ASYMPOLY_MATRIX_HPP
#define ASYMPOLY_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace asympoly {

/// Dense square matrix of rationals, row-major.
class SquareMatrix {
public:
	SquareMatrix() = default;
	explicit SquareMatrix(std::size_t dim) : m_dim(dim), m_entries(dim * dim) {}

	SquareMatrix(std::initializer_list<std::initializer_list<Rational>> rows) : m_dim(rows.size()) {
		m_entries.reserve(m_dim * m_dim);
		for (const auto& row : rows) {
			if (row.size() != m_dim)
				throw std::invalid_argument("matrix is not square");
			m_entries.insert(m_entries.end(), row.begin(), row.end());
		}
	}

	static SquareMatrix identity(std::size_t dim) {
		SquareMatrix m(dim);
		for (std::size_t i = 0; i < dim; ++i)
			m(i, i) = Rational{1};
		return m;
	}

	std::size_t dim() const { return m_dim; }

	Rational& operator()(std::size_t row, std::size_t col) { return m_entries[row * m_dim + col]; }
	const Rational& operator()(std::size_t row, std::size_t col) const { return m_entries[row * m_dim + col]; }

	/// Zero everywhere below the first subdiagonal.
	bool is_upper_hessenberg() const {
		for (std::size_t i = 2; i < m_dim; ++i)
			for (std::size_t j = 0; j + 1 < i; ++j)
				if (!(*this)(i, j).is_zero())
					return false;
		return true;
	}

	friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
	std::size_t m_dim = 0;
	std::vector<Rational> m_entries;
};

/// Determinant by Bareiss fraction-free elimination. Each row is first scaled
/// to integers by the lcm of its denominators, so every intermediate division
/// is exact over the integers. Works on any square matrix; det of the 0x0
/// matrix is 1.
inline Rational det_fraction_free(const SquareMatrix& m) {
	const std::size_t n = m.dim();
	if (n == 0)
		return Rational{1};

	std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
	BigInt scale = 1;
	for (std::size_t i = 0; i < n; ++i) {
		BigInt row_lcm = 1;
		for (std::size_t j = 0; j < n; ++j)
			row_lcm = boost::multiprecision::lcm(row_lcm, m(i, j).den());
		for (std::size_t j = 0; j < n; ++j)
			a[i][j] = m(i, j).num() * (row_lcm / m(i, j).den());
		scale *= row_lcm;
	}

	int sign = 1;
	BigInt prev = 1;
	for (std::size_t k = 0; k + 1 < n; ++k) {
		if (a[k][k] == 0) {
			std::size_t swap_row = k + 1;
			while (swap_row < n && a[swap_row][k] == 0)
				++swap_row;
			if (swap_row == n)
				return Rational{};
			std::swap(a[k], a[swap_row]);
			sign = -sign;
		}
		for (std::size_t i = k + 1; i < n; ++i) {
			for (std::size_t j = k + 1; j < n; ++j) {
				a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
				a[i][j] /= prev;
			}
			a[i][k] = 0;
		}
		prev = a[k][k];
	}
	BigInt det = a[n - 1][n - 1];
	if (sign < 0)
		det = -det;
	return Rational(std::move(det), std::move(scale));
}

/// Determinant of an upper-Hessenberg matrix in O(dim^2) operations.
///
/// Expanding the leading r x r block along its last column gives
///   D_r = sum_{i<r} (-1)^(r-1-i) * h(i, r-1) * prod_{i<t<r} h(t, t-1) * D_i
/// with D_0 = 1. Throws std::invalid_argument if the matrix has a nonzero
/// entry below the first subdiagonal.
inline Rational det_hessenberg(const SquareMatrix& m) {
	if (!m.is_upper_hessenberg())
		throw std::invalid_argument("not upper-Hessenberg");
	const std::size_t n = m.dim();
	std::vector<Rational> minors(n + 1);
	minors[0] = Rational{1};
	for (std::size_t r = 1; r <= n; ++r) {
		Rational sum;
		Rational subdiag_product{1};
		bool negate = false;
		for (std::size_t i = r; i-- > 0;) {
			if (!m(i, r - 1).is_zero() && !subdiag_product.is_zero()) {
				Rational term = m(i, r - 1) * subdiag_product * minors[i];
				if (negate)
					sum -= term;
				else
					sum += term;
			}
			if (i > 0)
				subdiag_product *= m(i, i - 1);
			negate = !negate;
		}
		minors[r] = std::move(sum);
	}
	return minors[n];
}

}  // namespace asympoly

#endif  // ASYMPOLY_MATRIX_HPP
