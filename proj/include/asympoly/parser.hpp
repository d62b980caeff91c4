#ifndef ASYMPOLY_PARSER_HPP
#define ASYMPOLY_PARSER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polynomial.hpp"
#include "rational_function.hpp"

/*
 * Input grammar (whitespace between tokens is ignored):
 *
 *   rational-function := side '/' side | side
 *   side        := '(' poly ')' | poly
 *   poly        := ['+'|'-'] term (('+'|'-') term)*
 *   term        := coefficient ['x' ['^' integer]] | 'x' ['^' integer]
 *   coefficient := number | integer '/' integer | '(' number ['/' integer] ')'
 *   number      := digit+ ['.' digit+]
 *
 * A '/' outside parentheses separates numerator from denominator when both
 * sides are parenthesised or when it is the only such '/'.
 */

namespace asympoly {

enum class TokenKind { Number, Slash, Plus, Minus, Caret, Variable, LParen, RParen, End };

struct Token {
	TokenKind kind = TokenKind::End;
	std::string_view text;
	std::size_t position = 0;
};

class ParseError : public std::runtime_error {
public:
	ParseError(std::size_t position, std::string expected, std::string found)
		: std::runtime_error("parse error at position " + std::to_string(position) + ": expected " + expected +
		                     ", found " + found),
		  m_position(position), m_expected(std::move(expected)), m_found(std::move(found)) {}

	std::size_t position() const { return m_position; }
	const std::string& expected() const { return m_expected; }
	const std::string& found() const { return m_found; }

private:
	std::size_t m_position;
	std::string m_expected;
	std::string m_found;
};

inline constexpr std::uint64_t max_exponent = 65536;

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

inline std::string describe(const Token& t) {
	if (t.kind == TokenKind::End)
		return "end of input";
	return "'" + std::string(t.text) + "'";
}

}  // namespace detail

/// Splits text into tokens; the last token is always End at text.size().
inline std::vector<Token> tokenize(std::string_view text) {
	std::vector<Token> out;
	std::size_t i = 0;
	while (i < text.size()) {
		const char c = text[i];
		if (detail::is_space(c)) {
			++i;
			continue;
		}
		const std::size_t start = i;
		TokenKind kind;
		if (detail::is_digit(c)) {
			while (i < text.size() && detail::is_digit(text[i]))
				++i;
			if (i < text.size() && text[i] == '.') {
				++i;
				if (i >= text.size() || !detail::is_digit(text[i]))
					throw ParseError(i, "a digit after '.'",
					                 i < text.size() ? "'" + std::string(1, text[i]) + "'" : "end of input");
				while (i < text.size() && detail::is_digit(text[i]))
					++i;
			}
			out.push_back({TokenKind::Number, text.substr(start, i - start), start});
			continue;
		}
		switch (c) {
		case '/': kind = TokenKind::Slash; break;
		case '+': kind = TokenKind::Plus; break;
		case '-': kind = TokenKind::Minus; break;
		case '^': kind = TokenKind::Caret; break;
		case 'x': kind = TokenKind::Variable; break;
		case '(': kind = TokenKind::LParen; break;
		case ')': kind = TokenKind::RParen; break;
		default: {
			std::string found = (static_cast<unsigned char>(c) >= 0x20 && static_cast<unsigned char>(c) < 0x7f)
			                        ? "'" + std::string(1, c) + "'"
			                        : "byte 0x" + std::to_string(static_cast<unsigned char>(c));
			throw ParseError(start, "a number, 'x', an operator or a parenthesis", found);
		}
		}
		out.push_back({kind, text.substr(start, 1), start});
		++i;
	}
	out.push_back({TokenKind::End, {}, text.size()});
	return out;
}

namespace detail {

/// Recursive-descent parser over a token range. `terminator` stands in for
/// whatever token closes the range (a ')' or '/' in the enclosing text).
class PolyParser {
public:
	PolyParser(std::span<const Token> tokens, Token terminator) : m_tokens(tokens), m_terminator(terminator) {}

	Polynomial parse() {
		if (at_end())
			throw ParseError(peek().position, "a polynomial", describe(peek()));
		Polynomial acc;
		bool negative = false;
		if (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
			negative = peek().kind == TokenKind::Minus;
			++m_pos;
		}
		acc += term(negative);
		while (!at_end()) {
			const Token& t = peek();
			if (t.kind != TokenKind::Plus && t.kind != TokenKind::Minus)
				throw ParseError(t.position, "'+', '-' or end of polynomial", describe(t));
			++m_pos;
			acc += term(t.kind == TokenKind::Minus);
		}
		return acc;
	}

private:
	bool at_end() const { return m_pos >= m_tokens.size(); }

	const Token& peek(std::size_t ahead = 0) const {
		return m_pos + ahead < m_tokens.size() ? m_tokens[m_pos + ahead] : m_terminator;
	}

	const Token& expect(TokenKind kind, const char* what) {
		const Token& t = peek();
		if (at_end() || t.kind != kind)
			throw ParseError(t.position, what, describe(t));
		++m_pos;
		return t;
	}

	static BigInt integer_of(const Token& t, const char* what) {
		if (t.text.find('.') != std::string_view::npos)
			throw ParseError(t.position, what, describe(t));
		return detail::decimal(t.text);
	}

	// number ['/' integer]; the '/' is taken only when an integer follows it
	Rational number_or_fraction() {
		const Token& first = expect(TokenKind::Number, "a number");
		if (peek().kind == TokenKind::Slash && !at_end() && peek(1).kind == TokenKind::Number &&
		    m_pos + 1 < m_tokens.size()) {
			BigInt num = integer_of(first, "an integer numerator before '/'");
			++m_pos;
			const Token& den_tok = peek();
			++m_pos;
			BigInt den = integer_of(den_tok, "a positive integer denominator");
			if (den == 0)
				throw ParseError(den_tok.position, "a positive integer denominator", describe(den_tok));
			return Rational(std::move(num), std::move(den));
		}
		return Rational::from_string(first.text);
	}

	Polynomial term(bool negative) {
		Rational coeff{1};
		bool have_coeff = false;
		const Token& start = peek();
		if (!at_end() && start.kind == TokenKind::Number) {
			coeff = number_or_fraction();
			have_coeff = true;
		} else if (!at_end() && start.kind == TokenKind::LParen) {
			++m_pos;
			coeff = number_or_fraction();
			expect(TokenKind::RParen, "')' closing the coefficient");
			have_coeff = true;
		}

		std::uint64_t exponent = 0;
		if (!at_end() && peek().kind == TokenKind::Variable) {
			++m_pos;
			exponent = 1;
			if (!at_end() && peek().kind == TokenKind::Caret) {
				++m_pos;
				const Token& e = expect(TokenKind::Number, "an integer exponent");
				if (e.text.find('.') != std::string_view::npos || e.text.size() > 6 ||
				    std::stoull(std::string(e.text)) > max_exponent)
					throw ParseError(e.position, "an integer exponent up to " + std::to_string(max_exponent),
					                 describe(e));
				exponent = std::stoull(std::string(e.text));
			}
		} else if (!have_coeff) {
			throw ParseError(start.position, "a term", describe(start));
		}
		if (negative)
			coeff = -coeff;
		return Polynomial::monomial(std::move(coeff), static_cast<std::size_t>(exponent));
	}

	std::span<const Token> m_tokens;
	Token m_terminator;
	std::size_t m_pos = 0;
};

/// Index of the ')' matching the '(' at `open`, or tokens.size() if unmatched.
inline std::size_t matching_paren(std::span<const Token> tokens, std::size_t open) {
	int depth = 0;
	for (std::size_t i = open; i < tokens.size(); ++i) {
		if (tokens[i].kind == TokenKind::LParen)
			++depth;
		else if (tokens[i].kind == TokenKind::RParen && --depth == 0)
			return i;
	}
	return tokens.size();
}

/// Parses one side of a rational function, dropping one pair of wrapping parentheses.
inline Polynomial parse_side(std::span<const Token> tokens, const Token& terminator) {
	if (!tokens.empty() && tokens.front().kind == TokenKind::LParen &&
	    matching_paren(tokens, 0) == tokens.size() - 1)
		return PolyParser(tokens.subspan(1, tokens.size() - 2), tokens.back()).parse();
	return PolyParser(tokens, terminator).parse();
}

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text) {
	const std::vector<Token> tokens = tokenize(text);
	std::span<const Token> body(tokens.data(), tokens.size() - 1);
	return detail::PolyParser(body, tokens.back()).parse();
}

inline RationalFunction parse_rational_function(std::string_view text) {
	const std::vector<Token> tokens = tokenize(text);
	const std::span<const Token> body(tokens.data(), tokens.size() - 1);
	const Token& end = tokens.back();

	std::vector<std::size_t> top_slashes;
	int depth = 0;
	for (std::size_t i = 0; i < body.size(); ++i) {
		switch (body[i].kind) {
		case TokenKind::LParen: ++depth; break;
		case TokenKind::RParen:
			if (--depth < 0)
				throw ParseError(body[i].position, "'(' before ')'", "')'");
			break;
		case TokenKind::Slash:
			if (depth == 0)
				top_slashes.push_back(i);
			break;
		default: break;
		}
	}
	if (depth > 0)
		throw ParseError(end.position, "')'", "end of input");

	if (top_slashes.empty())
		return RationalFunction(detail::parse_side(body, end), Polynomial::constant(Rational{1}));

	std::size_t divider = body.size();
	for (std::size_t s : top_slashes) {
		const bool left = s > 0 && body.front().kind == TokenKind::LParen && detail::matching_paren(body, 0) == s - 1;
		const bool right =
			s + 1 < body.size() && body[s + 1].kind == TokenKind::LParen && detail::matching_paren(body, s + 1) == body.size() - 1;
		if (left && right) {
			divider = s;
			break;
		}
	}
	if (divider == body.size()) {
		if (top_slashes.size() != 1)
			throw ParseError(body[top_slashes[1]].position, "parentheses around numerator and denominator", "'/'");
		divider = top_slashes.front();
	}

	Polynomial num = detail::parse_side(body.first(divider), body[divider]);
	Polynomial den = detail::parse_side(body.subspan(divider + 1), end);
	return RationalFunction(std::move(num), std::move(den));
}

enum class Style { Text, LaTeX, Json };

inline nlohmann::json to_json(const Rational& r) {
	return {{"num", r.num().str()}, {"den", r.den().str()}};
}

/// {"coefficients":[{"num":..,"den":..}, ...]}, lowest degree first.
inline nlohmann::json to_json(const Polynomial& p) {
	nlohmann::json coeffs = nlohmann::json::array();
	for (const auto& c : p.coeffs())
		coeffs.push_back(to_json(c));
	return {{"coefficients", std::move(coeffs)}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
	return Rational(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
	std::vector<Rational> coeffs;
	for (const auto& c : j.at("coefficients"))
		coeffs.push_back(rational_from_json(c));
	return Polynomial(std::move(coeffs));
}

namespace detail {

inline std::string format_magnitude(const Rational& v, Style style, bool before_x) {
	if (v.is_integer())
		return v.num().str();
	if (style == Style::LaTeX)
		return "\\frac{" + v.num().str() + "}{" + v.den().str() + "}";
	if (before_x)
		return "(" + v.num().str() + "/" + v.den().str() + ")";
	return v.num().str() + "/" + v.den().str();
}

}  // namespace detail

inline std::string format_polynomial(const Polynomial& p, Style style = Style::Text) {
	if (style == Style::Json)
		return to_json(p).dump();
	if (p.is_zero())
		return "0";

	std::string out;
	const auto coeffs = p.coeffs();
	for (std::size_t d = coeffs.size(); d-- > 0;) {
		const Rational& c = coeffs[d];
		if (c.is_zero())
			continue;
		if (c.sign() < 0)
			out += "-";
		else if (!out.empty())
			out += "+";
		const Rational mag = c.abs();
		if (d == 0) {
			out += detail::format_magnitude(mag, style, false);
			continue;
		}
		if (mag != Rational{1})
			out += detail::format_magnitude(mag, style, true);
		out += "x";
		if (d > 1) {
			if (style == Style::LaTeX && d > 9)
				out += "^{" + std::to_string(d) + "}";
			else
				out += "^" + std::to_string(d);
		}
	}
	return out;
}

/// "(numerator)/(denominator)", re-parseable by parse_rational_function.
inline std::string format_rational_function(const RationalFunction& rf) {
	return "(" + format_polynomial(rf.numerator()) + ")/(" + format_polynomial(rf.denominator()) + ")";
}

}  // namespace asympoly

#endif  // ASYMPOLY_PARSER_HPP
