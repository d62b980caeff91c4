#ifndef ASYMPOLY_ORACLE_HPP
#define ASYMPOLY_ORACLE_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/random/uniform_int_distribution.hpp>
#include <json.hpp>

#include "asymptote.hpp"
#include "parser.hpp"

namespace asympoly {

/// f - g as a single fraction: (numerator - g * denominator) / denominator.
/// g is the asymptote exactly when the result is a proper fraction.
inline RationalFunction residual(const RationalFunction& rf, const Polynomial& g) {
	return RationalFunction(rf.numerator() - g * rf.denominator(), rf.denominator());
}

struct ResidualRow {
	Rational x;
	/// f(x) - g(x); empty when x is a root of the denominator.
	std::optional<Rational> value;

	bool is_pole() const { return !value.has_value(); }
};

/// 10, 100, ..., 10^6.
inline std::vector<Rational> default_decay_points() {
	std::vector<Rational> pts;
	BigInt x = 1;
	for (int e = 1; e <= 6; ++e) {
		x *= 10;
		pts.emplace_back(x);
	}
	return pts;
}

inline std::vector<ResidualRow> residual_decay_table(const RationalFunction& rf, const Polynomial& g,
                                                     std::span<const Rational> points) {
	std::vector<ResidualRow> rows;
	rows.reserve(points.size());
	for (const auto& x : points) {
		const Rational den = rf.denominator()(x);
		if (den.is_zero()) {
			rows.push_back({x, std::nullopt});
			continue;
		}
		rows.push_back({x, rf.numerator()(x) / den - g(x)});
	}
	return rows;
}

struct CrossValidation {
	bool passed = true;
	std::vector<std::string> failures;
	Polynomial asymptote;
	Polynomial remainder;
	bool proper_fraction = false;
	std::size_t methods_compared = 0;
	std::size_t det_oracle_checks = 0;
	std::size_t lemma22_checks = 0;
	std::size_t lemma21_checks = 0;

	void fail(std::string what) {
		passed = false;
		failures.push_back(std::move(what));
	}
};

/// Runs every method and every internal identity on one input:
/// determinant, recurrence and division must agree exactly, the remainder
/// must have degree below the denominator, each coefficient matrix must have
/// the same determinant under Hessenberg expansion and Bareiss elimination,
/// recurrence theta' must match the signed determinants, and the
/// cancellation must hold for every phi in [1, k].
inline CrossValidation cross_validate(const RationalFunction& rf) {
	CrossValidation cv;
	const AsymptoteResult div = asymptote_of(rf, Method::Division);
	const AsymptoteResult det = asymptote_of(rf, Method::Determinant, {.keep_matrices = true});
	const AsymptoteResult rec = asymptote_of(rf, Method::Recurrence);
	cv.asymptote = div.asymptote;
	cv.remainder = div.remainder;
	cv.proper_fraction = div.proper_fraction;
	cv.methods_compared = 3;

	if (rf.numerator() != div.asymptote * rf.denominator() + div.remainder)
		cv.fail("division: numerator != q*denominator + r");

	for (const AsymptoteResult* r : {&det, &rec}) {
		const std::string name(to_string(r->method));
		if (r->asymptote != div.asymptote)
			cv.fail(name + " asymptote " + format_polynomial(r->asymptote) + " != division " +
			        format_polynomial(div.asymptote));
		if (r->remainder != div.remainder)
			cv.fail(name + " remainder " + format_polynomial(r->remainder) + " != division " +
			        format_polynomial(div.remainder));
		if (r->proper_fraction != div.proper_fraction)
			cv.fail(name + " disagrees with division on proper-fraction flag");
	}
	for (const AsymptoteResult* r : {&div, &det, &rec})
		if (!(r->remainder.degree() < rf.denominator().degree()))
			cv.fail(std::string(to_string(r->method)) + " remainder degree " + r->remainder.degree().to_string() +
			        " not below denominator degree " + rf.denominator().degree().to_string());

	if (div.proper_fraction)
		return cv;

	const Rational theta0 = rf.numerator().leading() / rf.denominator().leading();
	if (det.asymptote.leading() != theta0)
		cv.fail("leading coefficient " + det.asymptote.leading().to_string() + " != a_n/b_{n-k} = " +
		        theta0.to_string());

	std::vector<Rational> theta_primes;
	for (const auto& t : det.traces) {
		const Rational reference = det_fraction_free(t.matrix->entries);
		++cv.det_oracle_checks;
		if (reference != t.det_value)
			cv.fail("alpha=" + std::to_string(t.alpha) + ": hessenberg det " + t.det_value.to_string() +
			        " != fraction-free det " + reference.to_string());
		theta_primes.push_back(t.theta_prime);
	}

	if (rec.traces.size() != det.traces.size()) {
		cv.fail("recurrence produced " + std::to_string(rec.traces.size()) + " coefficients, determinant " +
		        std::to_string(det.traces.size()));
	} else {
		for (std::size_t j = 0; j < rec.traces.size(); ++j) {
			++cv.lemma22_checks;
			if (rec.traces[j].theta_prime != det.traces[j].theta_prime)
				cv.fail("j=" + std::to_string(j) + ": recurrence theta' " + rec.traces[j].theta_prime.to_string() +
				        " != (-1)^j det " + det.traces[j].theta_prime.to_string());
		}
	}

	const std::int64_t k = *rf.k();
	for (std::int64_t phi = 1; phi <= k; ++phi) {
		const Lemma21Report rep = check_lemma21(rf, phi, theta_primes);
		++cv.lemma21_checks;
		if (!rep.passed) {
			std::string msg = "cancellation phi=" + std::to_string(phi) + ":";
			for (auto d : rep.violating_degrees)
				msg += " x^" + std::to_string(d) + " survives;";
			if (rep.surviving != rep.expected)
				msg += " surviving " + rep.surviving.to_string() + " != theta' " + rep.expected.to_string();
			cv.fail(std::move(msg));
		}
	}
	return cv;
}

struct FuzzConfig {
	std::uint64_t trials = 1000;
	std::int64_t max_degree = 8;
	std::int64_t coeff_bound = 99;
	std::uint64_t seed = 0;
	bool allow_equal_degrees = true;
};

struct CampaignFailure {
	/// Re-parseable input that reproduces the failure.
	std::string input;
	std::string detail;

	friend bool operator==(const CampaignFailure&, const CampaignFailure&) = default;
};

struct CampaignReport {
	std::uint64_t trials_run = 0;
	std::vector<CampaignFailure> failures;
	std::uint64_t lemma21_checks = 0;
	std::uint64_t det_oracle_checks = 0;
	std::uint64_t lemma22_checks = 0;
	std::chrono::nanoseconds elapsed{0};

	bool passed() const { return failures.empty(); }
};

/// Stable across runs: elapsed time is deliberately left out.
inline nlohmann::json to_json(const CampaignReport& r) {
	nlohmann::json failures = nlohmann::json::array();
	for (const auto& f : r.failures)
		failures.push_back({{"input", f.input}, {"detail", f.detail}});
	return {{"trials", r.trials_run}, {"failures", std::move(failures)}, {"lemma21_checks", r.lemma21_checks}};
}

/// Generator for trial `index` of a campaign; depends only on (seed, index).
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
	std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
	                  static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
	return std::mt19937_64(seq);
}

namespace detail {

template <class Rng>
std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
	return boost::random::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

template <class Rng>
Polynomial random_polynomial(Rng& rng, std::int64_t degree, std::int64_t bound) {
	std::vector<Rational> coeffs(static_cast<std::size_t>(degree + 1));
	for (auto& c : coeffs)
		c = Rational{uniform(rng, -bound, bound)};
	while (coeffs.back().is_zero())
		coeffs.back() = Rational{uniform(rng, -bound, bound)};
	return Polynomial(std::move(coeffs));
}

}  // namespace detail

/// Integer-coefficient rational function with nonzero leading coefficients,
/// numerator degree in [0 or 1, max_degree] and denominator degree <= it
/// (strictly below unless allow_equal_degrees).
template <class Rng>
RationalFunction random_rational_function(Rng& rng, const FuzzConfig& cfg) {
	const std::int64_t n = detail::uniform(rng, cfg.allow_equal_degrees ? 0 : 1, cfg.max_degree);
	const std::int64_t m = detail::uniform(rng, 0, cfg.allow_equal_degrees ? n : n - 1);
	Polynomial num = detail::random_polynomial(rng, n, cfg.coeff_bound);
	Polynomial den = detail::random_polynomial(rng, m, cfg.coeff_bound);
	return RationalFunction(std::move(num), std::move(den));
}

/// Cross-validates `trials` random inputs. Trial i draws only from
/// trial_rng(seed, i), so the report does not depend on `workers`.
inline CampaignReport run_campaign(const FuzzConfig& cfg, unsigned workers = 1) {
	if (cfg.trials < 1)
		throw std::invalid_argument("trials must be at least 1");
	if (cfg.max_degree < 1)
		throw std::invalid_argument("max_degree must be at least 1");
	if (cfg.coeff_bound < 1)
		throw std::invalid_argument("coeff_bound must be at least 1");

	const auto start = std::chrono::steady_clock::now();

	struct Outcome {
		std::string input;
		CrossValidation cv;
	};
	std::vector<Outcome> outcomes(cfg.trials);
	auto run_slice = [&](std::uint64_t first, std::uint64_t stride) {
		for (std::uint64_t i = first; i < cfg.trials; i += stride) {
			auto rng = trial_rng(cfg.seed, i);
			RationalFunction rf = random_rational_function(rng, cfg);
			outcomes[i].input = format_rational_function(rf);
			try {
				outcomes[i].cv = cross_validate(rf);
			} catch (const std::exception& e) {
				outcomes[i].cv.fail(std::string("exception: ") + e.what());
			}
		}
	};

	workers = std::max(1u, workers);
	if (workers == 1) {
		run_slice(0, 1);
	} else {
		std::vector<std::jthread> pool;
		for (unsigned w = 0; w < workers; ++w)
			pool.emplace_back(run_slice, w, workers);
	}

	CampaignReport report;
	report.trials_run = cfg.trials;
	for (auto& o : outcomes) {
		report.lemma21_checks += o.cv.lemma21_checks;
		report.det_oracle_checks += o.cv.det_oracle_checks;
		report.lemma22_checks += o.cv.lemma22_checks;
		for (auto& f : o.cv.failures)
			report.failures.push_back({o.input, std::move(f)});
	}
	report.elapsed = std::chrono::steady_clock::now() - start;
	return report;
}

}  // namespace asympoly

#endif  // ASYMPOLY_ORACLE_HPP
