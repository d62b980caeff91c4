// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <asympoly/cli.hpp>
#include <asympoly/oracle.hpp>
#include <asympoly/parser.hpp>

using namespace asympoly;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double golden_budget_ms = 10.0;
constexpr double campaign_budget_s = 60.0;
constexpr std::uint64_t campaign_trials = 10000;
constexpr std::int64_t campaign_max_degree = 12;
constexpr std::int64_t campaign_coeff_bound = 99;
constexpr std::uint64_t campaign_seed = 20240613;
constexpr int parser_cases = 1000;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
	std::printf("[%s] %d %-20s %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
	std::fflush(stdout);
	if (!ok)
		++failures;
}

Rational frac(long long p, long long q) { return Rational(BigInt(p), BigInt(q)); }

struct Golden {
	const char* input;
	Polynomial asymptote;
	std::optional<Polynomial> remainder;
	const char* text;
};

void golden() {
	const std::vector<Golden> cases{
		{"(8x^3+7)/(x-4)", Polynomial({Rational{128}, Rational{32}, Rational{8}}), Polynomial({Rational{519}}),
		 "8x^2+32x+128"},
		{"(5x^3+13x^2+3x+9)/(4x^2+5x+7)", Polynomial({frac(27, 16), frac(5, 4)}), std::nullopt, "(5/4)x+27/16"},
		{"(x^4-2x^3+3x-9)/(2x^2-5)", Polynomial({frac(5, 4), Rational{-1}, frac(1, 2)}), std::nullopt,
		 "(1/2)x^2-x+5/4"},
	};
	bool ok = true;
	double worst_ms = 0;
	std::string detail;
	for (const auto& c : cases) {
		const std::vector<std::string> argv{"asympoly", "compute", c.input};
		std::ostringstream out, err;
		const auto t0 = Clock::now();
		const int code = cli::run_cli(argv, out, err);
		const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
		worst_ms = std::max(worst_ms, ms);

		bool case_ok = code == 0 && ms < golden_budget_ms &&
		               out.str().find(std::string("asymptote: ") + c.text + "\n") != std::string::npos;
		const RationalFunction rf = parse_rational_function(c.input);
		for (Method m : {Method::Determinant, Method::Recurrence, Method::Division}) {
			const AsymptoteResult r = asymptote_of(rf, m);
			case_ok = case_ok && r.asymptote == c.asymptote;
			if (c.remainder)
				case_ok = case_ok && r.remainder == *c.remainder;
		}
		if (c.remainder)
			case_ok = case_ok && out.str().find("remainder: 519\n") != std::string::npos;
		if (!case_ok)
			detail += std::string(" mismatch on ") + c.input + ";";
		ok = ok && case_ok;
	}
	std::ostringstream d;
	d << "3 reference examples exact under all methods, slowest compute " << worst_ms << " ms (< " << golden_budget_ms
	  << " ms)" << detail;
	report(1, "GOLDEN", ok, d.str());
}

bool has(const std::string& s, const char* needle) { return s.find(needle) != std::string::npos; }

void campaign_criteria() {
	const FuzzConfig cfg{.trials = campaign_trials,
	                     .max_degree = campaign_max_degree,
	                     .coeff_bound = campaign_coeff_bound,
	                     .seed = campaign_seed,
	                     .allow_equal_degrees = true};
	const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
	const CampaignReport rep = run_campaign(cfg, workers);
	const double secs = std::chrono::duration<double>(rep.elapsed).count();

	std::size_t equivalence = 0, det_oracle = 0, lemma21 = 0, lemma22 = 0, remainder = 0, other = 0;
	for (const auto& f : rep.failures) {
		const std::string& d = f.detail;
		if (has(d, "remainder degree"))
			++remainder;
		else if (has(d, "hessenberg det"))
			++det_oracle;
		else if (has(d, "cancellation phi="))
			++lemma21;
		else if (has(d, "recurrence theta'") || has(d, "recurrence produced"))
			++lemma22;
		else if (has(d, "!= division") || has(d, "proper-fraction") || has(d, "leading coefficient") ||
		         has(d, "numerator != q*denominator"))
			++equivalence;
		else
			++other;
	}
	for (std::size_t i = 0; i < std::min<std::size_t>(rep.failures.size(), 10); ++i)
		std::printf("    failure: %s: %s\n", rep.failures[i].input.c_str(), rep.failures[i].detail.c_str());

	// k coverage: regenerate inputs (cheap) to confirm k spans [0, max_degree]
	std::vector<int> gap_seen(static_cast<std::size_t>(campaign_max_degree + 1), 0);
	for (std::uint64_t i = 0; i < cfg.trials; ++i) {
		auto rng = trial_rng(cfg.seed, i);
		const RationalFunction rf = random_rational_function(rng, cfg);
		gap_seen[static_cast<std::size_t>(*rf.k())] = 1;
	}
	const bool all_gaps = std::all_of(gap_seen.begin(), gap_seen.end(), [](int s) { return s != 0; });

	std::ostringstream d2;
	d2 << rep.trials_run << " trials (deg<=12, |c|<=99, every k in [0,12]: " << (all_gaps ? "yes" : "no")
	   << "), " << equivalence + other << " disagreements, " << secs << " s (< " << campaign_budget_s << " s)";
	report(2, "METHOD EQUIVALENCE",
	       rep.trials_run == campaign_trials && equivalence + other == 0 && all_gaps && secs < campaign_budget_s,
	       d2.str());

	std::ostringstream d3;
	d3 << rep.det_oracle_checks << " matrices, " << det_oracle << " mismatches";
	report(3, "DETERMINANT ORACLE", det_oracle == 0 && other == 0 && rep.det_oracle_checks > 0, d3.str());

	std::ostringstream d4;
	d4 << rep.lemma21_checks << " (trial, phi) checks, " << lemma21 << " violations";
	report(4, "CANCELLATION", lemma21 == 0 && other == 0 && rep.lemma21_checks > 0, d4.str());

	std::ostringstream d5;
	d5 << rep.lemma22_checks << " theta' comparisons, " << lemma22 << " mismatches";
	report(5, "RECURRENCE", lemma22 == 0 && other == 0 && rep.lemma22_checks > 0, d5.str());

	std::ostringstream d6;
	d6 << remainder << " of " << rep.trials_run * 3 << " (trial, method) remainders violate deg r < deg b";
	report(6, "REMAINDER BOUND", remainder == 0 && other == 0, d6.str());
}

void parser_criteria() {
	std::mt19937_64 rng(campaign_seed);
	std::uniform_int_distribution<int> deg(0, 12), num(-999, 999), den(1, 999);

	int round_trip_ok = 0;
	for (int i = 0; i < parser_cases; ++i) {
		std::vector<Rational> coeffs(static_cast<std::size_t>(deg(rng) + 1));
		for (auto& c : coeffs)
			c = (rng() % 3 == 0) ? Rational{} : Rational(BigInt(num(rng)), BigInt(den(rng)));
		const Polynomial p(std::move(coeffs));
		try {
			if (parse_polynomial(format_polynomial(p)) == p)
				++round_trip_ok;
		} catch (const std::exception&) {
		}
	}

	// garbage: random grammar-alphabet soup with at least one character the
	// grammar never accepts, so every string must be rejected
	const std::string alphabet = "0123456789x^+-/(). ";
	const std::string illegal = "*yz#@!,;=&%$abc?{}[]";
	int positioned = 0;
	int crashes = 0;
	for (int i = 0; i < parser_cases; ++i) {
		std::string s;
		const int len = 1 + static_cast<int>(rng() % 30);
		for (int j = 0; j < len; ++j)
			s += (i % 4 == 0) ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
		const char bad = (i % 4 == 0 && i % 8 == 0) ? static_cast<char>(0x80 + rng() % 0x80)
		                                            : illegal[rng() % illegal.size()];
		s.insert(s.begin() + static_cast<long>(rng() % (s.size() + 1)), bad);
		try {
			(void)parse_rational_function(s);
		} catch (const ParseError& e) {
			if (e.position() <= s.size())
				++positioned;
		} catch (const SemanticError&) {
		} catch (...) {
			++crashes;
		}
	}
	std::ostringstream d;
	d << round_trip_ok << "/" << parser_cases << " polynomials round-trip, " << positioned << "/" << parser_cases
	  << " garbage strings give positioned ParseErrors, " << crashes << " other exceptions";
	report(7, "PARSER ROUND TRIP", round_trip_ok == parser_cases && positioned == parser_cases && crashes == 0,
	       d.str());
}

}  // namespace

int main() {
	const auto start = Clock::now();
	golden();
	campaign_criteria();
	parser_criteria();
	const double secs = std::chrono::duration<double>(Clock::now() - start).count();
	std::ostringstream d;
	d << "all checks are exact rational comparisons; whole suite ran in " << secs << " s on "
	  << std::max(1u, std::thread::hardware_concurrency()) << " thread(s)";
	report(8, "DESK SCALE", failures == 0, d.str());
	return failures == 0 ? 0 : 1;
}
