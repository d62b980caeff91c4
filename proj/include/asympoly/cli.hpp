#ifndef ASYMPOLY_CLI_HPP
#define ASYMPOLY_CLI_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "asymptote.hpp"
#include "oracle.hpp"
#include "parser.hpp"

namespace asympoly::cli {

enum ExitCode : int { Success = 0, CheckFailed = 1, UsageError = 2, SemanticFailure = 3 };

enum class Command { Compute, Verify, Fuzz, Bench };
enum class MethodChoice { Determinant, Recurrence, Division, All };

struct CliInvocation {
	Command command = Command::Compute;
	std::string expression;
	MethodChoice method = MethodChoice::Determinant;
	Style format = Style::Text;
	bool show_matrices = false;
	FuzzConfig fuzz_config;
	unsigned threads = 1;
	std::vector<std::int64_t> bench_degrees;
	std::int64_t bench_coeff_bound = 99;
	std::uint64_t bench_seed = 0;
	unsigned bench_repeats = 5;
};

namespace detail {

inline std::string format_rational(const Rational& r, Style style) {
	if (style != Style::LaTeX || r.is_integer())
		return r.to_string();
	std::string s = r.sign() < 0 ? "-" : "";
	return s + "\\frac{" + BigInt(boost::multiprecision::abs(r.num())).str() + "}{" + r.den().str() + "}";
}

inline std::string gap_name(const RationalFunction& rf) {
	if (rf.is_proper() || !rf.k())
		return "proper fraction, horizontal asymptote y = 0";
	switch (*rf.k()) {
	case 0: return "horizontal asymptote";
	case 1: return "oblique asymptote";
	default: return "curvilinear asymptote";
	}
}

inline nlohmann::json gap_json(const RationalFunction& rf) {
	if (auto k = rf.k())
		return *k;
	return nullptr;
}

inline std::string latex_function(const RationalFunction& rf) {
	const std::string num = format_polynomial(rf.numerator(), Style::LaTeX);
	if (rf.denominator() == Polynomial::constant(Rational{1}))
		return num;
	return "\\frac{" + num + "}{" + format_polynomial(rf.denominator(), Style::LaTeX) + "}";
}

inline void text_matrix(std::ostream& out, const SquareMatrix& m) {
	std::vector<std::string> cells;
	std::size_t width = 1;
	for (std::size_t i = 0; i < m.dim(); ++i)
		for (std::size_t j = 0; j < m.dim(); ++j) {
			cells.push_back(m(i, j).to_string());
			width = std::max(width, cells.back().size());
		}
	for (std::size_t i = 0; i < m.dim(); ++i) {
		out << "    |";
		for (std::size_t j = 0; j < m.dim(); ++j)
			out << ' ' << std::setw(static_cast<int>(width)) << cells[i * m.dim() + j];
		out << " |\n";
	}
}

inline std::string latex_matrix(const SquareMatrix& m) {
	std::string s = "\\begin{vmatrix} ";
	for (std::size_t i = 0; i < m.dim(); ++i) {
		for (std::size_t j = 0; j < m.dim(); ++j) {
			s += format_rational(m(i, j), Style::LaTeX);
			if (j + 1 < m.dim())
				s += " & ";
		}
		if (i + 1 < m.dim())
			s += " \\\\ ";
	}
	return s + " \\end{vmatrix}";
}

inline nlohmann::json trace_json(const ThetaTrace& t, bool with_matrix) {
	nlohmann::json j = {{"alpha", t.alpha}, {"det", to_json(t.det_value)}, {"theta", to_json(t.theta)}};
	if (with_matrix && t.matrix) {
		nlohmann::json rows = nlohmann::json::array();
		const auto& m = t.matrix->entries;
		for (std::size_t r = 0; r < m.dim(); ++r) {
			nlohmann::json row = nlohmann::json::array();
			for (std::size_t c = 0; c < m.dim(); ++c)
				row.push_back(to_json(m(r, c)));
			rows.push_back(std::move(row));
		}
		j["matrix"] = std::move(rows);
	}
	return j;
}

inline void print_traces(std::ostream& out, const RationalFunction& rf, const AsymptoteResult& res, Style style) {
	const Rational lead = rf.denominator().leading();
	for (const auto& t : res.traces) {
		if (style == Style::LaTeX) {
			if (!t.matrix) {
				out << "\\theta'_{" << t.alpha << "} = " << format_rational(t.theta_prime, style) << ",\\quad \\theta_{"
				    << t.alpha << "} = " << format_rational(t.theta, style) << "\n";
				continue;
			}
			std::string base = format_rational(lead, style);
			if (!lead.is_integer() || lead.sign() < 0)
				base = "\\left(" + base + "\\right)";
			out << "\\theta_{" << t.alpha << "} = " << (t.alpha % 2 ? "-" : "") << "\\frac{" << latex_matrix(t.matrix->entries)
			    << "}{" << base << "^{" << t.alpha + 1 << "}} = " << format_rational(t.theta, style) << "\n";
			continue;
		}
		out << "alpha = " << t.alpha << "\n";
		if (t.matrix)
			text_matrix(out, t.matrix->entries);
		out << "    det = " << t.det_value << ", theta' = " << t.theta_prime << ", theta = " << t.theta << "\n";
	}
}

inline Method to_method(MethodChoice m) {
	switch (m) {
	case MethodChoice::Recurrence: return Method::Recurrence;
	case MethodChoice::Division: return Method::Division;
	default: return Method::Determinant;
	}
}

inline int run_compute(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
	const RationalFunction rf = parse_rational_function(inv.expression);
	const AsymptoteOptions opts{.keep_matrices = inv.show_matrices};

	std::vector<AsymptoteResult> results;
	if (inv.method == MethodChoice::All) {
		for (Method m : {Method::Determinant, Method::Recurrence, Method::Division})
			results.push_back(asymptote_of(rf, m, opts));
	} else {
		results.push_back(asymptote_of(rf, to_method(inv.method), opts));
	}
	const AsymptoteResult& primary = results.front();
	bool agree = true;
	for (const auto& r : results)
		agree = agree && r.asymptote == primary.asymptote && r.remainder == primary.remainder;

	const std::string method_name =
		inv.method == MethodChoice::All ? std::string("all") : std::string(to_string(primary.method));

	if (inv.format == Style::Json) {
		nlohmann::json traces = nlohmann::json::array();
		for (const auto& t : primary.traces)
			traces.push_back(trace_json(t, inv.show_matrices));
		nlohmann::json doc = {{"input", inv.expression},
		                      {"k", gap_json(rf)},
		                      {"proper_fraction", primary.proper_fraction},
		                      {"asymptote", to_json(primary.asymptote)},
		                      {"remainder", to_json(primary.remainder)},
		                      {"method", method_name},
		                      {"traces", std::move(traces)}};
		if (inv.method == MethodChoice::All) {
			doc["agree"] = agree;
			nlohmann::json per_method = nlohmann::json::object();
			for (const auto& r : results)
				per_method[std::string(to_string(r.method))] = to_json(r.asymptote);
			doc["methods"] = std::move(per_method);
		}
		out << doc.dump(2) << "\n";
	} else if (inv.format == Style::LaTeX) {
		out << "f(x) = " << latex_function(rf) << "\n";
		if (inv.show_matrices)
			print_traces(out, rf, primary, Style::LaTeX);
		for (const auto& r : results) {
			if (results.size() > 1)
				out << "% " << to_string(r.method) << "\n";
			out << "g(x) = " << format_polynomial(r.asymptote, Style::LaTeX) << "\n";
		}
		out << "r(x) = " << format_polynomial(primary.remainder, Style::LaTeX) << "\n";
	} else {
		out << "f(x) = " << format_rational_function(rf) << "\n";
		if (auto k = rf.k())
			out << "k: " << *k << " (" << gap_name(rf) << ")\n";
		else
			out << "k: undefined (" << gap_name(rf) << ")\n";
		if (inv.show_matrices)
			print_traces(out, rf, primary, Style::Text);
		if (results.size() == 1) {
			out << "asymptote: " << format_polynomial(primary.asymptote) << "\n";
		} else {
			for (const auto& r : results)
				out << "asymptote (" << to_string(r.method) << "): " << format_polynomial(r.asymptote) << "\n";
		}
		out << "remainder: " << format_polynomial(primary.remainder) << "\n";
		out << "method: " << method_name << "\n";
	}

	if (!agree) {
		err << "error: methods disagree\n";
		return CheckFailed;
	}
	return Success;
}

inline int run_verify(const CliInvocation& inv, std::ostream& out, std::ostream&) {
	const RationalFunction rf = parse_rational_function(inv.expression);
	const CrossValidation cv = cross_validate(rf);

	if (inv.format == Style::Json) {
		nlohmann::json doc = {{"input", inv.expression},
		                      {"pass", cv.passed},
		                      {"asymptote", to_json(cv.asymptote)},
		                      {"remainder", to_json(cv.remainder)},
		                      {"failures", cv.failures},
		                      {"det_oracle_checks", cv.det_oracle_checks},
		                      {"lemma22_checks", cv.lemma22_checks},
		                      {"lemma21_checks", cv.lemma21_checks}};
		out << doc.dump(2) << "\n";
	} else {
		const Style style = inv.format;
		if (cv.passed) {
			out << "all methods agree: " << format_polynomial(cv.asymptote, style);
			if (cv.proper_fraction)
				out << " (proper fraction)";
			out << "\n";
		} else {
			out << "verification FAILED\n";
			for (const auto& f : cv.failures)
				out << "  " << f << "\n";
		}
		out << "checks: " << cv.methods_compared << " methods, " << cv.det_oracle_checks << " determinant oracle, "
		    << cv.lemma22_checks << " recurrence, " << cv.lemma21_checks << " cancellation\n";
	}
	return cv.passed ? Success : CheckFailed;
}

inline int run_fuzz(const CliInvocation& inv, std::ostream& out, std::ostream&) {
	const CampaignReport rep = run_campaign(inv.fuzz_config, inv.threads);
	if (inv.format == Style::Json) {
		out << to_json(rep).dump(2) << "\n";
	} else {
		const double secs = std::chrono::duration<double>(rep.elapsed).count();
		out << "trials: " << rep.trials_run << "\n"
		    << "failures: " << rep.failures.size() << "\n"
		    << "determinant oracle checks: " << rep.det_oracle_checks << "\n"
		    << "recurrence checks: " << rep.lemma22_checks << "\n"
		    << "cancellation checks: " << rep.lemma21_checks << "\n"
		    << "elapsed: " << std::fixed << std::setprecision(3) << secs << " s\n";
		for (const auto& f : rep.failures)
			out << "FAIL " << f.input << ": " << f.detail << "\n";
	}
	return rep.passed() ? Success : CheckFailed;
}

/// Largest numerator/denominator bit length among the values a method produced.
inline std::size_t peak_bits(const AsymptoteResult& r) {
	std::size_t bits = 0;
	for (const auto& t : r.traces)
		bits = std::max({bits, t.theta.bit_length(), t.theta_prime.bit_length(), t.det_value.bit_length()});
	for (const auto& c : r.asymptote.coeffs())
		bits = std::max(bits, c.bit_length());
	for (const auto& c : r.remainder.coeffs())
		bits = std::max(bits, c.bit_length());
	return bits;
}

inline int run_bench(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
	struct Row {
		std::int64_t degree;
		std::int64_t k;
		Method method;
		double seconds;
		std::size_t bits;
	};
	std::vector<Row> rows;
	bool agree = true;
	for (std::int64_t d : inv.bench_degrees) {
		if (d < 0)
			throw CLI::ValidationError("--degrees", "degrees must be non-negative");
		auto rng = trial_rng(inv.bench_seed, static_cast<std::uint64_t>(d));
		Polynomial num = asympoly::detail::random_polynomial(rng, d, inv.bench_coeff_bound);
		Polynomial den = asympoly::detail::random_polynomial(rng, d / 2, inv.bench_coeff_bound);
		const RationalFunction rf(std::move(num), std::move(den));

		std::optional<Polynomial> reference;
		for (Method m : {Method::Determinant, Method::Recurrence, Method::Division}) {
			double best = 0;
			AsymptoteResult res;
			for (unsigned rep = 0; rep < std::max(1u, inv.bench_repeats); ++rep) {
				const auto t0 = std::chrono::steady_clock::now();
				res = asymptote_of(rf, m);
				const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
				best = rep == 0 ? s : std::min(best, s);
			}
			if (!reference)
				reference = res.asymptote;
			else if (*reference != res.asymptote)
				agree = false;
			rows.push_back({d, *rf.k(), m, best, peak_bits(res)});
		}
	}

	if (inv.format == Style::Json) {
		nlohmann::json arr = nlohmann::json::array();
		for (const auto& r : rows)
			arr.push_back({{"degree", r.degree},
			               {"k", r.k},
			               {"method", to_string(r.method)},
			               {"seconds", r.seconds},
			               {"peak_bits", r.bits}});
		out << nlohmann::json{{"rows", std::move(arr)}, {"agree", agree}}.dump(2) << "\n";
	} else {
		out << std::left << std::setw(8) << "degree" << std::setw(6) << "k" << std::setw(14) << "method"
		    << std::right << std::setw(14) << "time_us" << std::setw(12) << "peak_bits" << "\n";
		for (const auto& r : rows)
			out << std::left << std::setw(8) << r.degree << std::setw(6) << r.k << std::setw(14) << to_string(r.method)
			    << std::right << std::setw(14) << std::fixed << std::setprecision(1) << r.seconds * 1e6
			    << std::setw(12) << r.bits << "\n";
	}
	if (!agree) {
		err << "error: methods disagree\n";
		return CheckFailed;
	}
	return Success;
}

inline void caret_diagnostic(std::ostream& err, const std::string& input, const ParseError& e) {
	err << "error: " << e.what() << "\n  " << input << "\n  " << std::string(e.position(), ' ') << "^\n";
}

}  // namespace detail

/// Entry point. argv[0] is the program name. Output documents go to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 1 failed check, 2 usage or
/// parse error, 3 semantic error (zero denominator).
inline int run_cli(std::span<const std::string> argv, std::ostream& out, std::ostream& err) {
	CLI::App app{"Exact horizontal, oblique and curvilinear asymptotes of rational functions", "asympoly"};
	app.require_subcommand(1);

	CliInvocation inv;
	const std::map<std::string, Style> formats{{"text", Style::Text}, {"json", Style::Json}, {"latex", Style::LaTeX}};
	const std::map<std::string, MethodChoice> methods{{"determinant", MethodChoice::Determinant},
	                                                  {"recurrence", MethodChoice::Recurrence},
	                                                  {"division", MethodChoice::Division},
	                                                  {"all", MethodChoice::All}};
	auto add_format = [&](CLI::App* sub) {
		sub->add_option("--format", inv.format, "Output format: text, json or latex")
			->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
	};

	auto* compute = app.add_subcommand("compute", "Compute the asymptote of a rational function");
	compute->add_option("expression", inv.expression, "e.g. \"(8x^3+7)/(x-4)\"")->required();
	compute->add_option("--method", inv.method, "determinant, recurrence, division or all")
		->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
	compute->add_flag("--show-matrices", inv.show_matrices, "Print each coefficient matrix, determinant and theta");
	add_format(compute);

	auto* verify = app.add_subcommand("verify", "Cross-check every method and identity on one input");
	verify->add_option("expression", inv.expression)->required();
	add_format(verify);

	auto* fuzz = app.add_subcommand("fuzz", "Randomised cross-validation campaign");
	fuzz->add_option("--trials", inv.fuzz_config.trials)->required()->check(CLI::PositiveNumber);
	fuzz->add_option("--max-degree", inv.fuzz_config.max_degree)->required()->check(CLI::PositiveNumber);
	fuzz->add_option("--coeff-bound", inv.fuzz_config.coeff_bound)->required()->check(CLI::PositiveNumber);
	fuzz->add_option("--seed", inv.fuzz_config.seed)->required();
	inv.fuzz_config.allow_equal_degrees = false;
	fuzz->add_flag("--allow-equal-degrees", inv.fuzz_config.allow_equal_degrees);
	fuzz->add_option("--threads", inv.threads, "Worker threads (results do not depend on it)")
		->check(CLI::PositiveNumber);
	add_format(fuzz);

	auto* bench = app.add_subcommand("bench", "Time the three methods on random inputs of growing degree");
	bench->add_option("--degrees", inv.bench_degrees, "Comma-separated numerator degrees, e.g. 4,8,16,32")
		->required()
		->delimiter(',');
	bench->add_option("--coeff-bound", inv.bench_coeff_bound)->check(CLI::PositiveNumber);
	bench->add_option("--seed", inv.bench_seed);
	bench->add_option("--repeats", inv.bench_repeats, "Timed runs per method; the fastest is reported")
		->check(CLI::PositiveNumber);
	add_format(bench);

	try {
		// CLI11 consumes a reversed argument vector
		std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
		std::reverse(args.begin(), args.end());
		app.parse(args);
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return Success;
	} catch (const CLI::CallForAllHelp&) {
		out << app.help("", CLI::AppFormatMode::All);
		return Success;
	} catch (const CLI::ParseError& e) {
		err << "error: " << e.what() << "\n\n" << app.help();
		return UsageError;
	}

	if (compute->parsed())
		inv.command = Command::Compute;
	else if (verify->parsed())
		inv.command = Command::Verify;
	else if (fuzz->parsed())
		inv.command = Command::Fuzz;
	else
		inv.command = Command::Bench;

	try {
		switch (inv.command) {
		case Command::Compute: return detail::run_compute(inv, out, err);
		case Command::Verify: return detail::run_verify(inv, out, err);
		case Command::Fuzz: return detail::run_fuzz(inv, out, err);
		case Command::Bench: return detail::run_bench(inv, out, err);
		}
	} catch (const ParseError& e) {
		detail::caret_diagnostic(err, inv.expression, e);
		return UsageError;
	} catch (const SemanticError& e) {
		err << "error: " << e.what() << "\n";
		return SemanticFailure;
	} catch (const CLI::ValidationError& e) {
		err << "error: " << e.what() << "\n";
		return UsageError;
	} catch (const std::invalid_argument& e) {
		err << "error: " << e.what() << "\n";
		return UsageError;
	}
	return UsageError;
}

}  // namespace asympoly::cli

#endif  // ASYMPOLY_CLI_HPP
