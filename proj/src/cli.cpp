#include "cfdiag/cli.hpp"

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>

#include "cfdiag/continued_fraction.hpp"
#include "cfdiag/decimal_expansion.hpp"
#include "cfdiag/diagonalization.hpp"
#include "cfdiag/enumeration.hpp"

namespace cfdiag::cli {

namespace {

constexpr std::size_t default_depth = 20;
constexpr double default_eps = 1e-9;

const char* const pi_proxy = "3141592653589793/1000000000000000";

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool is_stream_name(const std::string& source) {
    return source == "sqrt2" || source == "e" || source == "phi" || source == "pi" || source.starts_with("metallic:");
}

std::vector<DigitStream> cw_digit_rows(std::size_t depth) {
    RationalEnumeration e = calkin_wilf();
    std::vector<DigitStream> rows;
    rows.reserve(depth);
    for (std::size_t i = 0; i < depth; ++i) rows.push_back(digits_of(e.next()));
    return rows;
}

template <typename Entry>
void print_witnesses(std::ostream& out, const std::vector<DiagonalWitness<Entry>>& witnesses, bool tsv,
                     const std::string& diag_label, const std::string& pick_label) {
    if (tsv) {
        for (const auto& w : witnesses) out << w.position << '\t' << w.enumerated << '\t' << w.constructed << '\n';
        return;
    }
    out << std::left << std::setw(6) << "k" << std::setw(8) << diag_label << std::setw(8) << pick_label << "differs\n";
    for (const auto& w : witnesses) {
        std::ostringstream diag;
        std::ostringstream pick;
        diag << w.enumerated;
        pick << w.constructed;
        out << std::left << std::setw(6) << w.position << std::setw(8) << diag.str() << std::setw(8) << pick.str()
            << (w.differs() ? "yes" : "no") << '\n';
    }
}

Rational parse_rational_or_cf(const std::string& text) {
    if (!text.empty() && text.front() == '[') return to_rational(parse_cf_terms(text));
    return parse_rational(text);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact continued fractions, repeating decimals and diagonal constructions", "cfdiag"};
    app.require_subcommand(1);
    std::function<void()> action;

    // cf ------------------------------------------------------------------
    auto* cf = app.add_subcommand("cf", "Continued fractions");
    cf->require_subcommand(1);

    std::string cf_rational;
    std::string cf_format = "bracket";
    auto* cf_from_rational = cf->add_subcommand("from-rational", "Continued fraction of P/Q");
    cf_from_rational->add_option("rational", cf_rational, "P/Q, nonnegative")->required();
    cf_from_rational->add_option("--format", cf_format, "bracket or space")
        ->check(CLI::IsMember({"bracket", "space"}));
    cf_from_rational->callback([&] {
        action = [&] {
            const ContinuedFraction result = from_rational(parse_rational(cf_rational));
            out << (cf_format == "space" ? result.to_spaced_string() : result.to_string()) << '\n';
        };
    });

    std::string cf_literal;
    auto* cf_to_rational = cf->add_subcommand("to-rational", "Exact value of a continued fraction");
    cf_to_rational->add_option("cf", cf_literal, "\"[a0; a1, ...]\" or \"a0 a1 ...\"")->required();
    cf_to_rational->callback([&] { action = [&] { out << to_rational(parse_cf_terms(cf_literal)) << '\n'; }; });

    double real_input = 0.0;
    double eps = default_eps;
    auto* cf_from_real = cf->add_subcommand("from-real", "Continued fraction of a machine real to within eps");
    cf_from_real->add_option("x", real_input, "positive real")->required()->check(CLI::PositiveNumber);
    cf_from_real->add_option("--eps", eps, "tolerance (default 1e-9)")->check(CLI::PositiveNumber);
    cf_from_real->callback([&] { action = [&] { out << from_real_approx(real_input, eps).to_string() << '\n'; }; });

    std::string convergent_source;
    std::size_t convergent_count = 0;
    auto* cf_convergents = cf->add_subcommand("convergents", "Convergents of a continued fraction or named stream");
    cf_convergents->add_option("source", convergent_source, "CF literal or sqrt2|e|phi|pi|metallic:<k>")->required();
    auto* count_opt = cf_convergents->add_option("--count", convergent_count,
                                                 "number of convergents (default: all terms, or 20 for streams)")
                          ->check(CLI::PositiveNumber);
    cf_convergents->callback([&] {
        action = [&] {
            std::vector<Convergent> result;
            if (is_stream_name(convergent_source)) {
                const std::size_t count = count_opt->count() != 0 ? convergent_count : default_depth;
                result = convergents(named_cf_stream(convergent_source), count);
            } else {
                const std::vector<BigInt> terms = parse_cf_terms(convergent_source);
                const std::size_t count = count_opt->count() != 0 ? convergent_count : terms.size();
                result = convergents(terms, count);
            }
            for (const auto& c : result) out << c.index << '\t' << c.value << '\n';
        };
    });

    std::string budget_literal;
    auto* cf_budget = cf->add_subcommand("digit-budget", "Decimal digits used by a1..an");
    cf_budget->add_option("cf", budget_literal, "CF literal")->required();
    cf_budget->callback([&] {
        action = [&] {
            const std::vector<BigInt> terms = parse_cf_terms(budget_literal);
            to_rational(terms);  // validates the terms
            out << fractional_digit_budget(terms) << '\n';
        };
    });

    // decimal -------------------------------------------------------------
    auto* decimal = app.add_subcommand("decimal", "Repeating decimal expansions");
    decimal->require_subcommand(1);

    std::string decimal_rational;
    auto* decimal_expand = decimal->add_subcommand("expand", "Expansion w.uu(vv) of P/Q");
    decimal_expand->add_option("rational", decimal_rational, "P/Q, nonnegative")->required();
    decimal_expand->callback([&] { action = [&] { out << expand(parse_rational(decimal_rational)).to_string() << '\n'; }; });

    auto* decimal_period = decimal->add_subcommand("period", "Period and preperiod length of P/Q");
    decimal_period->add_option("rational", decimal_rational, "P/Q, nonnegative")->required();
    decimal_period->callback([&] {
        action = [&] {
            const PeriodInfo info = period_length(parse_rational(decimal_rational));
            out << "period length " << info.length << ", preperiod " << info.preperiod
                << (info.terminating ? ", terminating" : "") << '\n';
        };
    });

    std::uint64_t digit_position = 1;
    auto* decimal_digit = decimal->add_subcommand("digit", "j-th fractional digit of P/Q");
    decimal_digit->add_option("rational", decimal_rational, "P/Q, nonnegative")->required();
    decimal_digit->add_option("position", digit_position, "j >= 1")->required()->check(CLI::PositiveNumber);
    decimal_digit->callback([&] {
        action = [&] { out << digit_at(parse_rational(decimal_rational), digit_position) << '\n'; };
    });

    std::size_t min_period = 1;
    auto* decimal_find = decimal->add_subcommand("find-period", "Smallest 1/d with period length >= L");
    decimal_find->add_option("L", min_period, "minimum period length")->required()->check(CLI::PositiveNumber);
    decimal_find->callback([&] {
        action = [&] {
            const Rational found = find_period_at_least(min_period);
            out << found << " (period length " << period_length(found).length << ")\n";
        };
    });

    // diag ----------------------------------------------------------------
    auto* diag = app.add_subcommand("diag", "Diagonal constructions");
    diag->require_subcommand(1);

    std::size_t depth = default_depth;
    std::string diag_format = "table";
    auto* diag_decimal = diag->add_subcommand("decimal", "Decimal diagonal over the Calkin-Wilf rationals");
    diag_decimal->add_option("--depth", depth, "rows and digits (default 20)")->check(CLI::PositiveNumber);
    diag_decimal->add_option("--format", diag_format, "table or tsv")->check(CLI::IsMember({"table", "tsv"}));
    diag_decimal->callback([&] {
        action = [&] {
            const auto rows = cw_digit_rows(depth);
            const DecimalDiagonal result = decimal_diagonal(rows, depth);
            print_witnesses(out, result.witnesses, diag_format == "tsv", "d_kk", "d_0k");
            if (diag_format == "table") {
                out << "r0 = " << result.integer_part << '.';
                for (int d : result.digits) out << d;
                out << "...\n";
            }
        };
    });

    std::string cf_source = "irrationals";
    auto* diag_cf = diag->add_subcommand("cf", "Continued-fraction diagonal");
    diag_cf->add_option("--source", cf_source, "irrationals (metallic means) or rationals (Calkin-Wilf)")
        ->check(CLI::IsMember({"irrationals", "rationals"}));
    diag_cf->add_option("--depth", depth, "rows and terms (default 20)")->check(CLI::PositiveNumber);
    diag_cf->add_option("--format", diag_format, "table or tsv")->check(CLI::IsMember({"table", "tsv"}));
    diag_cf->callback([&] {
        action = [&] {
            if (cf_source == "rationals") {
                out << describe(cf_diagonal_over_rationals(calkin_wilf())) << '\n';
                return;
            }
            const auto rows = irrational_enumeration(depth);
            const CFDiagonal result = cf_diagonal(rows, depth);
            print_witnesses(out, result.witnesses, diag_format == "tsv", "a_kk", "a_0k");
            if (diag_format == "table") {
                const std::string prefix = format_cf_terms(result.terms);
                out << "r0 = " << prefix.substr(0, prefix.size() - 1) << ", ...]\n";
            }
        };
    });

    std::size_t max_preperiod = 0;
    std::size_t max_period = 1;
    auto* diag_analyze = diag->add_subcommand("analyze", "Periodicity rulings for the diagonal of the Calkin-Wilf rationals");
    diag_analyze->add_option("--depth", depth, "digits of f0 (default 20)")->check(CLI::PositiveNumber);
    diag_analyze->add_option("--max-preperiod", max_preperiod, "largest preperiod tested")->required();
    diag_analyze->add_option("--max-period", max_period, "largest period tested")->required()->check(CLI::PositiveNumber);
    diag_analyze->callback([&] {
        action = [&] {
            if (depth < max_preperiod + 2 * max_period) {
                throw usage_error("--depth must be at least max-preperiod + 2*max-period");
            }
            const PeriodicityReport report = rational_diagonal_analysis(calkin_wilf(), depth, max_preperiod, max_period);
            out << "f0 = 0.";
            for (int d : report.digits) out << d;
            out << "...\n";
            std::size_t ruled = 0;
            for (const auto& r : report.rulings) {
                out << "preperiod " << r.preperiod << ", period " << r.period << ": ";
                if (r.consistent) {
                    out << "consistent\n";
                } else {
                    ++ruled;
                    const std::size_t j = *r.witness_position;
                    out << "ruled out (d_" << j << " = " << report.digits[j - 1] << ", d_" << j + r.period << " = "
                        << report.digits[j + r.period - 1] << ")\n";
                }
            }
            out << ruled << " of " << report.rulings.size() << " pairs ruled out\n";
        };
    });

    // approx --------------------------------------------------------------
    auto* approx = app.add_subcommand("approx", "Approximation comparisons");
    approx->require_subcommand(1);

    std::string target_text = pi_proxy;
    std::string cf_approx_text = "[3; 7, 15, 1]";
    std::string decimal_approx_text = "31416/10000";
    auto* approx_compare = approx->add_subcommand("compare", "Which approximation is closer, exactly");
    approx_compare->add_option("--target", target_text, "P/Q or CF literal (default: 16-digit pi)");
    approx_compare->add_option("--cf", cf_approx_text, "P/Q or CF literal (default: [3; 7, 15, 1])");
    approx_compare->add_option("--decimal", decimal_approx_text, "P/Q or CF literal (default: 31416/10000)");
    approx_compare->callback([&] {
        action = [&] {
            const Rational target = parse_rational_or_cf(target_text);
            const Rational cf_value = parse_rational_or_cf(cf_approx_text);
            const Rational decimal_value = parse_rational_or_cf(decimal_approx_text);
            const ApproximationReport report = approximation_compare(target, cf_value, decimal_value);
            out << "target: " << target << '\n';
            out << "cf: " << cf_value << ", error " << report.cf_error << '\n';
            out << "decimal: " << decimal_value << ", error " << report.decimal_error << '\n';
            switch (report.closer) {
                case Closer::continued_fraction: out << "closer: cf\n"; break;
                case Closer::decimal: out << "closer: decimal\n"; break;
                case Closer::tie: out << "closer: tie\n"; break;
            }
        };
    });

    // stream --------------------------------------------------------------
    std::string stream_name;
    std::size_t stream_count = default_depth;
    auto* stream = app.add_subcommand("stream", "First terms of a named stream");
    stream->add_option("name", stream_name, "sqrt2|e|phi|pi|metallic:<k>|cw")->required();
    stream->add_option("--count", stream_count, "number of terms (default 20)")->check(CLI::PositiveNumber);
    stream->callback([&] {
        action = [&] {
            if (stream_name == "cw") {
                RationalEnumeration e = calkin_wilf();
                for (std::size_t i = 0; i < stream_count; ++i) out << (i == 0 ? "" : " ") << e.next();
                out << '\n';
                return;
            }
            if (!is_stream_name(stream_name)) throw usage_error("unknown stream name: '" + stream_name + "'");
            CFStream s = named_cf_stream(stream_name);
            out << format_cf_terms(take(s, stream_count)) << '\n';
        };
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cfdiag");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (action) action();
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}

}  // namespace cfdiag::cli
