// Acceptance suite: one line per criterion, exit status 0 only if all pass.
// Each criterion checks its exact values and its wall-clock budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cfdiag/continued_fraction.hpp"
#include "cfdiag/decimal_expansion.hpp"
#include "cfdiag/diagonalization.hpp"
#include "cfdiag/enumeration.hpp"

using namespace cfdiag;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_ms;
    std::function<std::string()> check;  // empty string on success, reason otherwise
};

Rational q(long long p, long long d) { return make_rational(p, d); }

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

std::string ac1() {
    const ContinuedFraction cf = from_rational(q(6, 7));
    if (cf.to_string() != "[0; 1, 6]") return "got " + cf.to_string();
    return expect(cf.to_spaced_string() == "0 1 6", "spaced form " + cf.to_spaced_string());
}

// Each of the three expansions has its own 1 ms budget.
std::string ac2() {
    const auto timed = [](const Rational& x) {
        const auto start = std::chrono::steady_clock::now();
        DecimalExpansion e = expand(x);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return std::pair{std::move(e), ms};
    };
    for (const Rational& x : {q(1, 6), q(169, 550), q(6, 7)}) {
        if (timed(x).second > 1.0) return "expand(" + x.to_string() + ") over 1 ms";
    }
    const DecimalExpansion sixth = expand(q(1, 6));
    if (sixth.to_string() != "0.1(6)" || period_length(q(1, 6)).length != 1) return "1/6 -> " + sixth.to_string();
    const DecimalExpansion x = expand(q(169, 550));
    if (x.to_string() != "0.23(45)" || period_length(q(169, 550)).length != 2) return "169/550 -> " + x.to_string();
    const DecimalExpansion six_sevenths = expand(q(6, 7));
    return expect(six_sevenths.period == "857142", "6/7 period " + six_sevenths.period);
}

std::string ac3() {
    for (long long d = 2; d <= 2000; ++d) {
        const Rational x = q(1, d);
        if (period_length(x) != period_length_by_order(x)) return "disagree at 1/" + std::to_string(d);
    }
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> num(1, 1000000);
    std::uniform_int_distribution<long long> den(1, 2000);
    for (int i = 0; i < 1000; ++i) {
        const Rational x = q(num(rng), den(rng));
        if (period_length(x) != period_length_by_order(x)) return "disagree at " + x.to_string();
    }
    return "";
}

std::string ac4() {
    for (std::size_t len = 1; len <= 50; ++len) {
        const Rational found = find_period_at_least(len);
        const DecimalExpansion e = expand(found);
        if (e.period == "0" || e.period.size() < len) return "L=" + std::to_string(len) + " gave " + found.to_string();
    }
    return "";
}

std::string ac5() {
    const std::vector<BigInt> terms{3, 7, 15, 1};
    if (to_rational(terms) != q(355, 113)) return "value " + to_rational(terms).to_string();
    if (fractional_digit_budget(terms) != 4) return "digit budget " + std::to_string(fractional_digit_budget(terms));
    const Rational pi_proxy = make_rational(BigInt(3141592653589793LL), pow10(15));
    const ApproximationReport report = approximation_compare(pi_proxy, q(355, 113), make_rational(31416, 10000));
    if (report.closer != Closer::continued_fraction) return "3.1416 not beaten";
    return expect(report.cf_error < report.decimal_error, "error ordering");
}

std::string ac6() {
    const ContinuedFraction cf = from_real_approx(std::sqrt(2.0), 1e-9);
    if (cf[0] != 1) return "a0 = " + cf[0].str();
    std::size_t twos = 0;
    for (std::size_t i = 1; i < cf.size() && cf[i] == 2; ++i) ++twos;
    if (twos + 1 != cf.size()) return "not a prefix of [1; 2, 2, ...]: " + cf.to_string();
    if (twos < 8) return "only " + std::to_string(twos) + " twos";
    return expect((exact_value_of(std::sqrt(2.0)) - to_rational(cf)).abs() <= exact_value_of(1e-9), "eps violated");
}

std::string ac7() {
    CFStream e = named_cf_stream("e");
    const std::vector<BigInt> expected{2, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, 1};
    if (take(e, 13) != expected) return "pattern mismatch";
    const auto cs = convergents(named_cf_stream("e"), 12);
    const Rational proxy = make_rational(BigInt(2718281828459LL), pow10(12));
    return expect((cs.back().value - proxy).abs() <= q(1, 1000000), "convergent " + cs.back().value.to_string());
}

std::string ac8() {
    constexpr std::size_t depth = 500;
    RationalEnumeration cw = calkin_wilf();
    std::vector<DigitStream> rows;
    rows.reserve(depth);
    for (std::size_t i = 0; i < depth; ++i) rows.push_back(digits_of(cw.next()));
    const DecimalDiagonal result = decimal_diagonal(rows, depth);
    if (result.digits.size() != depth) return "short prefix";
    for (int d : result.digits) {
        if (d != 4 && d != 5) return "digit " + std::to_string(d);
    }
    const VerifyResult verified = verify_differs(result.digits, rows, depth);
    return expect(verified.differs, "matches row " + std::to_string(verified.first_counterexample.value_or(0)));
}

std::string ac9() {
    constexpr std::size_t depth = 100;
    const auto rows = irrational_enumeration(depth);
    const CFDiagonal result = cf_diagonal(rows, depth);
    for (const auto& w : result.witnesses) {
        if (w.constructed != w.enumerated + 1 || w.constructed < 2) return "position " + std::to_string(w.position);
    }
    return expect(verify_differs(result.terms, rows, depth).differs, "verify_differs failed");
}

std::string ac10() {
    const CFDiagonalFailure failure = cf_diagonal_over_rationals(calkin_wilf());
    if (failure.failing_index != 1) return "k = " + std::to_string(failure.failing_index);
    if (failure.cf.to_string() != "[1]") return "certificate " + failure.cf.to_string();
    return expect(from_rational(failure.value).tail_length() < failure.failing_index, "certificate does not verify");
}

std::string ac11() {
    for (long long p = 1; p <= 1000; ++p) {
        for (long long d = 1; d <= 1000; ++d) {
            const Rational x = q(p, d);
            if (to_rational(from_rational(x)) != x) return "CF round trip at " + x.to_string();
        }
    }
    for (long long p = 1; p <= 500; ++p) {
        for (long long d = 1; d <= 500; ++d) {
            const Rational x = q(p, d);
            if (reconstruct(expand(x)) != x) return "decimal round trip at " + x.to_string();
        }
    }
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> length(2, 30);
    std::uniform_int_distribution<long long> term(1, 1000);
    for (int i = 0; i < 200; ++i) {
        std::vector<BigInt> terms{BigInt(term(rng) - 1)};
        const int n = length(rng);
        for (int j = 1; j < n; ++j) terms.emplace_back(term(rng));
        const auto cs = convergents(terms, terms.size());
        for (std::size_t k = 1; k < cs.size(); ++k) {
            const Rational& a = cs[k - 1].value;
            const Rational& b = cs[k].value;
            const BigInt det = b.numerator() * a.denominator() - a.numerator() * b.denominator();
            if (det != (k % 2 == 1 ? 1 : -1)) return "determinant " + det.str() + " at k=" + std::to_string(k);
        }
    }
    return "";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "CF of 6/7 is [0; 1, 6], spaced \"0 1 6\"", 1.0, ac1},
        {2, "periods of 1/6, 169/550, 6/7", 3.0, ac2},
        {3, "long-division period equals multiplicative-order period", 10000.0, ac3},
        {4, "find_period_at_least(L) for L = 1..50", 30000.0, ac4},
        {5, "[3; 7, 15, 1] = 355/113, 4 digits, closer to pi than 3.1416", 1.0, ac5},
        {6, "sqrt2 to 1e-9 is [1; 2, 2, ...] with >= 8 twos", 10.0, ac6},
        {7, "e pattern and length-12 convergent within 1e-6", 10.0, ac7},
        {8, "decimal diagonal over 500 Calkin-Wilf rationals", 5000.0, ac8},
        {9, "CF diagonal over 100 metallic means", 1000.0, ac9},
        {10, "CF diagonal over Calkin-Wilf fails at k = 1", 1.0, ac10},
        {11, "round-trip and determinant property suites", 30000.0, ac11},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string reason;
        const auto start = std::chrono::steady_clock::now();
        try {
            reason = c.check();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (reason.empty() && ms > c.budget_ms) reason = "over time budget";
        const bool ok = reason.empty();
        if (!ok) ++failures;
        std::printf("[%s] AC%-2d %-62s %10.3f ms (limit %.0f ms)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), ms,
                    c.budget_ms, ok ? "" : "  -- ", reason.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
