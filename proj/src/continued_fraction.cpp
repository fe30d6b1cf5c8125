#include "cfdiag/continued_fraction.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cfdiag/enumeration.hpp"

namespace cfdiag {

namespace {

void check_terms(std::span<const BigInt> terms) {
    if (terms.empty()) throw std::domain_error("invalid partial quotient: empty continued fraction");
    if (terms.front() < 0) throw std::domain_error("invalid partial quotient: a0 < 0");
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i] < 1) throw std::domain_error("invalid partial quotient: a" + std::to_string(i) + " < 1");
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string ContinuedFraction::to_string() const { return format_cf_terms(terms_); }

std::string ContinuedFraction::to_spaced_string() const {
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += ' ';
        out += t.str();
    }
    return out;
}

ContinuedFraction canonicalize(std::vector<BigInt> terms) {
    check_terms(terms);
    if (terms.size() >= 2 && terms.back() == 1) {
        terms.pop_back();
        terms.back() += 1;
    }
    return ContinuedFraction(std::move(terms));
}

ContinuedFraction from_rational(const Rational& x) {
    if (x.sign() < 0) throw std::domain_error("negative input");
    std::vector<BigInt> terms;
    BigInt num = x.numerator();
    BigInt den = x.denominator();
    do {
        BigInt q;
        BigInt r;
        boost::multiprecision::divide_qr(num, den, q, r);
        terms.push_back(std::move(q));
        num = std::move(den);
        den = std::move(r);
    } while (den != 0);
    // The Euclidean sequence already ends in a term >= 2 (or has length 1).
    return canonicalize(std::move(terms));
}

Rational to_rational(std::span<const BigInt> terms) {
    check_terms(terms);
    // Fold from the back: value = a_k + 1/value.
    BigInt num = terms.back();
    BigInt den = 1;
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
        BigInt next = *it * num + den;
        den = std::move(num);
        num = std::move(next);
    }
    return Rational(std::move(num), std::move(den));
}

Rational to_rational(const ContinuedFraction& cf) { return to_rational(cf.terms()); }

std::vector<Convergent> convergents(std::span<const BigInt> terms, std::size_t count) {
    if (count == 0) throw std::invalid_argument("convergent count must be positive");
    if (count > terms.size()) {
        throw std::out_of_range("requested " + std::to_string(count) + " convergents of a continued fraction with " +
                                std::to_string(terms.size()) + " terms");
    }
    check_terms(terms.first(count));
    std::vector<Convergent> out;
    out.reserve(count);
    // h_{-1}/k_{-1} = 1/0, h_{-2}/k_{-2} = 0/1
    BigInt h_prev = 1, k_prev = 0;
    BigInt h_prev2 = 0, k_prev2 = 1;
    for (std::size_t i = 0; i < count; ++i) {
        BigInt h = terms[i] * h_prev + h_prev2;
        BigInt k = terms[i] * k_prev + k_prev2;
        out.push_back({i, Rational(h, k)});
        h_prev2 = std::move(h_prev);
        k_prev2 = std::move(k_prev);
        h_prev = std::move(h);
        k_prev = std::move(k);
    }
    return out;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count) {
    return convergents(std::span<const BigInt>(cf.terms()), count);
}

std::vector<Convergent> convergents(const CFStream& source, std::size_t count) {
    if (count == 0) throw std::invalid_argument("convergent count must be positive");
    CFStream stream = source;
    return convergents(take(stream, count), count);
}

Rational exact_value_of(double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite real input");
    if (x == 0.0) return Rational();
    int exponent = 0;
    double mantissa = std::frexp(x, &exponent);
    constexpr int digits = std::numeric_limits<double>::digits;
    // mantissa * 2^digits is an exact integer.
    const auto scaled = static_cast<long long>(std::ldexp(mantissa, digits));
    exponent -= digits;
    BigInt num = scaled;
    BigInt den = 1;
    if (exponent >= 0) {
        num <<= exponent;
    } else {
        den <<= -exponent;
    }
    return Rational(std::move(num), std::move(den));
}

ContinuedFraction from_real_approx(double x, double eps) {
    if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
    if (!(x > 0.0)) throw std::domain_error("input must be positive");
    const Rational target = exact_value_of(x);
    const Rational tolerance = exact_value_of(eps);

    std::vector<BigInt> terms;
    Rational rest = target;
    while (true) {
        const BigInt a = rest.floor();
        terms.push_back(a);
        if ((target - to_rational(terms)).abs() <= tolerance) break;
        const Rational frac = rest - Rational(a);
        // A rational input runs out of quotients; the full list is then exact.
        if (frac.is_zero()) break;
        rest = reciprocal(frac);
    }
    return canonicalize(std::move(terms));
}

std::vector<BigInt> from_real_approx_floating(double x, double eps, std::size_t max_terms) {
    if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
    if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("input must be positive");
    std::vector<BigInt> terms;
    double rest = x;
    while (terms.size() < max_terms) {
        const double whole = std::floor(rest);
        terms.push_back(BigInt(static_cast<long long>(whole)));
        const Rational value = to_rational(terms);
        const double approx = value.numerator().convert_to<double>() / value.denominator().convert_to<double>();
        if (std::fabs(x - approx) <= eps) break;
        const double frac = rest - whole;
        if (frac == 0.0) break;
        rest = 1.0 / frac;
        if (!std::isfinite(rest) || rest >= 9.0e18) break;
    }
    return terms;
}

std::size_t fractional_digit_budget(std::span<const BigInt> terms) {
    std::size_t total = 0;
    for (std::size_t i = 1; i < terms.size(); ++i) total += decimal_digit_count(terms[i]);
    return total;
}

std::size_t fractional_digit_budget(const ContinuedFraction& cf) {
    return fractional_digit_budget(std::span<const BigInt>(cf.terms()));
}

ApproximationReport approximation_compare(const Rational& target, const Rational& cf_approx,
                                          const Rational& decimal_approx) {
    ApproximationReport report;
    report.cf_error = (target - cf_approx).abs();
    report.decimal_error = (target - decimal_approx).abs();
    const auto order = report.cf_error <=> report.decimal_error;
    if (order < 0) {
        report.closer = Closer::continued_fraction;
    } else if (order > 0) {
        report.closer = Closer::decimal;
    } else {
        report.closer = Closer::tie;
    }
    return report;
}

std::vector<BigInt> parse_cf_terms(std::string_view text) {
    const std::string_view body = trim(text);
    std::vector<BigInt> terms;
    auto push = [&](std::string_view token) {
        token = trim(token);
        if (token.empty()) throw std::invalid_argument("malformed continued fraction: '" + std::string(text) + "'");
        try {
            terms.push_back(parse_integer(token));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed continued fraction: '" + std::string(text) + "'");
        }
    };

    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("malformed continued fraction: '" + std::string(text) + "'");
        std::string_view inner = body.substr(1, body.size() - 2);
        const auto semi = inner.find(';');
        if (semi == std::string_view::npos) {
            push(inner);
            return terms;
        }
        push(inner.substr(0, semi));
        std::string_view rest = inner.substr(semi + 1);
        while (true) {
            const auto comma = rest.find(',');
            push(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        return terms;
    }

    std::string_view rest = body;
    while (!rest.empty()) {
        std::size_t end = 0;
        while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end]))) ++end;
        push(rest.substr(0, end));
        rest = trim(rest.substr(end));
    }
    if (terms.empty()) throw std::invalid_argument("malformed continued fraction: empty input");
    return terms;
}

std::string format_cf_terms(std::span<const BigInt> terms) {
    std::string out = "[";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 1) {
            out += "; ";
        } else if (i > 1) {
            out += ", ";
        }
        out += terms[i].str();
    }
    out += "]";
    return out;
}

}  // namespace cfdiag
