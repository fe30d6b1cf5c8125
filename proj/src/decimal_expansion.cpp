#include "cfdiag/decimal_expansion.hpp"

#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace cfdiag {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exponent, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exponent != 0) {
        if (exponent & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exponent >>= 1U;
    }
    return result;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> factors;
    for (u64 p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        factors.emplace_back(p, k);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Carmichael function of an odd modulus.
u64 carmichael_odd(u64 n) {
    u64 lambda = 1;
    for (const auto& [p, k] : factorize(n)) {
        u64 term = p - 1;
        for (unsigned i = 1; i < k; ++i) term *= p;
        lambda = lambda / gcd_u64(lambda, term) * term;
    }
    return lambda;
}

u64 order_by_carmichael(u64 m) {
    if (m == 1) return 1;
    u64 order = carmichael_odd(m);
    for (const auto& [q, k] : factorize(order)) {
        (void)k;
        while (order % q == 0 && pow_mod(10, order / q, m) == 1) order /= q;
    }
    return order;
}

void check_digits(const std::string& block, const char* what) {
    for (char c : block) {
        if (c < '0' || c > '9') throw std::domain_error(std::string("non-digit character in ") + what);
    }
}

BigInt digits_value(const std::string& block) { return block.empty() ? BigInt(0) : parse_integer(block); }

}  // namespace

std::string DecimalExpansion::to_string() const {
    return integer_part.str() + "." + preperiod + "(" + period + ")";
}

std::string DecimalExpansion::unrolled(std::size_t count) const {
    std::string out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        out += j < preperiod.size() ? preperiod[j] : period[(j - preperiod.size()) % period.size()];
    }
    return out;
}

DecimalExpansion expand(const Rational& x) {
    if (x.sign() < 0) throw std::domain_error("negative input");
    const BigInt& den = x.denominator();
    DecimalExpansion e;
    BigInt remainder;
    boost::multiprecision::divide_qr(x.numerator(), den, e.integer_part, remainder);

    std::string digits;
    std::map<BigInt, std::size_t> seen;  // remainder -> position of the digit it produces
    while (true) {
        const auto [it, inserted] = seen.emplace(remainder, digits.size());
        if (!inserted) {
            e.preperiod = digits.substr(0, it->second);
            e.period = digits.substr(it->second);
            return e;
        }
        remainder *= 10;
        BigInt digit;
        boost::multiprecision::divide_qr(BigInt(remainder), den, digit, remainder);
        digits += static_cast<char>('0' + digit.convert_to<int>());
    }
}

PeriodInfo period_length(const Rational& x) {
    const DecimalExpansion e = expand(x);
    return {e.period.size(), e.preperiod.size(), e.period == "0"};
}

BigInt multiplicative_order_of_10(const BigInt& modulus) {
    if (modulus < 1) throw std::domain_error("modulus must be positive");
    if (modulus % 2 == 0 || modulus % 5 == 0) throw std::domain_error("modulus must be coprime to 10");
    if (modulus <= std::numeric_limits<u64>::max() / 2) return BigInt(order_by_carmichael(modulus.convert_to<u64>()));
    // Out of reach for trial division; iterate directly.
    BigInt order = 1;
    BigInt power = BigInt(10) % modulus;
    while (power != 1) {
        power = power * 10 % modulus;
        ++order;
    }
    return order;
}

PeriodInfo period_length_by_order(const Rational& x) {
    if (x.sign() < 0) throw std::domain_error("negative input");
    BigInt rest = x.denominator();
    std::size_t twos = 0;
    std::size_t fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    PeriodInfo info;
    info.preperiod = std::max(twos, fives);
    if (rest == 1) {
        info.length = 1;
        info.terminating = true;
        return info;
    }
    info.length = multiplicative_order_of_10(rest).convert_to<std::size_t>();
    return info;
}

int digit_at(const Rational& x, std::uint64_t j) {
    if (x.sign() < 0) throw std::domain_error("negative input");
    if (j == 0) throw std::domain_error("digit positions start at 1");
    const BigInt& den = x.denominator();
    const BigInt frac = x.numerator() % den;
    // Remainder before producing digit j is frac * 10^(j-1) mod den.
    const BigInt shift = boost::multiprecision::powm(BigInt(10), BigInt(j - 1), den);
    const BigInt r = frac * shift % den;
    return static_cast<int>(BigInt(r * 10 / den).convert_to<int>());
}

Rational reconstruct(const DecimalExpansion& e) {
    if (e.period.empty()) throw std::domain_error("empty period");
    if (e.integer_part < 0) throw std::domain_error("negative integer part");
    check_digits(e.preperiod, "preperiod");
    check_digits(e.period, "period");
    const BigInt shift = pow10(e.preperiod.size());
    const BigInt repunit = pow10(e.period.size()) - 1;
    return Rational(e.integer_part) + Rational(digits_value(e.preperiod), shift) +
           Rational(digits_value(e.period), shift * repunit);
}

Rational find_period_at_least(std::size_t min_length) {
    if (min_length == 0) throw std::domain_error("period length bound must be positive");
    for (BigInt d = 3;; d += 2) {
        if (d % 5 == 0) continue;
        if (multiplicative_order_of_10(d) < min_length) continue;
        Rational found(BigInt(1), d);
        if (period_length(found).length < min_length) {
            throw std::logic_error("order and long division disagree for 1/" + d.str());
        }
        return found;
    }
}

DecimalExpansion parse_expansion(std::string_view text) {
    const auto fail = [&]() { return std::invalid_argument("malformed expansion: '" + std::string(text) + "'"); };
    const auto dot = text.find('.');
    const auto open = text.find('(');
    if (dot == std::string_view::npos || open == std::string_view::npos || open < dot || text.size() < open + 3 ||
        text.back() != ')') {
        throw fail();
    }
    const std::string_view whole = text.substr(0, dot);
    DecimalExpansion e;
    e.preperiod = std::string(text.substr(dot + 1, open - dot - 1));
    e.period = std::string(text.substr(open + 1, text.size() - open - 2));
    if (whole.empty() || whole.front() == '-') throw fail();
    try {
        e.integer_part = parse_integer(whole);
        check_digits(e.preperiod, "preperiod");
        check_digits(e.period, "period");
    } catch (const std::exception&) {
        throw fail();
    }
    return e;
}

}  // namespace cfdiag
