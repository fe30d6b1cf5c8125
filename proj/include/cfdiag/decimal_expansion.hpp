#ifndef CFDIAG_DECIMAL_EXPANSION_HPP
#define CFDIAG_DECIMAL_EXPANSION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "cfdiag/rational.hpp"

namespace cfdiag {

/// w.uuu(vvv): integer part, preperiod digits, period digits.
///
/// Digit blocks are strings over '0'..'9'. expand() produces the minimal
/// preperiod and period; terminating values carry the period "0".
struct DecimalExpansion {
    BigInt integer_part;
    std::string preperiod;
    std::string period;

    friend bool operator==(const DecimalExpansion&, const DecimalExpansion&) = default;

    /// "0.23(45)", "5.(0)".
    std::string to_string() const;

    /// Fractional digits d_1 .. d_count, the period repeated as needed.
    std::string unrolled(std::size_t count) const;
};

struct PeriodInfo {
    std::size_t length = 0;
    std::size_t preperiod = 0;
    bool terminating = false;

    friend bool operator==(const PeriodInfo&, const PeriodInfo&) = default;
};

/// Long division with remainder-cycle detection. Throws std::domain_error for x < 0.
DecimalExpansion expand(const Rational& x);

/// Period and preperiod lengths of expand(x); terminating values report length 1.
PeriodInfo period_length(const Rational& x);

/// Number-theoretic route: denominator = 2^a 5^b d', preperiod max(a, b),
/// period = multiplicative order of 10 modulo d'. Throws std::domain_error for x < 0.
PeriodInfo period_length_by_order(const Rational& x);

/// Least l >= 1 with 10^l == 1 (mod modulus). Requires gcd(modulus, 10) == 1
/// and modulus >= 1; throws std::domain_error otherwise.
BigInt multiplicative_order_of_10(const BigInt& modulus);

/// j-th fractional digit (j >= 1) via modular exponentiation.
/// Throws std::domain_error for x < 0 or j == 0.
int digit_at(const Rational& x, std::uint64_t j);

/// w + u / 10^p + v / (10^p (10^l - 1)). Accepts any well-formed digit blocks,
/// including non-minimal ones and 9-tails. Throws std::domain_error on an empty
/// period or a non-digit character.
Rational reconstruct(const DecimalExpansion& e);

/// First 1/d, scanning d coprime to 10 upward from 3, whose period length is
/// at least min_length. Throws std::domain_error for min_length == 0.
Rational find_period_at_least(std::size_t min_length);

/// Parses "w.uuu(vvv)". Throws std::invalid_argument on malformed text.
DecimalExpansion parse_expansion(std::string_view text);

}  // namespace cfdiag

#endif  // CFDIAG_DECIMAL_EXPANSION_HPP
