#ifndef CFDIAG_RATIONAL_HPP
#define CFDIAG_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cfdiag {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction of unbounded integers.
///
/// Always stored in lowest terms with a positive denominator, so two
/// rationals are equal exactly when their numerators and denominators are.
/// Zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT: implicit by intent
    Rational(long long value) : num_(value), den_(1) {}          // NOLINT

    /// Reduces num/den. Throws std::domain_error("zero denominator") when den == 0.
    Rational(BigInt num, BigInt den);

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    /// Largest integer not greater than the value.
    BigInt floor() const;

    Rational abs() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    Rational operator-() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    /// "p/q", or "p" when q == 1.
    std::string to_string() const;

private:
    struct reduced_tag {};
    Rational(BigInt num, BigInt den, reduced_tag) : num_(std::move(num)), den_(std::move(den)) {}

    BigInt num_;
    BigInt den_;
};

inline Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
inline Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
inline Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
inline Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational make_rational(BigInt num, BigInt den);

/// Throws std::domain_error("reciprocal of zero") for x == 0.
Rational reciprocal(const Rational& x);

Rational add(const Rational& x, const Rational& y);
Rational sub(const Rational& x, const Rational& y);
Rational mul(const Rational& x, const Rational& y);
std::strong_ordering compare(const Rational& x, const Rational& y);

/// Parses an unbounded decimal integer with an optional leading minus.
/// Throws std::invalid_argument on malformed text.
BigInt parse_integer(std::string_view text);

/// Parses "p/q" or "p"; each part is a decimal integer, optional leading minus.
/// Throws std::invalid_argument on malformed text and std::domain_error on q == 0.
Rational parse_rational(std::string_view text);

/// 10^exponent.
BigInt pow10(std::size_t exponent);

/// Number of decimal digits in |value| (1 for zero).
std::size_t decimal_digit_count(const BigInt& value);

}  // namespace cfdiag

#endif  // CFDIAG_RATIONAL_HPP
