#include "cfdiag/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace cfdiag {

namespace {

bool all_digits(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

BigInt Rational::floor() const {
    // cpp_int division truncates toward zero.
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
}

Rational Rational::abs() const { return Rational(num_ < 0 ? BigInt(-num_) : num_, den_, reduced_tag{}); }

Rational& Rational::operator+=(const Rational& rhs) {
    *this = Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    *this = Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    *this = Rational(num_ * rhs.num_, den_ * rhs.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= reciprocal(rhs); }

Rational Rational::operator-() const { return Rational(-num_, den_, reduced_tag{}); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const BigInt left = lhs.num_ * rhs.den_;
    const BigInt right = rhs.num_ * lhs.den_;
    if (left < right) return std::strong_ordering::less;
    if (left > right) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

Rational make_rational(BigInt num, BigInt den) { return Rational(std::move(num), std::move(den)); }

Rational reciprocal(const Rational& x) {
    if (x.is_zero()) throw std::domain_error("reciprocal of zero");
    return Rational(x.denominator(), x.numerator());
}

Rational add(const Rational& x, const Rational& y) { return x + y; }
Rational sub(const Rational& x, const Rational& y) { return x - y; }
Rational mul(const Rational& x, const Rational& y) { return x * y; }
std::strong_ordering compare(const Rational& x, const Rational& y) { return x <=> y; }

BigInt parse_integer(std::string_view text) {
    const bool negative = !text.empty() && text.front() == '-';
    const std::string_view digits = negative ? text.substr(1) : text;
    if (!all_digits(digits)) throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
    // cpp_int reads a leading 0 as an octal prefix.
    const auto first = digits.find_first_not_of('0');
    const BigInt value = first == std::string_view::npos ? BigInt(0) : BigInt(std::string(digits.substr(first)));
    return negative ? BigInt(-value) : value;
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    try {
        return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
}

BigInt pow10(std::size_t exponent) {
    BigInt result = 1;
    BigInt base = 10;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

std::size_t decimal_digit_count(const BigInt& value) {
    std::string s = value.str();
    return s.front() == '-' ? s.size() - 1 : s.size();
}

}  // namespace cfdiag
