#include "cfdiag/enumeration.hpp"

#include <stdexcept>
#include <string>

namespace cfdiag {

Rational RationalEnumeration::next() {
    Rational value = next_();
    ++position_;
    return value;
}

std::optional<int> DigitStream::next() {
    std::optional<int> digit = next_();
    if (!digit) return std::nullopt;
    if (*digit < 0 || *digit > 9) throw std::domain_error("digit stream yielded " + std::to_string(*digit));
    ++position_;
    return digit;
}

BigInt CFStream::next() {
    BigInt term = next_();
    if (position_ == 0 ? term < 0 : term < 1) {
        throw std::domain_error("invalid partial quotient " + term.str() + " at index " + std::to_string(position_));
    }
    ++position_;
    return term;
}

std::vector<BigInt> take(CFStream& stream, std::size_t count) {
    std::vector<BigInt> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next());
    return out;
}

std::vector<int> take(DigitStream& stream, std::size_t count) {
    std::vector<int> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto digit = stream.next();
        if (!digit) throw std::invalid_argument("digit stream exhausted after " + std::to_string(i) + " digits");
        out.push_back(*digit);
    }
    return out;
}

std::vector<Rational> take(RationalEnumeration& e, std::size_t count) {
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(e.next());
    return out;
}

RationalEnumeration calkin_wilf() {
    return RationalEnumeration([p = BigInt(1), q = BigInt(1)]() mutable {
        Rational current(p, q);
        BigInt next_den = 2 * (p / q) * q + q - p;
        p = std::move(q);
        q = std::move(next_den);
        return current;
    });
}

RationalEnumeration enumerate_by_index(std::function<Rational(std::size_t)> value_at) {
    return RationalEnumeration([value_at = std::move(value_at), i = std::size_t{0}]() mutable { return value_at(++i); });
}

DigitStream digits_of(const Rational& x) {
    if (x.sign() < 0) throw std::domain_error("negative input");
    BigInt whole;
    BigInt remainder;
    boost::multiprecision::divide_qr(x.numerator(), x.denominator(), whole, remainder);
    return DigitStream(std::move(whole), [r = std::move(remainder), d = x.denominator()]() mutable -> std::optional<int> {
        r *= 10;
        BigInt digit;
        boost::multiprecision::divide_qr(BigInt(r), d, digit, r);
        return digit.convert_to<int>();
    });
}

CFStream metallic_stream(const BigInt& k) {
    if (k < 1) throw std::domain_error("metallic mean index must be >= 1");
    return CFStream([k]() { return k; });
}

CFStream sqrt2_stream() {
    return CFStream([i = std::size_t{0}]() mutable { return BigInt(i++ == 0 ? 1 : 2); });
}

CFStream e_stream() {
    // After a_0 = 2 the terms come in triples 1, 2m, 1 for m = 1, 2, ...
    return CFStream([i = std::size_t{0}]() mutable {
        const std::size_t index = i++;
        if (index == 0) return BigInt(2);
        if (index % 3 == 2) return BigInt(2 * ((index + 1) / 3));
        return BigInt(1);
    });
}

const std::vector<long long>& pi_partial_quotients() {
    // OEIS A001203, first 60 terms.
    static const std::vector<long long> table = {
        3, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14, 2, 1, 1, 2, 2, 2, 2,
        1, 84, 2, 1, 1, 15, 3, 13, 1, 4, 2, 6, 6, 99, 1, 2, 2, 6, 3, 5,
        1, 1, 6, 8, 1, 7, 1, 2, 3, 7, 1, 2, 1, 1, 12, 1, 1, 1, 3, 1,
    };
    return table;
}

CFStream pi_stream() {
    return CFStream([i = std::size_t{0}]() mutable {
        const auto& table = pi_partial_quotients();
        if (i >= table.size()) {
            throw std::out_of_range("pi partial quotients are stored only up to index " +
                                    std::to_string(table.size() - 1));
        }
        return BigInt(table[i++]);
    });
}

CFStream named_cf_stream(std::string_view name) {
    if (name == "sqrt2") return sqrt2_stream();
    if (name == "e") return e_stream();
    if (name == "phi") return metallic_stream(1);
    if (name == "pi") return pi_stream();
    constexpr std::string_view prefix = "metallic:";
    if (name.starts_with(prefix)) {
        BigInt k;
        try {
            k = parse_integer(name.substr(prefix.size()));
        } catch (const std::invalid_argument&) {
            throw std::domain_error("unknown stream name: '" + std::string(name) + "'");
        }
        return metallic_stream(k);
    }
    throw std::domain_error("unknown stream name: '" + std::string(name) + "'");
}

std::vector<CFStream> irrational_enumeration(std::size_t count) {
    std::vector<CFStream> rows;
    rows.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) rows.push_back(metallic_stream(BigInt(k)));
    return rows;
}

}  // namespace cfdiag
