#ifndef CFDIAG_ENUMERATION_HPP
#define CFDIAG_ENUMERATION_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "cfdiag/rational.hpp"

namespace cfdiag {

// Streams are pull-based and single-consumer. Copying a stream forks it at
// its current position: the copy and the original advance independently.
// Rewind by creating a fresh stream.

/// Infinite sequence of rationals f_1, f_2, ...
class RationalEnumeration {
public:
    using Generator = std::function<Rational()>;

    explicit RationalEnumeration(Generator next) : next_(std::move(next)) {}

    /// f_{position()+1}.
    Rational next();

    /// Number of values yielded so far.
    std::size_t position() const noexcept { return position_; }

private:
    Generator next_;
    std::size_t position_ = 0;
};

/// Fractional digits d_1, d_2, ... of one number, plus its integer part.
///
/// A generator returning std::nullopt means the stream ran dry; the
/// diagonal constructions treat that as an input error.
class DigitStream {
public:
    using Generator = std::function<std::optional<int>()>;

    DigitStream(BigInt integer_part, Generator next) : integer_part_(std::move(integer_part)), next_(std::move(next)) {}

    const BigInt& integer_part() const noexcept { return integer_part_; }

    /// Next digit. Throws std::domain_error if the generator yields a value outside 0..9.
    std::optional<int> next();

    std::size_t position() const noexcept { return position_; }

private:
    BigInt integer_part_;
    Generator next_;
    std::size_t position_ = 0;
};

/// Partial quotients a_0, a_1, ... of an irrational number. Never ends.
class CFStream {
public:
    using Generator = std::function<BigInt()>;

    explicit CFStream(Generator next) : next_(std::move(next)) {}

    /// Next partial quotient. Throws std::domain_error if a_0 < 0 or a_i < 1 for i >= 1.
    BigInt next();

    std::size_t position() const noexcept { return position_; }

private:
    Generator next_;
    std::size_t position_ = 0;
};

/// Pulls `count` values from the stream.
std::vector<BigInt> take(CFStream& stream, std::size_t count);
std::vector<int> take(DigitStream& stream, std::size_t count);
std::vector<Rational> take(RationalEnumeration& e, std::size_t count);

/// Calkin-Wilf order: 1/1, then p/q -> q / (2 floor(p/q) q + q - p).
RationalEnumeration calkin_wilf();

/// Enumeration given by an index function, f_i = value_at(i) for i >= 1.
RationalEnumeration enumerate_by_index(std::function<Rational(std::size_t)> value_at);

/// Digits of x by long division, trailing 0's included. Throws std::domain_error for x < 0.
DigitStream digits_of(const Rational& x);

/// [k; k, k, ...]. Throws std::domain_error for k < 1.
CFStream metallic_stream(const BigInt& k);

/// [1; 2, 2, 2, ...].
CFStream sqrt2_stream();

/// [2; 1, 2, 1, 1, 4, 1, 1, 6, ...].
CFStream e_stream();

/// Stored partial quotients of pi; pulling past the table throws std::out_of_range.
CFStream pi_stream();

/// The stored pi table (60 terms).
const std::vector<long long>& pi_partial_quotients();

/// "sqrt2", "e", "phi", "pi" or "metallic:<k>". Throws std::domain_error otherwise.
CFStream named_cf_stream(std::string_view name);

/// metallic(1), metallic(2), ..., metallic(count): pairwise distinct at index 0.
std::vector<CFStream> irrational_enumeration(std::size_t count);

}  // namespace cfdiag

#endif  // CFDIAG_ENUMERATION_HPP
