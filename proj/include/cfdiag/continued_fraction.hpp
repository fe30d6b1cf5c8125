#ifndef CFDIAG_CONTINUED_FRACTION_HPP
#define CFDIAG_CONTINUED_FRACTION_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfdiag/rational.hpp"

namespace cfdiag {

class CFStream;

/// Finite simple continued fraction [a0; a1, ..., an] in canonical form.
///
/// a0 >= 0, ai >= 1 for i >= 1, and the last term is >= 2 whenever n >= 1.
/// The only way to build one is through canonicalize() or from_rational(),
/// so equal values always have equal terms.
class ContinuedFraction {
public:
    const std::vector<BigInt>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    const BigInt& operator[](std::size_t i) const { return terms_[i]; }

    /// Partial quotients after a0.
    std::size_t tail_length() const noexcept { return terms_.size() - 1; }

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

    /// "[a0; a1, a2]", or "[a0]" for a single term.
    std::string to_string() const;

    /// "a0 a1 a2", the space-separated list form.
    std::string to_spaced_string() const;

private:
    explicit ContinuedFraction(std::vector<BigInt> terms) : terms_(std::move(terms)) {}
    friend ContinuedFraction canonicalize(std::vector<BigInt> terms);

    std::vector<BigInt> terms_;
};

struct Convergent {
    std::size_t index = 0;
    Rational value;

    friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Merges a trailing 1 into its predecessor: [..., a, 1] -> [..., a + 1].
/// Throws std::domain_error on an empty list, a0 < 0 or ai < 1.
ContinuedFraction canonicalize(std::vector<BigInt> terms);

/// Euclidean quotient sequence of x. Throws std::domain_error("negative input") for x < 0.
ContinuedFraction from_rational(const Rational& x);

/// Exact back-to-front fold. Accepts non-canonical term lists such as [3; 7, 15, 1].
/// Throws std::domain_error("invalid partial quotient") if a0 < 0 or some ai < 1.
Rational to_rational(std::span<const BigInt> terms);
Rational to_rational(const ContinuedFraction& cf);

/// First `count` convergents. Throws std::out_of_range if count exceeds the number
/// of terms and std::invalid_argument if count == 0.
std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count);
std::vector<Convergent> convergents(std::span<const BigInt> terms, std::size_t count);

/// Consumes `count` terms from a copy of the stream; `source` itself is untouched.
std::vector<Convergent> convergents(const CFStream& source, std::size_t count);

/// Exact value of a finite double (every double is a dyadic rational).
/// Throws std::domain_error for NaN or infinity.
Rational exact_value_of(double x);

/// Repeated floor-and-reciprocal on the exact value of x, stopping once the
/// accumulated fraction is within eps of x. The comparison is exact.
/// Throws std::domain_error for x <= 0 or eps <= 0.
ContinuedFraction from_real_approx(double x, double eps);

/// The same loop carried out in double precision, as a plain floating-point
/// implementation would do it. Kept for comparison; prefer from_real_approx.
std::vector<BigInt> from_real_approx_floating(double x, double eps, std::size_t max_terms = 64);

/// Total decimal digits in a1..an (a0 excluded). [3; 7, 15, 1] -> 4.
std::size_t fractional_digit_budget(std::span<const BigInt> terms);
std::size_t fractional_digit_budget(const ContinuedFraction& cf);

enum class Closer { continued_fraction, decimal, tie };

struct ApproximationReport {
    Closer closer = Closer::tie;
    Rational cf_error;
    Rational decimal_error;
};

/// Compares |target - cf_approx| against |target - decimal_approx| exactly.
ApproximationReport approximation_compare(const Rational& target, const Rational& cf_approx,
                                          const Rational& decimal_approx);

/// Parses "[a0; a1, a2]" (also "[a0]") or the space-separated form "a0 a1 a2".
/// Returns the raw terms; no canonicalization or range checks are applied.
/// Throws std::invalid_argument on malformed text.
std::vector<BigInt> parse_cf_terms(std::string_view text);

/// Renders any term list in bracket form.
std::string format_cf_terms(std::span<const BigInt> terms);

}  // namespace cfdiag

#endif  // CFDIAG_CONTINUED_FRACTION_HPP
