#ifndef CFDIAG_DIAGONALIZATION_HPP
#define CFDIAG_DIAGONALIZATION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cfdiag/continued_fraction.hpp"
#include "cfdiag/enumeration.hpp"

namespace cfdiag {

/// Evidence that the constructed number differs from row k at position k.
template <typename Entry>
struct DiagonalWitness {
    std::size_t position = 0;
    Entry enumerated;   // d_kk or a_kk
    Entry constructed;  // d_0k or a_0k

    bool differs() const { return enumerated != constructed; }

    friend bool operator==(const DiagonalWitness&, const DiagonalWitness&) = default;
};

struct DecimalDiagonal {
    BigInt integer_part = 0;
    std::vector<int> digits;  // digits[k - 1] = d_0k
    std::vector<DiagonalWitness<int>> witnesses;
};

struct CFDiagonal {
    std::vector<BigInt> terms;  // terms[k] = a_0k, terms[0] = a_00 = 0
    std::vector<DiagonalWitness<BigInt>> witnesses;
};

/// The k-th enumerated rational has no k-th partial quotient.
struct CFDiagonalFailure {
    std::size_t failing_index = 0;
    Rational value;
    ContinuedFraction cf;

    /// Partial quotients after a_0; always < failing_index.
    std::size_t cf_length_of_kth() const { return cf.tail_length(); }
};

struct VerifyResult {
    bool differs = true;
    std::optional<std::size_t> first_counterexample;
};

/// d_0k = 5 unless d_kk = 5, then 4; w_0 = 0. Row k is read from a fork of rows[k - 1].
/// Throws std::invalid_argument if fewer than `depth` rows are given or a row
/// runs dry before position k.
DecimalDiagonal decimal_diagonal(std::span<const DigitStream> rows, std::size_t depth);

/// a_00 = 0 and a_0k = a_kk + 1. Throws std::invalid_argument if fewer than `depth` rows.
CFDiagonal cf_diagonal(std::span<const CFStream> rows, std::size_t depth);

/// Re-reads every row independently and checks constructed[k - 1] != d_kk for k <= depth.
VerifyResult verify_differs(std::span<const int> constructed, std::span<const DigitStream> rows, std::size_t depth);

/// Same for continued fractions; constructed[0] is a_00 and constructed[k] is compared with a_kk.
VerifyResult verify_differs(std::span<const BigInt> constructed, std::span<const CFStream> rows, std::size_t depth);

/// Scans k = 1, 2, ... for the first enumerated rational whose canonical CF
/// has fewer than k partial quotients after a_0. Terminates for any enumeration
/// that eventually yields such a rational, in particular any enumeration of all
/// positive rationals (1/1 = [1] appears somewhere).
CFDiagonalFailure cf_diagonal_over_rationals(RationalEnumeration e);

/// "diagonal undefined at k=1: CF of 1/1 = [1] has no a_11".
std::string describe(const CFDiagonalFailure& failure);

struct PeriodicityRuling {
    std::size_t preperiod = 0;
    std::size_t period = 0;
    bool consistent = true;
    /// Set when inconsistent: digits at j and j + period differ, with preperiod < j.
    std::optional<std::size_t> witness_position;
};

struct PeriodicityReport {
    std::vector<int> digits;  // digits[j - 1] = d_j
    std::vector<PeriodicityRuling> rulings;

    std::vector<PeriodicityRuling> ruled_out() const;
};

/// Rules on every (p, l) with p <= max_preperiod, 1 <= l <= max_period.
/// Throws std::out_of_range unless digits.size() >= max_preperiod + 2 * max_period,
/// and std::invalid_argument for max_period == 0.
PeriodicityReport analyze_periodicity(std::span<const int> digits, std::size_t max_preperiod,
                                      std::size_t max_period);

/// Builds f_0 from the first `depth` rationals of `e` by decimal_diagonal and
/// analyzes its digit prefix. Same preconditions as analyze_periodicity, with depth
/// in place of the digit count.
PeriodicityReport rational_diagonal_analysis(RationalEnumeration e, std::size_t depth, std::size_t max_preperiod,
                                             std::size_t max_period);

}  // namespace cfdiag

#endif  // CFDIAG_DIAGONALIZATION_HPP
