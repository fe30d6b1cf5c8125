#include "cfdiag/diagonalization.hpp"

#include <stdexcept>

namespace cfdiag {

namespace {

void require_rows(std::size_t available, std::size_t depth) {
    if (available < depth) {
        throw std::invalid_argument("need " + std::to_string(depth) + " rows, got " + std::to_string(available));
    }
}

// d_kk from a fresh fork of the row.
int diagonal_digit(const DigitStream& row, std::size_t k) {
    DigitStream fork = row;
    std::optional<int> digit;
    for (std::size_t j = 1; j <= k; ++j) {
        digit = fork.next();
        if (!digit) throw std::invalid_argument("row " + std::to_string(k) + " exhausted before position " + std::to_string(k));
    }
    return *digit;
}

// a_kk from a fresh fork of the row.
BigInt diagonal_quotient(const CFStream& row, std::size_t k) {
    CFStream fork = row;
    BigInt term;
    for (std::size_t i = 0; i <= k; ++i) term = fork.next();
    return term;
}

std::string diagonal_label(std::size_t k) {
    const std::string index = std::to_string(k);
    return k < 10 ? "a_" + index + index : "a_{" + index + "," + index + "}";
}

}  // namespace

DecimalDiagonal decimal_diagonal(std::span<const DigitStream> rows, std::size_t depth) {
    require_rows(rows.size(), depth);
    DecimalDiagonal out;
    out.digits.reserve(depth);
    out.witnesses.reserve(depth);
    for (std::size_t k = 1; k <= depth; ++k) {
        const int diag = diagonal_digit(rows[k - 1], k);
        const int pick = diag != 5 ? 5 : 4;
        out.digits.push_back(pick);
        out.witnesses.push_back({k, diag, pick});
    }
    return out;
}

CFDiagonal cf_diagonal(std::span<const CFStream> rows, std::size_t depth) {
    require_rows(rows.size(), depth);
    CFDiagonal out;
    out.terms.reserve(depth + 1);
    out.terms.emplace_back(0);
    for (std::size_t k = 1; k <= depth; ++k) {
        BigInt diag = diagonal_quotient(rows[k - 1], k);
        BigInt pick = diag + 1;
        out.terms.push_back(pick);
        out.witnesses.push_back({k, std::move(diag), std::move(pick)});
    }
    return out;
}

VerifyResult verify_differs(std::span<const int> constructed, std::span<const DigitStream> rows, std::size_t depth) {
    if (constructed.size() < depth) throw std::invalid_argument("constructed prefix shorter than depth");
    require_rows(rows.size(), depth);
    for (std::size_t k = 1; k <= depth; ++k) {
        if (constructed[k - 1] == diagonal_digit(rows[k - 1], k)) return {false, k};
    }
    return {};
}

VerifyResult verify_differs(std::span<const BigInt> constructed, std::span<const CFStream> rows, std::size_t depth) {
    if (constructed.size() < depth + 1) throw std::invalid_argument("constructed prefix shorter than depth");
    require_rows(rows.size(), depth);
    for (std::size_t k = 1; k <= depth; ++k) {
        if (constructed[k] == diagonal_quotient(rows[k - 1], k)) return {false, k};
    }
    return {};
}

CFDiagonalFailure cf_diagonal_over_rationals(RationalEnumeration e) {
    for (std::size_t k = 1;; ++k) {
        Rational value = e.next();
        ContinuedFraction cf = from_rational(value);
        if (cf.tail_length() < k) return {k, std::move(value), std::move(cf)};
    }
}

std::string describe(const CFDiagonalFailure& failure) {
    // Always p/q, so 1 reads as 1/1.
    const std::string value = failure.value.numerator().str() + "/" + failure.value.denominator().str();
    return "diagonal undefined at k=" + std::to_string(failure.failing_index) + ": CF of " + value + " = " +
           failure.cf.to_string() + " has no " + diagonal_label(failure.failing_index);
}

std::vector<PeriodicityRuling> PeriodicityReport::ruled_out() const {
    std::vector<PeriodicityRuling> out;
    for (const auto& r : rulings) {
        if (!r.consistent) out.push_back(r);
    }
    return out;
}

PeriodicityReport analyze_periodicity(std::span<const int> digits, std::size_t max_preperiod,
                                      std::size_t max_period) {
    if (max_period == 0) throw std::invalid_argument("max period must be positive");
    if (digits.size() < max_preperiod + 2 * max_period) {
        throw std::out_of_range("depth " + std::to_string(digits.size()) + " is below max_preperiod + 2*max_period = " +
                                std::to_string(max_preperiod + 2 * max_period));
    }
    PeriodicityReport report;
    report.digits.assign(digits.begin(), digits.end());
    const std::size_t depth = digits.size();
    for (std::size_t p = 0; p <= max_preperiod; ++p) {
        for (std::size_t len = 1; len <= max_period; ++len) {
            PeriodicityRuling ruling{p, len, true, std::nullopt};
            for (std::size_t j = p + 1; j + len <= depth; ++j) {
                if (digits[j - 1] != digits[j + len - 1]) {
                    ruling.consistent = false;
                    ruling.witness_position = j;
                    break;
                }
            }
            report.rulings.push_back(ruling);
        }
    }
    return report;
}

PeriodicityReport rational_diagonal_analysis(RationalEnumeration e, std::size_t depth, std::size_t max_preperiod,
                                             std::size_t max_period) {
    if (max_period == 0) throw std::invalid_argument("max period must be positive");
    if (depth < max_preperiod + 2 * max_period) {
        throw std::out_of_range("depth " + std::to_string(depth) + " is below max_preperiod + 2*max_period = " +
                                std::to_string(max_preperiod + 2 * max_period));
    }
    std::vector<DigitStream> rows;
    rows.reserve(depth);
    for (std::size_t i = 0; i < depth; ++i) rows.push_back(digits_of(e.next()));
    const DecimalDiagonal diagonal = decimal_diagonal(rows, depth);
    return analyze_periodicity(diagonal.digits, max_preperiod, max_period);
}

}  // namespace cfdiag
