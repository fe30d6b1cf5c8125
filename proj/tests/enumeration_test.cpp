#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "cfdiag/continued_fraction.hpp"
#include "cfdiag/decimal_expansion.hpp"
#include "cfdiag/enumeration.hpp"
#include "oracles.hpp"

using cfdiag::BigInt;
using cfdiag::Rational;

namespace {

Rational q(long long p, long long d) { return cfdiag::make_rational(p, d); }

std::vector<long long> small(const std::vector<BigInt>& values) {
    std::vector<long long> out;
    for (const auto& v : values) out.push_back(v.convert_to<long long>());
    return out;
}

// A high-precision decimal proxy for pi (100 places).
const char* const pi_100 =
    "31415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";

}  // namespace

TEST_CASE("calkin_wilf first values") {
    auto e = cfdiag::calkin_wilf();
    const auto first = cfdiag::take(e, 5);
    CHECK(first == std::vector<Rational>{Rational(1), q(1, 2), Rational(2), q(1, 3), q(3, 2)});
    CHECK(e.position() == 5);
}

TEST_CASE("calkin_wilf matches Stern's diatomic sequence") {
    constexpr std::size_t n = 10000;
    const auto s = oracle::stern(n + 1);
    auto e = cfdiag::calkin_wilf();
    for (std::size_t i = 1; i <= n; ++i) {
        const Rational value = e.next();
        REQUIRE(value.numerator() == s[i]);
        REQUIRE(value.denominator() == s[i + 1]);
    }
}

TEST_CASE("calkin_wilf position of 6/7 by scan") {
    auto e = cfdiag::calkin_wilf();
    std::size_t index = 0;
    while (true) {
        ++index;
        if (e.next() == q(6, 7)) break;
        REQUIRE(index < 100000);
    }
    CHECK(index == 126);
}

TEST_CASE("property: calkin_wilf is injective and covers small rationals") {
    auto e = cfdiag::calkin_wilf();
    std::set<std::pair<long long, long long>> seen;
    for (std::size_t i = 0; i < 10000; ++i) {
        const Rational value = e.next();
        const long long p = value.numerator().convert_to<long long>();
        const long long d = value.denominator().convert_to<long long>();
        // The successor rule yields reduced fractions without any gcd step.
        if (i < 4096) {
            CHECK(std::gcd(p, d) == 1);
        }
        REQUIRE(seen.emplace(p, d).second);
    }

    auto head = cfdiag::calkin_wilf();
    std::set<std::pair<long long, long long>> first_4096;
    for (std::size_t i = 0; i < 4096; ++i) {
        const Rational value = head.next();
        first_4096.emplace(value.numerator().convert_to<long long>(), value.denominator().convert_to<long long>());
    }
    for (long long p = 1; p < 12; ++p) {
        for (long long d = 1; p + d <= 12; ++d) {
            if (std::gcd(p, d) != 1) continue;
            CHECK(first_4096.count({p, d}) == 1);
        }
    }
}

TEST_CASE("successor denominators are coprime without reduction") {
    // Apply the successor rule on raw integers and check gcd directly.
    long long p = 1, d = 1;
    for (int i = 0; i < 10000; ++i) {
        REQUIRE(std::gcd(p, d) == 1);
        const long long next = 2 * (p / d) * d + d - p;
        p = d;
        d = next;
    }
}

TEST_CASE("enumerate_by_index") {
    auto integers = cfdiag::enumerate_by_index([](std::size_t i) { return Rational(static_cast<long long>(i)); });
    CHECK(cfdiag::take(integers, 3) == std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
}

TEST_CASE("digits_of") {
    auto sixth = cfdiag::digits_of(q(1, 6));
    CHECK(cfdiag::take(sixth, 5) == std::vector<int>{1, 6, 6, 6, 6});
    auto five = cfdiag::digits_of(Rational(5));
    CHECK(five.integer_part() == 5);
    CHECK(cfdiag::take(five, 3) == std::vector<int>{0, 0, 0});
    auto x = cfdiag::digits_of(q(129, 550));
    CHECK(cfdiag::take(x, 6) == std::vector<int>{2, 3, 4, 5, 4, 5});
    auto y = cfdiag::digits_of(q(169, 550));
    CHECK(cfdiag::take(y, 6) == std::vector<int>{3, 0, 7, 2, 7, 2});
    CHECK_THROWS_AS(cfdiag::digits_of(q(-1, 2)), std::domain_error);
}

TEST_CASE("copying a digit stream forks it") {
    auto a = cfdiag::digits_of(q(1, 7));
    cfdiag::take(a, 2);
    auto b = a;
    CHECK(cfdiag::take(a, 3) == std::vector<int>{2, 8, 5});
    CHECK(cfdiag::take(b, 3) == std::vector<int>{2, 8, 5});
}

TEST_CASE("digit stream rejects out-of-range digits and reports exhaustion") {
    cfdiag::DigitStream bad(BigInt(0), []() -> std::optional<int> { return 10; });
    CHECK_THROWS_AS(bad.next(), std::domain_error);
    cfdiag::DigitStream finite(BigInt(0), [n = 0]() mutable -> std::optional<int> {
        if (n == 2) return std::nullopt;
        return n++;
    });
    CHECK_THROWS_AS(cfdiag::take(finite, 3), std::invalid_argument);
}

TEST_CASE("property: digits_of equals the unrolled expansion") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> num(0, 100000);
    std::uniform_int_distribution<long long> den(1, 5000);
    for (int i = 0; i < 200; ++i) {
        const Rational x = q(num(rng), den(rng));
        auto stream = cfdiag::digits_of(x);
        const std::string expected = cfdiag::expand(x).unrolled(200);
        const auto digits = cfdiag::take(stream, 200);
        for (std::size_t j = 0; j < 200; ++j) REQUIRE(digits[j] == expected[j] - '0');
        CHECK(stream.integer_part() == x.floor());
    }
}

TEST_CASE("named streams") {
    auto sqrt2 = cfdiag::named_cf_stream("sqrt2");
    CHECK(small(cfdiag::take(sqrt2, 5)) == std::vector<long long>{1, 2, 2, 2, 2});
    auto e = cfdiag::named_cf_stream("e");
    CHECK(small(cfdiag::take(e, 13)) == std::vector<long long>{2, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, 1});
    auto pi = cfdiag::named_cf_stream("pi");
    CHECK(small(cfdiag::take(pi, 4)) == std::vector<long long>{3, 7, 15, 1});
    auto phi = cfdiag::named_cf_stream("phi");
    CHECK(small(cfdiag::take(phi, 4)) == std::vector<long long>{1, 1, 1, 1});
    auto silver = cfdiag::named_cf_stream("metallic:2");
    CHECK(small(cfdiag::take(silver, 3)) == std::vector<long long>{2, 2, 2});

    CHECK_THROWS_AS(cfdiag::named_cf_stream("tau"), std::domain_error);
    CHECK_THROWS_AS(cfdiag::named_cf_stream("metallic:0"), std::domain_error);
    CHECK_THROWS_AS(cfdiag::named_cf_stream("metallic:x"), std::domain_error);
}

TEST_CASE("e stream continues the 1, 2m, 1 pattern") {
    auto e = cfdiag::e_stream();
    const auto terms = small(cfdiag::take(e, 301));
    CHECK(terms[0] == 2);
    for (long long m = 1; m <= 100; ++m) {
        const auto base = static_cast<std::size_t>(3 * m - 2);
        CHECK(terms[base] == 1);
        CHECK(terms[base + 1] == 2 * m);
        CHECK(terms[base + 2] == 1);
    }
}

TEST_CASE("pi stream is a stored table that refuses to run past its end") {
    auto pi = cfdiag::pi_stream();
    const auto& table = cfdiag::pi_partial_quotients();
    REQUIRE(table.size() >= 40);
    cfdiag::take(pi, table.size());
    CHECK_THROWS_AS(pi.next(), std::out_of_range);
}

TEST_CASE("pi table convergents approach a 100-digit proxy") {
    const Rational proxy = cfdiag::make_rational(BigInt(pi_100), cfdiag::pow10(100));
    const auto& table = cfdiag::pi_partial_quotients();
    const auto cs = cfdiag::convergents(cfdiag::pi_stream(), table.size());
    for (const auto& c : cs) {
        // |x - h/k| < 1 / k^2 for every convergent of x. The proxy is within 1e-100
        // of pi, far below 1/k^2 for these denominators.
        const BigInt& k = c.value.denominator();
        CHECK((proxy - c.value).abs() < Rational(BigInt(1), k * k));
    }
    // Alternating sides of pi.
    for (std::size_t i = 0; i < cs.size(); ++i) CHECK(((cs[i].value < proxy) == (i % 2 == 0)));
}

TEST_CASE("CF stream validates quotients") {
    cfdiag::CFStream bad([i = 0]() mutable { return BigInt(i++ == 0 ? 1 : 0); });
    CHECK(bad.next() == 1);
    CHECK_THROWS_AS(bad.next(), std::domain_error);
    cfdiag::CFStream negative([]() { return BigInt(-1); });
    CHECK_THROWS_AS(negative.next(), std::domain_error);
}

TEST_CASE("irrational_enumeration") {
    auto rows = cfdiag::irrational_enumeration(3);
    REQUIRE(rows.size() == 3);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        auto fork = rows[k];
        const auto terms = cfdiag::take(fork, 100);
        for (const auto& t : terms) CHECK(t == static_cast<long long>(k + 1));
    }
    auto many = cfdiag::irrational_enumeration(20);
    std::set<long long> leads;
    for (auto& row : many) leads.insert(row.next().convert_to<long long>());
    CHECK(leads.size() == 20);
}

TEST_CASE("sqrt2 convergents converge monotonically") {
    const auto cs = cfdiag::convergents(cfdiag::sqrt2_stream(), 12);
    Rational previous_gap;
    for (std::size_t n = 0; n < cs.size(); ++n) {
        const Rational gap = (cs[n].value * cs[n].value - Rational(2)).abs();
        if (n > 0) CHECK(gap < previous_gap);
        previous_gap = gap;
    }
}

TEST_CASE("e length-12 convergent is within 1e-6 of the decimal proxy") {
    const auto cs = cfdiag::convergents(cfdiag::e_stream(), 12);
    const Rational proxy = cfdiag::make_rational(BigInt(2718281828459LL), cfdiag::pow10(12));
    CHECK(cs.back().value == q(23225, 8544));
    CHECK((cs.back().value - proxy).abs() <= cfdiag::make_rational(1, 1000000));
}
