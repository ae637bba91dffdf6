#include <doctest.h>

#include <thread>
#include <vector>

#include "harmlike/errors.hpp"
#include "harmlike/sequences.hpp"

using namespace harmlike;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

Rational direct_harmonic(std::uint64_t n, std::uint64_t r = 1)
{
    Rational s;
    for (std::uint64_t k = 1; k <= n; ++k) {
        s += Rational(k).pow(-static_cast<std::int64_t>(r));
    }
    return s;
}

Rational direct_odd(std::uint64_t n)
{
    Rational s;
    for (std::uint64_t k = 1; k <= n; ++k) {
        s += Rational(2 * k - 1).reciprocal();
    }
    return s;
}

// Coefficients of x(x-1)...(x-n+1), i.e. row n of the signed Stirling triangle.
std::vector<Integer> falling_factorial_poly(std::uint64_t n)
{
    std::vector<Integer> poly{1};
    for (std::uint64_t i = 0; i < n; ++i) {
        std::vector<Integer> next(poly.size() + 1, 0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * static_cast<unsigned long>(i);
        }
        poly = std::move(next);
    }
    return poly;
}

// H_{n,p} by repeated prefix sums of 1/k, starting from H_{n,0} = 1/n.
std::vector<Rational> hyperharmonic_row(std::uint64_t p, std::uint64_t nmax)
{
    std::vector<Rational> row(nmax + 1);
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        row[n] = Rational(n).reciprocal();
    }
    for (std::uint64_t level = 0; level < p; ++level) {
        Rational acc;
        for (std::uint64_t n = 1; n <= nmax; ++n) {
            acc += row[n];
            row[n] = acc;
        }
    }
    return row;
}

} // namespace

TEST_CASE("harmonic values")
{
    CHECK(harmonic(0) == q(0));
    CHECK(harmonic(4) == q(25, 12));
    CHECK(harmonic(5) == q(137, 60));
    for (std::uint64_t n = 0; n <= 80; ++n) {
        CHECK(harmonic(n) == direct_harmonic(n));
    }
}

TEST_CASE("harmonic numbers of higher order")
{
    CHECK(harmonic_order(3, 2) == q(49, 36));
    CHECK(harmonic_order(0, 5) == q(0));
    CHECK_THROWS_AS(harmonic_order(3, 0), DomainError);
    for (std::uint64_t r = 1; r <= 5; ++r) {
        for (std::uint64_t n = 0; n <= 30; ++n) {
            CHECK(harmonic_order(n, r) == direct_harmonic(n, r));
        }
    }
    for (std::uint64_t n = 0; n <= 30; ++n) {
        CHECK(harmonic_order(n, 1) == harmonic(n));
    }
}

TEST_CASE("odd harmonic numbers")
{
    CHECK(odd_harmonic(0) == q(0));
    CHECK(odd_harmonic(2) == q(4, 3));
    CHECK(odd_harmonic(3) == q(23, 15));
    for (std::uint64_t n = 0; n <= 40; ++n) {
        CHECK(odd_harmonic(n) == direct_odd(n));
    }
}

TEST_CASE("harmonic_like values")
{
    CHECK(harmonic_like(7, 0) == q(1));
    CHECK(harmonic_like(0, 3) == q(0));
    CHECK(harmonic_like(3, 2) == q(2));
    CHECK(harmonic_like(4, 3) == q(5, 2));
    for (std::uint64_t n = 0; n <= 30; ++n) {
        CHECK(harmonic_like(n, 1) == harmonic(n));
    }
}

TEST_CASE("bruteforce oracle")
{
    CHECK(harmonic_like_bruteforce(1, 2) == q(0));
    CHECK(harmonic_like_bruteforce(3, 2) == q(2));
    CHECK(harmonic_like_bruteforce(5, 0) == q(1));
    for (std::uint64_t n = 0; n <= 12; ++n) {
        CHECK(harmonic_like_bruteforce(n, 1) == harmonic(n));
    }
    CHECK_THROWS_AS(harmonic_like_bruteforce(40, 20, 1000), FeasibilityError);
}

TEST_CASE("recurrence matches the composition oracle for n + m <= 16")
{
    for (std::uint64_t m = 0; m <= 16; ++m) {
        for (std::uint64_t n = 0; n + m <= 16; ++n) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(harmonic_like(n, m) == harmonic_like_bruteforce(n, m));
        }
    }
}

TEST_CASE("depth two equals squared harmonic minus second order")
{
    for (std::uint64_t n = 0; n <= 60; ++n) {
        CHECK(harmonic_like(n, 2) == direct_harmonic(n) * direct_harmonic(n) - direct_harmonic(n, 2));
    }
}

TEST_CASE("depth three as a double sum")
{
    for (std::uint64_t n = 0; n <= 40; ++n) {
        Rational s;
        for (std::uint64_t j = 1; j <= n; ++j) {
            Rational inner;
            for (std::uint64_t l = 1; l + j <= n; ++l) {
                inner += direct_harmonic(n - j - l) / Rational(l);
            }
            s += inner / Rational(j);
        }
        CHECK(harmonic_like(n, 3) == s);
    }
}

TEST_CASE("stirling numbers against the falling factorial")
{
    CHECK(stirling1(3, 5) == 0);
    CHECK(stirling1(3, 2) == -3);
    CHECK(stirling1(4, 2) == 11);
    CHECK(stirling1(5, 2) == -50);
    for (std::uint64_t n = 0; n <= 30; ++n) {
        const auto poly = falling_factorial_poly(n);
        for (std::uint64_t k = 0; k <= n + 3; ++k) {
            const Integer expected = k < poly.size() ? poly[k] : Integer(0);
            CHECK(stirling1(n, k) == expected);
        }
    }
}

TEST_CASE("stirling special values")
{
    for (std::uint64_t n = 1; n <= 30; ++n) {
        const int sgn = neg_one_pow(static_cast<std::int64_t>(n));
        CHECK(stirling1(n, 0) == 0);
        CHECK(stirling1(n, n) == 1);
        CHECK(Rational(stirling1(n, 1)) == Rational(-sgn) * Rational(factorial(n - 1)));
        CHECK(Rational(stirling1(n, 2)) == Rational(sgn) * Rational(factorial(n - 1)) * harmonic(n - 1));
    }
    CHECK(stirling1(0, 0) == 1);
}

TEST_CASE("hyperharmonic numbers")
{
    CHECK(hyperharmonic(3, 2) == q(13, 3));
    CHECK(hyperharmonic(2, 3) == q(7, 2));
    CHECK_THROWS_AS(hyperharmonic(0, 0), DomainError);
    for (std::uint64_t p = 0; p <= 8; ++p) {
        const auto row = hyperharmonic_row(p, 40);
        for (std::uint64_t n = 1; n <= 40; ++n) {
            CHECK(hyperharmonic(n, p) == row[n]);
        }
        if (p > 0) {
            CHECK(hyperharmonic(0, p) == q(0));
        }
    }
    for (std::uint64_t n = 0; n <= 30; ++n) {
        CHECK(hyperharmonic(n, 1) == harmonic(n));
    }
}

TEST_CASE("hyperharmonic compact form")
{
    for (std::uint64_t p = 0; p <= 8; ++p) {
        for (std::uint64_t n = (p == 0 ? 1 : 0); n <= 40; ++n) {
            CHECK(hyperharmonic_compact(n, p) == hyperharmonic(n, p));
        }
    }
}

TEST_CASE("half-integer hyperharmonic numbers")
{
    CHECK(hyperharmonic_half(0, 4) == q(0));
    CHECK(hyperharmonic_half(1, 0) == q(1));
    CHECK(hyperharmonic_half(3, 0) == q(23, 24));
    for (std::uint64_t r = 0; r <= 15; ++r) {
        for (std::uint64_t p = 0; p <= 15; ++p) {
            CHECK(hyperharmonic_half(r, p) == hyperharmonic_half_via_gen_binomial(r, p));
        }
    }
}

TEST_CASE("fibonacci and lucas")
{
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(10) == 55);
    CHECK(lucas(0) == 2);
    CHECK(lucas(1) == 1);
    for (std::uint64_t n = 1; n <= 90; ++n) {
        CHECK(lucas(n) == fibonacci(n - 1) + fibonacci(n + 1));
        CHECK(fibonacci(2 * n) == fibonacci(n) * lucas(n));
    }
}

TEST_CASE("half-harmonic offsets as differences")
{
    CHECK(half_harmonic_offset(0) == q(0));
    CHECK(half_harmonic_offset(2) == q(8, 3));
    for (std::uint64_t n = 0; n <= 30; ++n) {
        const Rational half(q(1, 2));
        const Rational nn(n);
        // H_{n-1/2} - H_{-1/2}
        CHECK(harmonic_difference(nn - half, -half) == half_harmonic_offset(n));
        CHECK(half_harmonic_offset(n + 1) == 2 * odd_harmonic(n + 1));
        CHECK(half_harmonic_offset(n + 1) - half_harmonic_offset(n) == q(2) / Rational(2 * n + 1));
        CHECK(harmonic_difference(nn + half, nn - half) == q(2) / Rational(2 * n + 1));
        if (n >= 1) {
            CHECK(half_harmonic_offset(n) - half_harmonic_offset(1) == 2 * (odd_harmonic(n) - 1));
        }
    }
}

TEST_CASE("harmonic_difference domain")
{
    CHECK(harmonic_difference(q(5), q(2)) == harmonic(5) - harmonic(2));
    CHECK(harmonic_difference(q(2), q(5)) == harmonic(2) - harmonic(5));
    CHECK_THROWS_AS(harmonic_difference(q(1, 3), q(0)), DomainError);
    CHECK_THROWS_AS(harmonic_difference(q(2), q(-3)), DomainError);
}

TEST_CASE("seqspec construction")
{
    CHECK(SeqSpec::make("harmonic_like", {{"m", 2}}).evaluate(5) == q(15, 4));
    CHECK(SeqSpec::make("stirling1", {{"k", 2}}).evaluate(5) == q(-50));
    CHECK(SeqSpec::make("hyperharmonic_half", {{"p", 0}}).evaluate(3) == q(23, 24));
    CHECK(SeqSpec::make("lucas", {}).evaluate(0) == q(2));
    CHECK_THROWS_AS(SeqSpec::make("no_such", {}), LookupError);
    CHECK_THROWS_AS(SeqSpec::make("harmonic_like", {}), DomainError);
    CHECK_THROWS_AS(SeqSpec::make("harmonic_like", {{"m", -1}}), DomainError);
    CHECK_THROWS_AS(SeqSpec::make("harmonic", {{"m", 1}}), DomainError);
    CHECK_THROWS_AS(SeqSpec::make("harmonic_order", {{"r", 0}}), DomainError);
    for (auto f : all_families()) {
        CHECK(family_from_name(family_name(f)) == f);
    }
    CHECK_FALSE(family_from_name("fibonaci").has_value());
}

TEST_CASE("warm cache equals cold cache")
{
    const std::vector<SeqSpec> specs{
        SeqSpec::make("harmonic", {}),           SeqSpec::make("harmonic_order", {{"r", 3}}),
        SeqSpec::make("odd_harmonic", {}),       SeqSpec::make("harmonic_like", {{"m", 4}}),
        SeqSpec::make("stirling1", {{"k", 3}}),  SeqSpec::make("hyperharmonic", {{"p", 5}}),
        SeqSpec::make("hyperharmonic_half", {{"p", 2}}), SeqSpec::make("fibonacci", {}),
        SeqSpec::make("lucas", {}),              SeqSpec::make("half_harmonic_offset", {}),
    };
    SeqCache warm;
    for (const auto& spec : specs) {
        for (std::uint64_t n = 40; n-- > 0;) {
            (void)spec.evaluate(n, warm);
        }
    }
    for (const auto& spec : specs) {
        for (std::uint64_t n = 1; n < 40; ++n) {
            SeqCache cold;
            CHECK(spec.evaluate(n, warm) == spec.evaluate(n, cold));
        }
    }
    warm.clear();
    CHECK(warm.harmonic_like(6, 2) == harmonic_like(6, 2));
}

TEST_CASE("concurrent readers see the same values")
{
    SeqCache shared;
    std::vector<std::vector<Rational>> results(8);
    {
        std::vector<std::jthread> workers;
        for (std::size_t t = 0; t < results.size(); ++t) {
            workers.emplace_back([&shared, &out = results[t], t] {
                for (std::uint64_t i = 0; i < 60; ++i) {
                    const std::uint64_t n = (i * 7 + t * 13) % 60;
                    out.push_back(shared.harmonic_like(n, 1 + t % 4) + Rational(shared.stirling1(n, t % 5)) +
                                  shared.hyperharmonic(n + 1, t % 3));
                }
            });
        }
    }
    SeqCache reference;
    for (std::size_t t = 0; t < results.size(); ++t) {
        for (std::uint64_t i = 0; i < 60; ++i) {
            const std::uint64_t n = (i * 7 + t * 13) % 60;
            CHECK(results[t][i] == reference.harmonic_like(n, 1 + t % 4) + Rational(reference.stirling1(n, t % 5)) +
                                       reference.hyperharmonic(n + 1, t % 3));
        }
    }
}
