#include <doctest.h>

#include <vector>

#include "harmlike/errors.hpp"
#include "harmlike/sequences.hpp"
#include "harmlike/transforms.hpp"
#include "support/random.hpp"

using namespace harmlike;
using harmlike::testing::RandomRationals;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

const std::vector<std::pair<Rational, Rational>>& fixtures()
{
    static const std::vector<std::pair<Rational, Rational>> f{
        {q(1), q(1)},        {q(-1), q(1)}, {q(2), q(1)}, {q(1), q(2)},
        {q(1, 2), q(-1, 3)}, {q(3), q(-2)}, {q(0), q(1)}, {q(1), q(0)},
    };
    return f;
}

// Literal sum with explicit 0^0 = 1 handling.
Rational literal_sum(const Rational& a, const Rational& b, std::uint64_t m, std::uint64_t n)
{
    const auto power = [](const Rational& x, std::uint64_t e) {
        Rational r(1);
        for (std::uint64_t i = 0; i < e; ++i) {
            r *= x;
        }
        return r;
    };
    Rational s;
    for (std::uint64_t k = 0; k <= n; ++k) {
        s += Rational(binomial(n, k)) * power(a, k) * power(b, n - k) * harmonic_like_bruteforce(k, m);
    }
    return s;
}

} // namespace

TEST_CASE("direct sum examples")
{
    CHECK(binomial_sum_direct({q(2), q(1), 0, 3}) == q(27));
    CHECK(binomial_sum_direct({q(1), q(1), 1, 2}) == q(7, 2));
    CHECK(binomial_sum_direct({q(1), q(1), 2, 2}) == q(1));
    CHECK(binomial_sum_direct({q(0), q(0), 0, 0}) == q(1));
    for (const auto& [a, b] : fixtures()) {
        for (std::uint64_t n = 0; n <= 10; ++n) {
            CHECK(binomial_sum_direct({a, b, 0, n}) == (a + b).pow(static_cast<std::int64_t>(n)));
        }
    }
}

TEST_CASE("direct sum against the composition oracle")
{
    for (const auto& [a, b] : fixtures()) {
        for (std::uint64_t m = 0; m <= 3; ++m) {
            for (std::uint64_t n = 0; n <= 9; ++n) {
                CHECK(binomial_sum_direct({a, b, m, n}) == literal_sum(a, b, m, n));
            }
        }
    }
}

TEST_CASE("closed form examples")
{
    CHECK(binomial_sum_closed({q(-1), q(1), 2, 3}) == q(1));
    CHECK(binomial_sum_closed({q(1), q(1), 1, 2}) == q(7, 2));
    CHECK(binomial_sum_closed({q(5, 7), q(-5, 7), 0, 4}) == q(0));
    CHECK(binomial_sum_closed({q(-3), q(3), 0, 0}) == q(1));
}

TEST_CASE("closed form equals the direct sum on the fixture grid")
{
    for (const auto& [a, b] : fixtures()) {
        for (std::uint64_t m = 0; m <= 4; ++m) {
            for (std::uint64_t n = 0; n <= 25; ++n) {
                const BinomialSumParams p{a, b, m, n};
                CAPTURE(p.n);
                CAPTURE(p.m);
                CHECK(binomial_sum_closed(p) == binomial_sum_direct(p));
            }
        }
    }
}

TEST_CASE("specializations equal the closed form")
{
    for (const auto& [a, b] : fixtures()) {
        for (std::uint64_t n = 0; n <= 25; ++n) {
            CHECK(binomial_sum_m1({a, b, 1, n}) == binomial_sum_closed({a, b, 1, n}));
            CHECK(binomial_sum_m2({a, b, 2, n}) == binomial_sum_closed({a, b, 2, n}));
            CHECK(binomial_sum_m3({a, b, 3, n}) == binomial_sum_closed({a, b, 3, n}));
        }
    }
    CHECK_THROWS_AS(binomial_sum_m1({q(1), q(1), 2, 3}), DomainError);
    CHECK_THROWS_AS(binomial_sum_m2({q(1), q(1), 1, 3}), DomainError);
    CHECK_THROWS_AS(binomial_sum_m3({q(1), q(1), 0, 3}), DomainError);
}

TEST_CASE("specialization spot values")
{
    CHECK(binomial_sum_m1({q(1), q(1), 1, 2}) == q(7, 2));
    CHECK(binomial_sum_m2({q(1), q(1), 2, 2}) == q(1));
    CHECK(binomial_sum_m2({q(-1), q(1), 2, 3}) == q(1));
    CHECK(binomial_sum_m2({q(-1), q(1), 2, 3}) == q(2, 3) * harmonic(2));
    CHECK(binomial_sum_m3({q(-1), q(1), 3, 4}) ==
          q(6) / q(24) * Rational(stirling1(4, 3)));
    CHECK(binomial_sum_m1({q(1), q(-1), 1, 3}) == q(1, 3));
    for (std::uint64_t n = 0; n <= 12; ++n) {
        const Rational a = q(-4, 3);
        const Rational an = a.pow(static_cast<std::int64_t>(n));
        CHECK(binomial_sum_m1({a, 0, 1, n}) == harmonic(n) * an);
        CHECK(binomial_sum_m2({a, 0, 2, n}) == harmonic_like(n, 2) * an);
        CHECK(binomial_sum_m3({a, 0, 3, n}) == harmonic_like(n, 3) * an);
    }
}

TEST_CASE("stirling column sums give harmonic-like numbers")
{
    for (std::uint64_t m = 0; m <= 5; ++m) {
        for (std::uint64_t n = 0; n <= 30; ++n) {
            Rational s;
            for (std::uint64_t k = m; k <= n; ++k) {
                s += Rational(binomial(n, k)) * Rational(stirling1(k, m)) / Rational(factorial(k));
            }
            CHECK(s == harmonic_like(n, m) / Rational(factorial(m)));
        }
    }
}

TEST_CASE("transform examples")
{
    const IndexedSequence h = [](std::uint64_t k) { return harmonic(k); };
    const IndexedSequence h2 = [](std::uint64_t k) { return harmonic_like(k, 2); };
    CHECK(binomial_transform(h, 3, true) == q(-1, 3));
    CHECK(binomial_transform(h2, 3, true) == q(1));
    CHECK(binomial_transform(h, 2, false) == q(7, 2));

    const std::vector<Rational> seq{q(1), q(1, 2), q(1, 3), q(1, 4)};
    const IndexedSequence s = [&seq](std::uint64_t k) { return seq.at(k); };
    const IndexedSequence forward = [&s](std::uint64_t k) { return binomial_transform(s, k, false); };
    const IndexedSequence backward = [&s](std::uint64_t k) { return inverse_binomial_transform(s, k); };
    const IndexedSequence flip = [&s](std::uint64_t k) { return binomial_transform(s, k, true); };
    for (std::uint64_t n = 0; n < seq.size(); ++n) {
        CHECK(inverse_binomial_transform(forward, n) == seq[n]);
        CHECK(binomial_transform(backward, n, false) == seq[n]);
        CHECK(binomial_transform(flip, n, true) == seq[n]);
    }
}

TEST_CASE("signed transform is an involution on random sequences")
{
    RandomRationals rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> seq(21);
        for (auto& v : seq) {
            v = rng.next();
        }
        const IndexedSequence s = [&seq](std::uint64_t k) { return seq.at(k); };
        std::vector<Rational> once(21);
        for (std::uint64_t n = 0; n <= 20; ++n) {
            once[n] = binomial_transform(s, n, true);
        }
        const IndexedSequence t = [&once](std::uint64_t k) { return once.at(k); };
        for (std::uint64_t n = 0; n <= 20; ++n) {
            CHECK(binomial_transform(t, n, true) == seq[n]);
        }
    }
}
