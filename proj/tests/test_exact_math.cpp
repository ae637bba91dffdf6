#include <doctest.h>

#include <numeric>

#include "harmlike/errors.hpp"
#include "harmlike/exact_math.hpp"
#include "support/random.hpp"

using namespace harmlike;
using harmlike::testing::RandomRationals;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

bool canonical(const Rational& x)
{
    const Integer g = gcd(x.numerator(), x.denominator());
    return x.denominator() > 0 && (g == 1 || (x.is_zero() && x.denominator() == 1));
}

// Multiplicative formula in machine integers; exact for the small range used.
std::uint64_t small_binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace

TEST_CASE("rational arithmetic examples")
{
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(q(3, 4) * q(4, 3) == q(1));
    const Rational r(Integer(-2), Integer(6));
    CHECK(r.numerator() == -1);
    CHECK(r.denominator() == 3);
    CHECK(r.str() == "-1/3");
    CHECK(Rational(Integer(2), Integer(-4)).str() == "-1/2");
    CHECK(q(7).str() == "7");
    CHECK(q(0, 5).str() == "0");
}

TEST_CASE("division by zero is a domain error")
{
    CHECK_THROWS_AS(q(1) / q(0), DomainError);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
    CHECK_THROWS_AS(q(0).reciprocal(), DomainError);
    CHECK_THROWS_AS(q(0).pow(-1), DomainError);
}

TEST_CASE("integer powers")
{
    CHECK(q(0).pow(0) == q(1));
    CHECK(q(2, 3).pow(3) == q(8, 27));
    CHECK(q(-2, 3).pow(-2) == q(9, 4));
    CHECK(q(5).pow(1) == q(5));
}

TEST_CASE("parse and decimal rendering")
{
    CHECK(Rational::parse("3") == q(3));
    CHECK(Rational::parse("-1/2") == q(-1, 2));
    CHECK(Rational::parse("+4/6") == q(2, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
    CHECK(q(1, 3).decimal(4) == "0.3333");
    CHECK(q(2, 3).decimal(2) == "0.67");
    CHECK(q(-1, 8).decimal(2) == "-0.13");
    CHECK(q(-1, 1000).decimal(2) == "0.00");
    CHECK(q(5, 2).decimal(0) == "3");
    CHECK(q(12).decimal(1) == "12.0");
}

TEST_CASE("to_int64 requires an integer")
{
    CHECK(q(-12).to_int64() == -12);
    CHECK_THROWS_AS(q(1, 2).to_int64(), DomainError);
}

TEST_CASE("canonical form survives every operation")
{
    RandomRationals rng(20240501);
    for (int i = 0; i < 500; ++i) {
        const auto x = rng.next();
        const auto y = rng.nonzero();
        CHECK(canonical(x));
        CHECK(canonical(x + y));
        CHECK(canonical(x - y));
        CHECK(canonical(x * y));
        CHECK(canonical(x / y));
        CHECK(canonical(-x));
        CHECK(canonical(y.pow(rng.integer(-4, 4))));
        CHECK((x + y) - y == x);
        CHECK((x / y) * y == x);
    }
}

TEST_CASE("ordering agrees with cross multiplication")
{
    RandomRationals rng(77);
    for (int i = 0; i < 200; ++i) {
        const auto x = rng.next();
        const auto y = rng.next();
        const Integer l = x.numerator() * y.denominator();
        const Integer r = y.numerator() * x.denominator();
        CHECK((x < y) == (l < r));
        CHECK((x == y) == (l == r));
    }
}

TEST_CASE("binomial examples and machine-integer oracle")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 7) == 0);
    for (std::uint64_t n = 0; n <= 40; ++n) {
        CHECK(binomial(n, 0) == 1);
        for (std::uint64_t k = 0; k <= n + 2; ++k) {
            CHECK(binomial(n, k) == Integer(static_cast<unsigned long>(small_binomial(n, k))));
        }
    }
}

TEST_CASE("factorial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    Integer prod = 1;
    for (unsigned i = 1; i <= 20; ++i) {
        prod *= i;
    }
    CHECK(factorial(20) == prod);
    CHECK(to_string(factorial(20)) == "2432902008176640000");
}

TEST_CASE("gen_binomial examples")
{
    CHECK(gen_binomial(q(1, 2), 1) == q(1, 2));
    CHECK(gen_binomial(q(3, 2), 2) == q(3, 8));
    CHECK(gen_binomial(q(-7, 3), 0) == q(1));
    // (3/2 choose 1) against 4^{-1} C(2,1)^{-1} C(4,2) C(2,1)
    const Rational rhs = q(1, 4) * Rational(binomial(2, 1)).reciprocal() * Rational(binomial(4, 2)) *
                         Rational(binomial(2, 1));
    CHECK(gen_binomial(q(3, 2), 1) == rhs);
    CHECK(rhs == q(3, 2));
}

TEST_CASE("gen_binomial reduces to binomial on nonnegative integers")
{
    for (std::uint64_t n = 0; n <= 30; ++n) {
        for (std::uint64_t k = 0; k <= 30; ++k) {
            CHECK(gen_binomial(Rational(n), k) == Rational(binomial(n, k)));
        }
    }
}

TEST_CASE("gen_binomial Pascal rule at random rationals")
{
    RandomRationals rng(5150);
    for (int i = 0; i < 60; ++i) {
        const auto x = rng.next(40, 12);
        for (std::uint64_t k = 1; k <= 20; ++k) {
            CHECK(gen_binomial(x, k) == gen_binomial(x - 1, k) + gen_binomial(x - 1, k - 1));
        }
    }
}

TEST_CASE("gen_binomial at half integers matches the central binomial product")
{
    for (std::uint64_t r = 0; r <= 12; ++r) {
        for (std::uint64_t p = 0; p <= 12; ++p) {
            const Rational x = Rational(r + p) - q(1, 2);
            const Rational rhs = q(4).pow(-static_cast<std::int64_t>(r)) *
                                 Rational(binomial(2 * p, p)).reciprocal() *
                                 Rational(Integer(binomial(2 * (r + p), r + p) * binomial(r + p, r)));
            CHECK(gen_binomial(x, r) == rhs);
        }
    }
}
