#include "harmlike/transforms.hpp"

#include <vector>

#include "harmlike/sequences.hpp"

namespace harmlike {

namespace {

// x^0 .. x^n with 0^0 = 1.
std::vector<Rational> powers(const Rational& x, std::uint64_t n)
{
    std::vector<Rational> out(n + 1);
    out[0] = Rational(1);
    for (std::uint64_t i = 1; i <= n; ++i) {
        out[i] = out[i - 1] * x;
    }
    return out;
}

void require_m(const BinomialSumParams& p, std::uint64_t m)
{
    if (p.m != m) {
        throw DomainError("this specialization needs m = " + std::to_string(m) + ", got m = " + std::to_string(p.m));
    }
}

} // namespace

Rational binomial_sum_direct(const BinomialSumParams& p)
{
    const auto a_pow = powers(p.a, p.n);
    const auto b_pow = powers(p.b, p.n);
    Rational acc;
    for (std::uint64_t k = 0; k <= p.n; ++k) {
        const Rational& weight = b_pow[p.n - k];
        if (a_pow[k].is_zero() || weight.is_zero()) {
            continue;
        }
        acc += Rational(binomial(p.n, k)) * a_pow[k] * weight * harmonic_like(k, p.m);
    }
    return acc;
}

Rational binomial_sum_closed(const BinomialSumParams& p)
{
    const auto c_pow = powers(p.a + p.b, p.n);
    const auto b_pow = powers(p.b, p.n);
    Rational acc;
    for (std::uint64_t j = 0; j <= p.m; ++j) {
        const Integer outer = binomial(p.m, j) * factorial(p.m - j);
        for (std::uint64_t k = 0; k <= p.n; ++k) {
            const std::uint64_t d = p.n - k;
            const Integer s = stirling1(d, p.m - j);
            if (s == 0 || b_pow[d].is_zero() || c_pow[k].is_zero()) {
                continue;
            }
            const Rational coeff(outer * s * neg_one_pow(static_cast<std::int64_t>(d)), factorial(d));
            acc += coeff * harmonic_like(k, j) * c_pow[k] * b_pow[d];
        }
    }
    return acc;
}

Rational binomial_sum_m1(const BinomialSumParams& p)
{
    require_m(p, 1);
    const auto c_pow = powers(p.a + p.b, p.n);
    const auto b_pow = powers(p.b, p.n);
    Rational correction;
    for (std::uint64_t k = 0; k < p.n; ++k) {
        correction += c_pow[k] * b_pow[p.n - k] / Rational(p.n - k);
    }
    return harmonic(p.n) * c_pow[p.n] - correction;
}

Rational binomial_sum_m2(const BinomialSumParams& p)
{
    require_m(p, 2);
    const auto c_pow = powers(p.a + p.b, p.n);
    const auto b_pow = powers(p.b, p.n);
    Rational correction;
    for (std::uint64_t k = 1; k <= p.n; ++k) {
        correction += c_pow[p.n - k] * b_pow[k] * (harmonic(k - 1) - harmonic(p.n - k)) / Rational(k);
    }
    return harmonic_like(p.n, 2) * c_pow[p.n] + Rational(2) * correction;
}

Rational binomial_sum_m3(const BinomialSumParams& p)
{
    require_m(p, 3);
    const auto c_pow = powers(p.a + p.b, p.n);
    const auto b_pow = powers(p.b, p.n);
    Rational correction;
    for (std::uint64_t k = 1; k <= p.n; ++k) {
        const Rational lo = harmonic(k - 1);
        const Rational hi = harmonic(p.n - k);
        const Rational bracket = lo * lo - harmonic_order(k - 1, 2) - Rational(2) * lo * hi + hi * hi -
                                 harmonic_order(p.n - k, 2);
        correction += c_pow[p.n - k] * b_pow[k] * bracket / Rational(k);
    }
    return harmonic_like(p.n, 3) * c_pow[p.n] - Rational(3) * correction;
}

Rational binomial_transform(const IndexedSequence& seq, std::uint64_t n, bool is_signed)
{
    Rational acc;
    for (std::uint64_t k = 0; k <= n; ++k) {
        Rational term = Rational(binomial(n, k)) * seq(k);
        if (is_signed && k % 2 == 1) {
            term = -term;
        }
        acc += term;
    }
    return acc;
}

Rational inverse_binomial_transform(const IndexedSequence& seq, std::uint64_t n)
{
    Rational acc;
    for (std::uint64_t k = 0; k <= n; ++k) {
        Rational term = Rational(binomial(n, k)) * seq(k);
        if ((n - k) % 2 == 1) {
            term = -term;
        }
        acc += term;
    }
    return acc;
}

} // namespace harmlike
