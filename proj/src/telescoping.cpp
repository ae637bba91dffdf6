#include "harmlike/telescoping.hpp"

#include <vector>

#include "harmlike/sequences.hpp"

namespace harmlike {

SidePair telescope_harmonic_check(const IndexedSequence& a, std::uint64_t n)
{
    Rational lhs;
    Rational tail;
    for (std::uint64_t k = 1; k <= n; ++k) {
        const Rational ak = a(k);
        lhs += harmonic(k) * (a(k + 1) - ak);
        tail += ak / Rational(k);
    }
    return {lhs, harmonic(n) * a(n + 1) - tail};
}

SidePair telescope_reciprocal_check(const IndexedSequence& a, std::uint64_t n)
{
    Rational lhs;
    Rational weighted;
    Rational prev = a(0);
    const Rational first = prev;
    for (std::uint64_t k = 1; k <= n; ++k) {
        Rational ak = a(k);
        lhs += (ak - prev) / Rational(k);
        weighted += ak / Rational(k * (k + 1));
        prev = std::move(ak);
    }
    return {lhs, weighted - first + prev / Rational(n + 1)};
}

SidePair telescope_kollar_check(const IndexedSequence& a, const Rational& r, std::uint64_t n)
{
    const Rational r_minus_one = r - Rational(1);
    Rational lhs;
    Rational tail;
    for (std::uint64_t k = 0; k <= n; ++k) {
        const int sign = (k % 2 == 0) ? 1 : -1;
        const Rational ak = a(k);
        lhs += Rational(sign) * gen_binomial(r_minus_one, k) * (a(k + 1) - ak);
        tail += Rational(sign) * gen_binomial(r, k) * ak;
    }
    const int sign_n = (n % 2 == 0) ? 1 : -1;
    return {lhs, Rational(sign_n) * gen_binomial(r_minus_one, n) * a(n + 1) - tail};
}

SidePair telescope_linear_check(const IndexedSequence& a, std::uint64_t n)
{
    Rational lhs;
    Rational tail;
    Rational prev = a(0);
    for (std::uint64_t k = 1; k <= n; ++k) {
        Rational ak = a(k);
        lhs += Rational(k) * (ak - prev);
        tail += prev;
        prev = std::move(ak);
    }
    return {lhs, Rational(n) * prev - tail};
}

} // namespace harmlike
