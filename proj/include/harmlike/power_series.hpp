#pragma once

// Truncated formal power series over Rational.
//
// A series of order N carries exactly N + 1 coefficients, for z^0 .. z^N.
// Binary operations between series of different orders truncate to the
// smaller order.

#include <cstdint>
#include <vector>

#include "harmlike/exact_math.hpp"

namespace harmlike {

class TruncatedSeries {
public:
    // Throws DomainError when coeffs is empty.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries zero(std::uint64_t order);
    static TruncatedSeries constant(const Rational& c, std::uint64_t order);
    // c0 + c1 z, truncated at `order`.
    static TruncatedSeries linear(const Rational& c0, const Rational& c1, std::uint64_t order);

    std::uint64_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::uint64_t n) const { return coeffs_.at(n); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(std::uint64_t order) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Rational& scalar);

    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
    friend TruncatedSeries operator*(TruncatedSeries lhs, const Rational& s) { return lhs *= s; }
    friend TruncatedSeries operator*(const Rational& s, TruncatedSeries rhs) { return rhs *= s; }
    TruncatedSeries operator-() const;

    // Cauchy product truncated at the smaller order.
    friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

// g with f g = 1 mod z^{N+1}. Throws DomainError if f(0) == 0.
TruncatedSeries series_inverse(const TruncatedSeries& f);

// -ln(1 - a z) = sum_{k>=1} a^k z^k / k.
TruncatedSeries series_neg_log_one_minus(const Rational& a, std::uint64_t order);

// f^m; f^0 is the constant series 1.
TruncatedSeries series_pow(const TruncatedSeries& f, std::uint64_t m);

// g with g^2 = f and g(0) = 1, from the coefficient recurrence
//   2 g_n = f_n - sum_{k=1}^{n-1} g_k g_{n-k}.
// Throws DomainError unless f(0) == 1.
TruncatedSeries series_sqrt(const TruncatedSeries& f);

// f(a z / (1 - b z)) truncated at min(order, f.order()), using
//   [z^n] (a z)^k / (1 - b z)^k = a^k C(n-1, n-k) b^{n-k}   (k >= 1).
TruncatedSeries series_compose_mobius(const TruncatedSeries& f, const Rational& a, const Rational& b,
                                      std::uint64_t order);

// f(c z).
TruncatedSeries series_scale(const TruncatedSeries& f, const Rational& c);

// (-ln(1-z))^m / (1-z): coefficients are H_n(m).
TruncatedSeries gf_harmonic_like(std::uint64_t m, std::uint64_t order);

// ln^k(1+z) / k!: coefficient n times n! is s(n, k).
TruncatedSeries gf_stirling_column(std::uint64_t k, std::uint64_t order);

// 1/sqrt(1-4z): coefficients C(2n, n).
TruncatedSeries gf_central_binomial(std::uint64_t order);

// (1/2) sqrt(1-4z) (-ln(1-4z)) / (1-4z): coefficients C(2n, n) O_n.
TruncatedSeries gf_odd_central(std::uint64_t order);

// (-ln(1-z)) / (1-z)^p for p >= 1: coefficients H_{n,p}.
// Throws DomainError for p == 0 (H_{0,0} has no coefficient).
TruncatedSeries gf_hyperharmonic(std::uint64_t p, std::uint64_t order);

// (1/(1-bz)) H(a z / (1 - b z)) with H the H_n(m) generating function:
// coefficients are the binomial sums S_n(a, b, m).
TruncatedSeries gf_binomial_sum(const Rational& a, const Rational& b, std::uint64_t m, std::uint64_t order);

} // namespace harmlike
