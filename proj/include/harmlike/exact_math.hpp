#pragma once

// Exact integer and rational arithmetic.
//
// Integer is GMP's mpz_class. Rational wraps mpq_class and keeps it in
// canonical form (positive denominator, gcd(|num|, den) = 1, zero as 0/1)
// after every operation.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

#include "harmlike/errors.hpp"

namespace harmlike {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;

    template <typename T>
        requires std::is_integral_v<T>
    Rational(T v) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<T>) {
            mpz_set_si(value_.get_num_mpz_t(), static_cast<long>(v));
        } else {
            mpz_set_ui(value_.get_num_mpz_t(), static_cast<unsigned long>(v));
        }
    }

    Rational(const Integer& v) : value_(v) {} // NOLINT(google-explicit-constructor)

    // num/den, reduced. Throws DomainError when den == 0.
    Rational(const Integer& num, const Integer& den);

    // Accepts "p", "-p", "p/q" with q != 0. Throws DomainError otherwise.
    static Rational parse(std::string_view text);

    Integer numerator() const { return Integer(value_.get_num()); }
    Integer denominator() const { return Integer(value_.get_den()); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    // Only meaningful when is_integer() and the value fits; throws otherwise.
    std::int64_t to_int64() const;

    Rational reciprocal() const;
    Rational pow(std::int64_t exponent) const;

    // "p/q", or "p" when q == 1; sign always on the numerator.
    std::string str() const;

    // Rounded to `digits` places after the decimal point (half away from zero).
    std::string decimal(unsigned digits) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs)
    {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
    {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

std::string to_string(const Integer& v);

// C(n, k); zero when k > n.
Integer binomial(std::uint64_t n, std::uint64_t k);

Integer factorial(std::uint64_t n);

// x (x-1) ... (x-k+1) / k!; 1 when k == 0.
Rational gen_binomial(const Rational& x, std::uint64_t k);

// (-1)^k as +1/-1.
inline int neg_one_pow(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace harmlike
