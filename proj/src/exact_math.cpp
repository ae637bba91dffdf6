#include "harmlike/exact_math.hpp"

#include <limits>

namespace harmlike {

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_.get_num() = num;
    value_.get_den() = den;
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto bad = [&] { return DomainError("not a rational number: '" + std::string(text) + "'"); };
    const auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (c < '0' || c > '9') {
                return false;
            }
        }
        return true;
    };
    const auto to_integer = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') {
            s.remove_prefix(1);
        }
        return Integer(std::string(s), 10);
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) {
            throw bad();
        }
        return Rational(to_integer(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) {
        throw bad();
    }
    return Rational(to_integer(num), to_integer(den));
}

std::int64_t Rational::to_int64() const
{
    if (!is_integer() || !value_.get_num().fits_slong_p()) {
        throw DomainError("rational " + str() + " is not a machine integer");
    }
    return value_.get_num().get_si();
}

Rational Rational::reciprocal() const
{
    if (is_zero()) {
        throw DomainError("reciprocal of zero");
    }
    mpq_class r;
    mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(std::int64_t exponent) const
{
    // 0^0 = 1.
    if (exponent == 0) {
        return Rational(1);
    }
    if (exponent < 0) {
        if (is_zero()) {
            throw DomainError("zero raised to a negative power");
        }
        return reciprocal().pow(-exponent);
    }
    mpq_class r;
    const auto e = static_cast<unsigned long>(exponent);
    mpz_pow_ui(r.get_num_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), value_.get_den_mpz_t(), e);
    return Rational(std::move(r));
}

std::string Rational::str() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(unsigned digits) const
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const Integer num = abs(Integer(value_.get_num())) * scale;
    const Integer den = value_.get_den();
    // round half away from zero: floor((2 num + den) / (2 den))
    Integer q = (2 * num + den) / (2 * den);

    std::string s = q.get_str();
    if (digits > 0) {
        if (s.size() <= digits) {
            s.insert(0, digits + 1 - s.size(), '0');
        }
        s.insert(s.size() - digits, ".");
    }
    if (sign() < 0 && q != 0) {
        s.insert(0, "-");
    }
    return s;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::string to_string(const Integer& v)
{
    return v.get_str();
}

Integer binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(std::uint64_t n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational gen_binomial(const Rational& x, std::uint64_t k)
{
    Rational falling(1);
    Rational term = x;
    for (std::uint64_t i = 0; i < k; ++i) {
        falling *= term;
        term -= Rational(1);
    }
    return falling / Rational(factorial(k));
}

} // namespace harmlike
