#include "harmlike/power_series.hpp"

#include <algorithm>

namespace harmlike {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw DomainError("a truncated series needs at least the constant coefficient");
    }
}

TruncatedSeries TruncatedSeries::zero(std::uint64_t order)
{
    return TruncatedSeries(std::vector<Rational>(order + 1));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::uint64_t order)
{
    std::vector<Rational> coeffs(order + 1);
    coeffs[0] = c;
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::linear(const Rational& c0, const Rational& c1, std::uint64_t order)
{
    std::vector<Rational> coeffs(order + 1);
    coeffs[0] = c0;
    if (order >= 1) {
        coeffs[1] = c1;
    }
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::truncated(std::uint64_t order) const
{
    const auto len = std::min<std::uint64_t>(order + 1, coeffs_.size());
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(len)));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs)
{
    const auto order = std::min(lhs.order(), rhs.order());
    std::vector<Rational> out(order + 1);
    for (std::uint64_t i = 0; i <= order; ++i) {
        if (lhs.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::uint64_t j = 0; i + j <= order; ++j) {
            if (!rhs.coeffs_[j].is_zero()) {
                out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
            }
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_inverse(const TruncatedSeries& f)
{
    if (f[0].is_zero()) {
        throw DomainError("series inverse needs a nonzero constant term");
    }
    const auto order = f.order();
    const Rational inv0 = f[0].reciprocal();
    std::vector<Rational> g(order + 1);
    g[0] = inv0;
    for (std::uint64_t n = 1; n <= order; ++n) {
        Rational acc;
        for (std::uint64_t k = 1; k <= n; ++k) {
            if (!f[k].is_zero()) {
                acc += f[k] * g[n - k];
            }
        }
        g[n] = -(acc * inv0);
    }
    return TruncatedSeries(std::move(g));
}

TruncatedSeries series_neg_log_one_minus(const Rational& a, std::uint64_t order)
{
    std::vector<Rational> coeffs(order + 1);
    Rational power(1);
    for (std::uint64_t k = 1; k <= order; ++k) {
        power *= a;
        coeffs[k] = power / Rational(k);
    }
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries series_pow(const TruncatedSeries& f, std::uint64_t m)
{
    TruncatedSeries result = TruncatedSeries::constant(Rational(1), f.order());
    TruncatedSeries base = f;
    while (m > 0) {
        if (m & 1U) {
            result = result * base;
        }
        m >>= 1U;
        if (m > 0) {
            base = base * base;
        }
    }
    return result;
}

TruncatedSeries series_sqrt(const TruncatedSeries& f)
{
    if (f[0] != Rational(1)) {
        throw DomainError("series sqrt needs constant term 1, got " + f[0].str());
    }
    const auto order = f.order();
    const Rational half(Integer(1), Integer(2));
    std::vector<Rational> g(order + 1);
    g[0] = Rational(1);
    for (std::uint64_t n = 1; n <= order; ++n) {
        Rational acc;
        for (std::uint64_t k = 1; k < n; ++k) {
            acc += g[k] * g[n - k];
        }
        g[n] = (f[n] - acc) * half;
    }
    return TruncatedSeries(std::move(g));
}

TruncatedSeries series_compose_mobius(const TruncatedSeries& f, const Rational& a, const Rational& b,
                                      std::uint64_t order)
{
    order = std::min(order, f.order());
    std::vector<Rational> a_pow(order + 1);
    std::vector<Rational> b_pow(order + 1);
    a_pow[0] = Rational(1);
    b_pow[0] = Rational(1);
    for (std::uint64_t i = 1; i <= order; ++i) {
        a_pow[i] = a_pow[i - 1] * a;
        b_pow[i] = b_pow[i - 1] * b;
    }
    std::vector<Rational> out(order + 1);
    out[0] = f[0];
    for (std::uint64_t n = 1; n <= order; ++n) {
        Rational acc;
        for (std::uint64_t k = 1; k <= n; ++k) {
            if (f[k].is_zero() || b_pow[n - k].is_zero()) {
                continue;
            }
            acc += f[k] * a_pow[k] * Rational(binomial(n - 1, n - k)) * b_pow[n - k];
        }
        out[n] = std::move(acc);
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_scale(const TruncatedSeries& f, const Rational& c)
{
    std::vector<Rational> out(f.order() + 1);
    Rational power(1);
    for (std::uint64_t n = 0; n <= f.order(); ++n) {
        out[n] = f[n] * power;
        power *= c;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries gf_harmonic_like(std::uint64_t m, std::uint64_t order)
{
    const auto geometric = series_inverse(TruncatedSeries::linear(Rational(1), Rational(-1), order));
    return series_pow(series_neg_log_one_minus(Rational(1), order), m) * geometric;
}

TruncatedSeries gf_stirling_column(std::uint64_t k, std::uint64_t order)
{
    // ln(1+z) = -(-ln(1 - (-1) z))
    const auto log_one_plus = -series_neg_log_one_minus(Rational(-1), order);
    return series_pow(log_one_plus, k) * Rational(factorial(k)).reciprocal();
}

TruncatedSeries gf_central_binomial(std::uint64_t order)
{
    return series_inverse(series_sqrt(TruncatedSeries::linear(Rational(1), Rational(-4), order)));
}

TruncatedSeries gf_odd_central(std::uint64_t order)
{
    const auto one_minus_4z = TruncatedSeries::linear(Rational(1), Rational(-4), order);
    const auto log_part = series_neg_log_one_minus(Rational(4), order) * series_inverse(one_minus_4z);
    return series_sqrt(one_minus_4z) * log_part * Rational(Integer(1), Integer(2));
}

TruncatedSeries gf_hyperharmonic(std::uint64_t p, std::uint64_t order)
{
    if (p == 0) {
        throw DomainError("hyperharmonic generating function needs p >= 1");
    }
    const auto one_minus_z = TruncatedSeries::linear(Rational(1), Rational(-1), order);
    return series_neg_log_one_minus(Rational(1), order) * series_inverse(series_pow(one_minus_z, p));
}

TruncatedSeries gf_binomial_sum(const Rational& a, const Rational& b, std::uint64_t m, std::uint64_t order)
{
    const auto outer = series_inverse(TruncatedSeries::linear(Rational(1), -b, order));
    return outer * series_compose_mobius(gf_harmonic_like(m, order), a, b, order);
}

} // namespace harmlike
