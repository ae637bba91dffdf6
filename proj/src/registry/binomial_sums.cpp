// Binomial sums S_n(a, b, m), their closed form, corollaries and examples.

#include "common.hpp"

#include "harmlike/power_series.hpp"
#include "harmlike/transforms.hpp"

namespace harmlike::registry {

namespace {

BinomialSumParams params_of(const Binding& b, u64 m)
{
    return {b.at("a"), b.at("b"), m, b.nat("n")};
}

BinomialSumParams params_of(const Binding& b)
{
    return params_of(b, b.nat("m"));
}

// H_{k-1} - H_{n-k}
Rational harm_gap(u64 k, u64 n)
{
    return harm(k - 1) - harm(n - k);
}

// sum_{k=0}^n C(n,k) w(k) H_k(2)
template <typename W>
Rational weighted_binomial_h2(u64 n, W&& w)
{
    return sum_over(0, as_int(n), [&](u64 k) { return choose(n, k) * w(k) * hlike(k, 2); });
}

// H_n(2) lead + 2 sum_{k=1}^n w(k) (H_{k-1} - H_{n-k}) / k
template <typename W>
Rational h2_correction_form(u64 n, const Rational& lead, W&& w)
{
    return hlike(n, 2) * lead +
           Rational(2) * sum_over(1, as_int(n), [&](u64 k) { return w(k) * harm_gap(k, n) / Rational(k); });
}

bool n_positive(const Binding& b)
{
    return b.nat("n") >= 1;
}

} // namespace

void add_binomial_sums(Registry& reg)
{
    const std::string tag = "section2";

    reg.add(make(
        "main_id1", "Closed form of S_n(a,b,m) via Stirling numbers",
        "S_n(a,b,m) = sum_{j=0}^m C(m,j) sum_{k=0}^n H_k(j) (a+b)^k (m-j)!/(n-k)! (-1)^{n-k} b^{n-k} s(n-k,m-j)",
        tag, {ab_fixtures(), nrange("m", 0, 4), nrange("n", 0, 25)},
        [](const Binding& b) { return binomial_sum_direct(params_of(b)); },
        [](const Binding& b) { return binomial_sum_closed(params_of(b)); }));

    reg.add(make(
        "main_id1_gf", "S_n(a,b,m) as coefficients of H(az/(1-bz))/(1-bz)",
        "sum_n S_n(a,b,m) z^n = (1/(1-bz)) H(az/(1-bz))", tag,
        {ab_fixtures(), nrange("m", 0, 3), nrange("n", 0, 16)},
        [](const Binding& b) { return binomial_sum_direct(params_of(b)); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return gf_binomial_sum(b.at("a"), b.at("b"), b.nat("m"), n)[n];
        }));

    reg.add(make(
        "remark_m0", "S_n(a,b,0) = (a+b)^n", "S_n(a,b,0) = sum_k C(n,k) a^k b^{n-k} = (a+b)^n", tag,
        {ab_fixtures(), nrange("n", 0, 25)}, [](const Binding& b) { return binomial_sum_direct(params_of(b, 0)); },
        [](const Binding& b) { return (b.at("a") + b.at("b")).pow(as_int(b.nat("n"))); }));

    reg.add(make(
        "remark_m1", "S_n(a,b,1) two-term closed form",
        "S_n(a,b,1) = H_n (a+b)^n - sum_{k=0}^{n-1} (a+b)^k b^{n-k} / (n-k)", tag,
        {ab_fixtures(), nrange("n", 0, 25)}, [](const Binding& b) { return binomial_sum_direct(params_of(b, 1)); },
        [](const Binding& b) { return binomial_sum_m1(params_of(b, 1)); }));

    reg.add(make(
        "cor_id1", "Alternating binomial sum of H_k(m)",
        "sum_{k=0}^n C(n,k) (-1)^k H_k(m) = (-1)^n m!/n! s(n,m)", tag, {nrange("n", 0, 25), nrange("m", 0, 4)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            const auto m = b.nat("m");
            return sum_over(0, as_int(n), [&](u64 k) { return choose(n, k) * sign(k) * hlike(k, m); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            const auto m = b.nat("m");
            return sign(n) * Rational(factorial(m) * stirling1(n, m), factorial(n));
        }));

    reg.add(make(
        "cor_id2", "Inverse transform: binomial sum of s(k,m)/k!",
        "sum_{k=m}^n C(n,k) s(k,m)/k! = H_n(m)/m!", tag, {nrange("n", 0, 30), nrange("m", 0, 5)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            const auto m = b.nat("m");
            return sum_over(as_int(m), as_int(n),
                            [&](u64 k) { return choose(n, k) * stirling_over_factorial(k, m); });
        },
        [](const Binding& b) {
            const auto m = b.nat("m");
            return hlike(b.nat("n"), m) / Rational(factorial(m));
        }));

    reg.add(make(
        "cor_id3", "Binomial sum of H_k(m) (a = b = 1)",
        "sum_{k=0}^n C(n,k) H_k(m) = sum_{j=0}^m C(m,j) sum_{k=0}^n H_k(j) (-1)^{n-k} 2^k (m-j)!/(n-k)! s(n-k,m-j)",
        tag, {nrange("n", 0, 25), nrange("m", 0, 4)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            const auto m = b.nat("m");
            return sum_over(0, as_int(n), [&](u64 k) { return choose(n, k) * hlike(k, m); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            const auto m = b.nat("m");
            return sum_over(0, as_int(m), [&](u64 j) {
                return choose(m, j) * sum_over(0, as_int(n), [&](u64 k) {
                           return hlike(k, j) * sign(n - k) * ipow(2, k) *
                                  Rational(factorial(m - j) * stirling1(n - k, m - j), factorial(n - k));
                       });
            });
        }));

    reg.add(make(
        "classical_Hk", "Binomial sum of harmonic numbers",
        "sum_{k=0}^n C(n,k) H_k = 2^n (H_n - sum_{k=1}^n 1/(2^k k))", tag, {nrange("n", 0, 30)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            return sum_over(0, as_int(n), [&](u64 k) { return choose(n, k) * harm(k); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return ipow(2, n) *
                   (harm(n) - sum_over(1, as_int(n), [](u64 k) { return (ipow(2, k) * Rational(k)).reciprocal(); }));
        }));

    reg.add(make(
        "cor_id4", "S_n(a,b,2) closed form",
        "S_n(a,b,2) = H_n(2) (a+b)^n + 2 sum_{k=1}^n (a+b)^{n-k} b^k (H_{k-1} - H_{n-k})/k", tag,
        {ab_fixtures(), nrange("n", 0, 25)}, [](const Binding& b) { return binomial_sum_direct(params_of(b, 2)); },
        [](const Binding& b) { return binomial_sum_m2(params_of(b, 2)); }));

    reg.add(make(
        "ex_Hk2_2n", "Binomial sum of H_k(2)",
        "sum_{k=0}^n C(n,k) H_k(2) = 2^n (H_n(2) + 2 sum_{k=1}^n (H_{k-1} - H_{n-k})/(2^k k))", tag,
        {nrange("n", 0, 25)}, [](const Binding& b) { return weighted_binomial_h2(b.nat("n"), [](u64) { return Rational(1); }); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return ipow(2, n) * h2_correction_form(n, Rational(1), [](u64 k) { return ipow(2, k).reciprocal(); });
        }));

    reg.add(make(
        "ex_alt_Hk2", "Alternating binomial sum of H_k(2)", "sum_{k=0}^n C(n,k) (-1)^k H_k(2) = (2/n) H_{n-1}", tag,
        {nrange("n", 1, 30)}, [](const Binding& b) { return weighted_binomial_h2(b.nat("n"), sign); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return Rational(2) * harm(n - 1) / Rational(n);
        }));

    reg.add(make(
        "ex_alt_Hk2sq", "Alternating binomial sum of H_k^(2)", "sum_{k=0}^n C(n,k) (-1)^k H_k^{(2)} = -H_n/n", tag,
        {nrange("n", 1, 30)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            return sum_over(0, as_int(n), [&](u64 k) { return choose(n, k) * sign(k) * harm2(k); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return -harm(n) / Rational(n);
        }));

    reg.add(make(
        "ex_alt_Hksq", "Alternating binomial sum of H_k^2", "sum_{k=0}^n C(n,k) (-1)^k H_k^2 = H_n/n - 2/n^2", tag,
        {nrange("n", 1, 30)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            return sum_over(0, as_int(n), [&](u64 k) {
                const auto h = harm(k);
                return choose(n, k) * sign(k) * h * h;
            });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return harm(n) / Rational(n) - Rational(2) / Rational(n * n);
        },
        n_positive));

    reg.add(make(
        "ex_inv_HkOverK", "Alternating binomial sum of H_k/k",
        "sum_{k=1}^n C(n,k) (-1)^{k+1} H_k/k = H_n^{(2)}", tag, {nrange("n", 0, 30)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            return sum_over(1, as_int(n), [&](u64 k) { return -choose(n, k) * sign(k) * harm(k) / Rational(k); });
        },
        [](const Binding& b) { return harm2(b.nat("n")); }));

    reg.add(make(
        "ex_2k_alt", "Binomial sum of 2^k (-1)^(n-k) H_k(2)",
        "sum_{k=0}^n C(n,k) 2^k (-1)^{n-k} H_k(2) = H_n(2) + 2 sum_{k=1}^n (-1)^k (H_{k-1} - H_{n-k})/k", tag,
        {nrange("n", 0, 25)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            return weighted_binomial_h2(n, [n](u64 k) { return ipow(2, k) * sign(n - k); });
        },
        [](const Binding& b) { return h2_correction_form(b.nat("n"), Rational(1), sign); }));

    reg.add(make(
        "ex_3n", "Binomial sum of 2^k H_k(2)",
        "sum_{k=0}^n C(n,k) 2^k H_k(2) = 3^n (H_n(2) + 2 sum_{k=1}^n (H_{k-1} - H_{n-k})/(3^k k))", tag,
        {nrange("n", 0, 25)}, [](const Binding& b) { return weighted_binomial_h2(b.nat("n"), [](u64 k) { return ipow(2, k); }); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return ipow(3, n) * h2_correction_form(n, Rational(1), [](u64 k) { return ipow(3, k).reciprocal(); });
        }));

    reg.add(make(
        "fib_Hk2", "Fibonacci-weighted binomial sum of H_k(2)",
        "sum_{k=0}^n C(n,k) F_k H_k(2) = H_n(2) F_{2n} + 2 sum_{k=1}^n F_{2(n-k)} (H_{k-1} - H_{n-k})/k", tag,
        {nrange("n", 0, 25)}, [](const Binding& b) { return weighted_binomial_h2(b.nat("n"), fib); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return h2_correction_form(n, fib(2 * n), [n](u64 k) { return fib(2 * (n - k)); });
        }));

    reg.add(make(
        "lucas_Hk2", "Lucas-weighted binomial sum of H_k(2)",
        "sum_{k=0}^n C(n,k) L_k H_k(2) = H_n(2) L_{2n} + 2 sum_{k=1}^n L_{2(n-k)} (H_{k-1} - H_{n-k})/k", tag,
        {nrange("n", 0, 25)}, [](const Binding& b) { return weighted_binomial_h2(b.nat("n"), luc); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return h2_correction_form(n, luc(2 * n), [n](u64 k) { return luc(2 * (n - k)); });
        }));

    reg.add(make(
        "fib_alt_Hk2", "Alternating Fibonacci-weighted binomial sum of H_k(2)",
        "sum_{k=0}^n C(n,k) (-1)^{k+1} F_k H_k(2) = H_n(2) F_n + 2 sum_{k=1}^n F_{n-k} (H_{k-1} - H_{n-k})/k", tag,
        {nrange("n", 0, 25)},
        [](const Binding& b) { return weighted_binomial_h2(b.nat("n"), [](u64 k) { return -sign(k) * fib(k); }); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return h2_correction_form(n, fib(n), [n](u64 k) { return fib(n - k); });
        }));

    reg.add(make(
        "lucas_alt_Hk2", "Alternating Lucas-weighted binomial sum of H_k(2)",
        "sum_{k=0}^n C(n,k) (-1)^k L_k H_k(2) = H_n(2) L_n + 2 sum_{k=1}^n L_{n-k} (H_{k-1} - H_{n-k})/k", tag,
        {nrange("n", 0, 25)},
        [](const Binding& b) { return weighted_binomial_h2(b.nat("n"), [](u64 k) { return sign(k) * luc(k); }); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return h2_correction_form(n, luc(n), [n](u64 k) { return luc(n - k); });
        }));

    reg.add(make(
        "cor_id5", "S_n(a,b,3) closed form",
        "S_n(a,b,3) = H_n(3)(a+b)^n - 3 sum_{k=1}^n (a+b)^{n-k} b^k "
        "(H_{k-1}^2 - H_{k-1}^{(2)} - 2 H_{k-1} H_{n-k} + H_{n-k}^2 - H_{n-k}^{(2)})/k",
        tag, {ab_fixtures(), nrange("n", 0, 25)}, [](const Binding& b) { return binomial_sum_direct(params_of(b, 3)); },
        [](const Binding& b) { return binomial_sum_m3(params_of(b, 3)); }));
}

} // namespace harmlike::registry
