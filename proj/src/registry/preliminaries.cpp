// Definitions and basic relations for H_n(m) and s(n, k).

#include "common.hpp"

#include "harmlike/power_series.hpp"

namespace harmlike::registry {

void add_preliminaries(Registry& reg)
{
    const std::string tag = "section1";

    reg.add(make(
        "hlike_definition", "H_n(m): composition sum vs recurrence",
        "H_n(m) = sum_{1 <= k_1+...+k_m <= n} 1/(k_1...k_m)", tag, {nrange("n", 0, 12), nrange("m", 1, 5)},
        [](const Binding& b) { return harmonic_like_bruteforce(b.nat("n"), b.nat("m")); },
        [](const Binding& b) { return hlike(b.nat("n"), b.nat("m")); }));

    reg.add(make(
        "hlike_gf", "H_n(m) as coefficients of (-ln(1-z))^m/(1-z)",
        "sum_n H_n(m) z^n = (-ln(1-z))^m / (1-z)", tag, {nrange("m", 0, 5), nrange("n", 0, 30)},
        [](const Binding& b) { return hlike(b.nat("n"), b.nat("m")); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return gf_harmonic_like(b.nat("m"), n)[n];
        }));

    reg.add(make(
        "hlike_m2_closed", "H_n(2) = H_n^2 - H_n^(2)", "H_n(2) = H_n^2 - H_n^{(2)}", tag, {nrange("n", 0, 60)},
        [](const Binding& b) { return hlike(b.nat("n"), 2); },
        [](const Binding& b) { return harm_sq_minus_harm2(b.nat("n")); }));

    reg.add(make(
        "hlike_m2_sum_forms", "Two single-sum forms of H_n(2)",
        "sum_{j=1}^n (2/j) H_{j-1} = sum_{j=1}^n H_{n-j}/j", tag, {nrange("n", 0, 60)},
        [](const Binding& b) {
            return sum_over(1, as_int(b.nat("n")), [](u64 j) { return Rational(2) * harm(j - 1) / Rational(j); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return sum_over(1, as_int(n), [n](u64 j) { return harm(n - j) / Rational(j); });
        }));

    reg.add(make(
        "hlike_m3_display", "H_n(3) as a nested sum", "H_n(3) = sum_{j=1}^n (1/j) sum_{l=1}^{n-j} H_{n-j-l}/l", tag,
        {nrange("n", 0, 40)}, [](const Binding& b) { return hlike(b.nat("n"), 3); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return sum_over(1, as_int(n), [n](u64 j) {
                return sum_over(1, as_int(n - j), [&](u64 l) { return harm(n - j - l) / Rational(l); }) /
                       Rational(j);
            });
        }));

    reg.add(make(
        "stirling_below_diagonal", "s(n,k) = 0 for n < k", "s(n,k) = 0 for n < k", tag,
        {nrange("n", 0, 12), nrange("k", 0, 14)}, [](const Binding& b) {
            return Rational(stirling1(b.nat("n"), b.nat("k")));
        },
        [](const Binding&) { return Rational(0); },
        [](const Binding& b) { return b.nat("n") < b.nat("k"); }));

    reg.add(make(
        "stirling_s0", "s(n,0) = [n = 0]", "s(0,0) = 1, s(n,0) = 0 for n >= 1", tag, {nrange("n", 0, 30)},
        [](const Binding& b) { return Rational(stirling1(b.nat("n"), 0)); },
        [](const Binding& b) { return Rational(b.nat("n") == 0 ? 1 : 0); }));

    reg.add(make(
        "stirling_s1", "s(n,1) = (-1)^(n-1) (n-1)!", "s(n,1) = (-1)^{n-1} (n-1)!", tag, {nrange("n", 1, 30)},
        [](const Binding& b) { return Rational(stirling1(b.nat("n"), 1)); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return sign(n - 1) * Rational(factorial(n - 1));
        }));

    reg.add(make(
        "stirling_s2", "s(n,2) = (-1)^n (n-1)! H_{n-1}", "s(n,2) = (-1)^n (n-1)! H_{n-1}", tag,
        {nrange("n", 1, 30)}, [](const Binding& b) { return Rational(stirling1(b.nat("n"), 2)); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return sign(n) * Rational(factorial(n - 1)) * harm(n - 1);
        }));

    reg.add(make(
        "stirling_s3", "s(n,3) through H_{n-1}^2 - H_{n-1}^(2)",
        "s(n,3) = (1/2) (-1)^{n-1} (n-1)! (H_{n-1}^2 - H_{n-1}^{(2)})", tag, {nrange("n", 1, 30)},
        [](const Binding& b) { return Rational(stirling1(b.nat("n"), 3)); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return frac(1, 2) * sign(n - 1) * Rational(factorial(n - 1)) * harm_sq_minus_harm2(n - 1);
        }));

    reg.add(make(
        "stirling_gf", "s(n,k) from ln^k(1+z)/k!", "sum_{n>=k} s(n,k) z^n/n! = ln^k(1+z)/k!", tag,
        {nrange("k", 0, 6), nrange("n", 0, 25)}, [](const Binding& b) {
            return Rational(stirling1(b.nat("n"), b.nat("k")));
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return gf_stirling_column(b.nat("k"), n)[n] * Rational(factorial(n));
        }));
}

} // namespace harmlike::registry
