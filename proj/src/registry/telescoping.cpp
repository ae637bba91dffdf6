// Summation-by-parts lemmas and the theorems built on them.

#include "common.hpp"

#include "harmlike/telescoping.hpp"

namespace harmlike::registry {

namespace {

// Fixture sequences addressed by an integer grid parameter "seq".
using Fixture = IndexedSequence;

Fixture fixture_at(const std::vector<Fixture>& fixtures, const Binding& b)
{
    return fixtures.at(b.nat("seq"));
}

// sum_{k=1}^n (1/k) sum_{j=1}^{n-k} H_{n-k-j}/j  (this is H_n(3))
Rational nested_h3(u64 n)
{
    return sum_over(1, as_int(n), [n](u64 k) {
        return sum_over(1, as_int(n - k), [&](u64 j) { return harm(n - k - j) / Rational(j); }) / Rational(k);
    });
}

// sum_{j=lo}^{hi} C(top, j-1) s(j,m)/j!
Rational stirling_window(u64 top, std::int64_t lo, std::int64_t hi, u64 m)
{
    return sum_over(lo, hi, [&](u64 j) {
        return choose_signed(as_int(top), as_int(j) - 1) * stirling_over_factorial(j, m);
    });
}

} // namespace

void add_telescoping(Registry& reg)
{
    const std::string tag = "section3";

    // -- harmonic summation by parts -----------------------------------------

    static const std::vector<Fixture> harmonic_fixtures = {
        [](u64 k) { return harm(k - 1); },
        [](u64 k) { return Rational(k); },
        [](u64 k) { return fib(k + 1); },
        [](u64 k) { return hlike(k, 2); },
    };
    reg.add(make(
        "lemma_jjbwp3m", "Summation by parts against H_k",
        "sum_{k=1}^n H_k (a_{k+1} - a_k) = H_n a_{n+1} - sum_{k=1}^n a_k/k  (a = H_{k-1}, k, F_{k+1}, H_k(2))", tag,
        {nrange("seq", 0, 3), nrange("n", 1, 30)},
        [](const Binding& b) { return telescope_harmonic_check(fixture_at(harmonic_fixtures, b), b.nat("n")).lhs; },
        [](const Binding& b) { return telescope_harmonic_check(fixture_at(harmonic_fixtures, b), b.nat("n")).rhs; }));

    reg.add(make(
        "warmup_Hkm1_over_k", "Sum of H_{k-1}/k", "sum_{k=1}^n H_{k-1}/k = (H_n^2 - H_n^{(2)})/2", tag,
        {nrange("n", 0, 40)},
        [](const Binding& b) {
            return sum_over(1, as_int(b.nat("n")), [](u64 k) { return harm(k - 1) / Rational(k); });
        },
        [](const Binding& b) { return harm_sq_minus_harm2(b.nat("n")) / Rational(2); }));

    reg.add(make(
        "warmup_sum_Hk", "Sum of harmonic numbers", "sum_{k=1}^n H_k = (n+1) H_n - n", tag, {nrange("n", 0, 40)},
        [](const Binding& b) { return sum_over(1, as_int(b.nat("n")), harm); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return Rational(n + 1) * harm(n) - Rational(n);
        }));

    reg.add(make(
        "warmup_fib_Hk", "Fibonacci-harmonic sum", "sum_{k=1}^n H_k F_k = H_n F_{n+2} - sum_{k=1}^n F_{k+1}/k", tag,
        {nrange("n", 0, 40)},
        [](const Binding& b) {
            return sum_over(1, as_int(b.nat("n")), [](u64 k) { return harm(k) * fib(k); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return harm(n) * fib(n + 2) - sum_over(1, as_int(n), [](u64 k) { return fib(k + 1) / Rational(k); });
        }));

    reg.add(make(
        "thm_o107dby", "H_k against increments of H_k(m)",
        "sum_{k=1}^n H_k sum_{j=m}^k C(k-1,j-1) s(j,m)/j! = H_n(m) H_n/m! - (1/m!) sum_{k=1}^n H_{k-1}(m)/k", tag,
        {nrange("m", 0, 4), nrange("n", 0, 25)},
        [](const Binding& b) {
            const auto m = b.nat("m");
            return sum_over(1, as_int(b.nat("n")),
                            [m](u64 k) { return harm(k) * stirling_window(k - 1, as_int(m), as_int(k), m); });
        },
        [](const Binding& b) {
            const auto m = b.nat("m");
            const auto n = b.nat("n");
            const Rational mf(factorial(m));
            return hlike(n, m) * harm(n) / mf -
                   sum_over(1, as_int(n), [m](u64 k) { return hlike(k - 1, m) / Rational(k); }) / mf;
        }));

    reg.add(make(
        "o107dby_m1", "Sum of H_k/k", "sum_{k=1}^n H_k/k = (H_n^2 + H_n^{(2)})/2", tag, {nrange("n", 0, 40)},
        [](const Binding& b) {
            return sum_over(1, as_int(b.nat("n")), [](u64 k) { return harm(k) / Rational(k); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            const auto h = harm(n);
            return (h * h + harm2(n)) / Rational(2);
        }));

    reg.add(make(
        "o107dby_m2", "H_k against alternating H_{j-1}/j sums",
        "2 sum_{k=1}^n H_k sum_{j=1}^k (-1)^j C(k-1,j-1) H_{j-1}/j = H_n^3 - H_n^{(2)} H_n - sum_{k=1}^n "
        "(H_{k-1}^2 - H_{k-1}^{(2)})/k",
        tag, {nrange("n", 0, 25)},
        [](const Binding& b) {
            return Rational(2) * sum_over(1, as_int(b.nat("n")), [](u64 k) {
                       return harm(k) * sum_over(1, as_int(k), [k](u64 j) {
                                  return sign(j) * choose(k - 1, j - 1) * harm(j - 1) / Rational(j);
                              });
                   });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            const auto h = harm(n);
            return h * h * h - harm2(n) * h -
                   sum_over(1, as_int(n), [](u64 k) { return harm_sq_minus_harm2(k - 1) / Rational(k); });
        }));

    reg.add(make(
        "thm_Hnp1", "Reversed Stirling window gives H_{n+1}(m+1)",
        "sum_{k=1}^n H_k sum_{j=m}^{n-k+1} C(n-k,j-1) s(j,m)/j! = H_{n+1}(m+1)/m!", tag,
        {nrange("m", 1, 4), nrange("n", 1, 25)},
        [](const Binding& b) {
            const auto m = b.nat("m");
            const auto n = b.nat("n");
            return sum_over(1, as_int(n), [&](u64 k) {
                return harm(k) * stirling_window(n - k, as_int(m), as_int(n - k + 1), m);
            });
        },
        [](const Binding& b) {
            const auto m = b.nat("m");
            return hlike(b.nat("n") + 1, m + 1) / Rational(factorial(m));
        }));

    reg.add(make(
        "Hnp1_m1", "Sum of H_k/(n-k+1)", "sum_{k=1}^n H_k/(n-k+1) = H_{n+1}^2 - H_{n+1}^{(2)}", tag,
        {nrange("n", 0, 40)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            return sum_over(1, as_int(n), [n](u64 k) { return harm(k) / Rational(n - k + 1); });
        },
        [](const Binding& b) { return harm_sq_minus_harm2(b.nat("n") + 1); }));

    reg.add(make(
        "Hnp1_m2", "H_k against reversed alternating H_{j-1}/j sums",
        "sum_{k=1}^n H_k sum_{j=2}^{n-k+1} C(n-k,j-1) (-1)^j H_{j-1}/j = (1/2) sum_{k=1}^{n+1} (1/k) "
        "sum_{j=1}^{n+1-k} H_{n-k-j+1}/j",
        tag, {nrange("n", 0, 25)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            return sum_over(1, as_int(n), [n](u64 k) {
                return harm(k) * sum_over(2, as_int(n - k + 1), [&](u64 j) {
                           return choose(n - k, j - 1) * sign(j) * harm(j - 1) / Rational(j);
                       });
            });
        },
        [](const Binding& b) { return nested_h3(b.nat("n") + 1) / Rational(2); }));

    // -- reciprocal summation by parts ---------------------------------------

    static const std::vector<Fixture> reciprocal_fixtures = {
        [](u64 k) { return harm(k); },
        [](u64 k) { return harm(k + 2); },
        [](u64) { return Rational(1); },
        [](u64 k) { return hlike(k, 2); },
    };
    reg.add(make(
        "lemma_yugnf7k", "Summation by parts against 1/k",
        "sum_{k=1}^n (a_k - a_{k-1})/k = sum_{k=1}^n a_k/(k(k+1)) - a_0 + a_n/(n+1)  (a = H_k, H_{k+2}, 1, H_k(2))",
        tag, {nrange("seq", 0, 3), nrange("n", 1, 30)},
        [](const Binding& b) {
            return telescope_reciprocal_check(fixture_at(reciprocal_fixtures, b), b.nat("n")).lhs;
        },
        [](const Binding& b) {
            return telescope_reciprocal_check(fixture_at(reciprocal_fixtures, b), b.nat("n")).rhs;
        }));

    reg.add(make(
        "har_example_p0", "Sum of H_k/(k(k+1))", "sum_{k=1}^n H_k/(k(k+1)) = H_n^{(2)} - H_n/(n+1)", tag,
        {nrange("n", 0, 40)},
        [](const Binding& b) {
            return sum_over(1, as_int(b.nat("n")), [](u64 k) { return harm(k) / Rational(k * (k + 1)); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return harm2(n) - harm(n) / Rational(n + 1);
        }));

    reg.add(make(
        "har_example_pge1", "Sum of H_{k+p}/(k(k+1)), p >= 1",
        "sum_{k=1}^n H_{k+p}/(k(k+1)) = (H_n + H_p - H_{n+p})/p + H_p - H_{n+p}/(n+1)", tag,
        {nrange("p", 1, 6), nrange("n", 0, 30)},
        [](const Binding& b) {
            const auto p = b.nat("p");
            return sum_over(1, as_int(b.nat("n")), [p](u64 k) { return harm(k + p) / Rational(k * (k + 1)); });
        },
        [](const Binding& b) {
            const auto p = b.nat("p");
            const auto n = b.nat("n");
            return (harm(n) + harm(p) - harm(n + p)) / Rational(p) + harm(p) - harm(n + p) / Rational(n + 1);
        }));

    reg.add(make(
        "har_helper", "Sum of 1/(k(k+p))",
        "sum_{k=1}^n 1/(k(k+p)) = H_n^{(2)} (p = 0), (H_n + H_p - H_{n+p})/p (p >= 1)", tag,
        {nrange("p", 0, 6), nrange("n", 0, 40)},
        [](const Binding& b) {
            const auto p = b.nat("p");
            return sum_over(1, as_int(b.nat("n")), [p](u64 k) { return recip(k * (k + p)); });
        },
        [](const Binding& b) {
            const auto p = b.nat("p");
            const auto n = b.nat("n");
            if (p == 0) {
                return harm2(n);
            }
            return (harm(n) + harm(p) - harm(n + p)) / Rational(p);
        }));

    reg.add(make(
        "thm_kk1", "Sum of H_{n-k}(m)/(k(k+1))",
        "sum_{k=1}^n H_{n-k}(m)/(k(k+1)) = H_n(m) + H_n(m+1) - H_{n+1}(m+1)", tag,
        {nrange("m", 0, 4), nrange("n", 1, 30)},
        [](const Binding& b) {
            const auto m = b.nat("m");
            const auto n = b.nat("n");
            return sum_over(1, as_int(n), [&](u64 k) { return hlike(n - k, m) / Rational(k * (k + 1)); });
        },
        [](const Binding& b) {
            const auto m = b.nat("m");
            const auto n = b.nat("n");
            return hlike(n, m) + hlike(n, m + 1) - hlike(n + 1, m + 1);
        }));

    reg.add(make(
        "kk1_m1", "Sum of H_{n-k}/(k(k+1))",
        "sum_{k=1}^n H_{n-k}/(k(k+1)) = H_n + H_n^2 - H_n^{(2)} - H_{n+1}^2 + H_{n+1}^{(2)}", tag,
        {nrange("n", 1, 40)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            return sum_over(1, as_int(n), [n](u64 k) { return harm(n - k) / Rational(k * (k + 1)); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return harm(n) + harm_sq_minus_harm2(n) - harm_sq_minus_harm2(n + 1);
        }));

    reg.add(make(
        "kk1_m2", "Sum of (H_{n-k}^2 - H_{n-k}^(2))/(k(k+1))",
        "sum_{k=1}^n (H_{n-k}^2 - H_{n-k}^{(2)})/(k(k+1)) = H_n^2 - H_n^{(2)} + T(n) - T(n+1), "
        "T(n) = sum_{k=1}^n (1/k) sum_{j=1}^{n-k} H_{n-k-j}/j",
        tag, {nrange("n", 1, 25)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            return sum_over(1, as_int(n),
                            [n](u64 k) { return harm_sq_minus_harm2(n - k) / Rational(k * (k + 1)); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return harm_sq_minus_harm2(n) + nested_h3(n) - nested_h3(n + 1);
        }));

    // -- generalized-binomial summation by parts ------------------------------

    static const std::vector<Fixture> kollar_fixtures = {
        [](u64 k) { return harm(k); },
        [](u64 k) { return hlike(k, 2); },
        [](u64) { return Rational(1); },
        [](u64 k) { return fib(k); },
    };
    reg.add(make(
        "lemma_u8veeoy", "Summation by parts against (-1)^k C(r-1,k)",
        "sum_{k=0}^n (-1)^k C(r-1,k) (a_{k+1} - a_k) = (-1)^n C(r-1,n) a_{n+1} - sum_{k=0}^n (-1)^k C(r,k) a_k  "
        "(a = H_k, H_k(2), 1, F_k)",
        tag, {r_fixtures(), nrange("seq", 0, 3), nrange("n", 0, 20)},
        [](const Binding& b) {
            return telescope_kollar_check(fixture_at(kollar_fixtures, b), b.at("r"), b.nat("n")).lhs;
        },
        [](const Binding& b) {
            return telescope_kollar_check(fixture_at(kollar_fixtures, b), b.at("r"), b.nat("n")).rhs;
        }));

    reg.add(make(
        "thm_kollar", "Generalized-binomial sums of H_k(m) increments",
        "sum_{k=0}^n (-1)^k C(r-1,k) sum_{j=m}^{k+1} C(k,j-1) s(j,m)/j! = (-1)^n C(r-1,n) H_{n+1}(m)/m! - (1/m!) "
        "sum_{k=0}^n (-1)^k C(r,k) H_k(m)",
        tag, {r_fixtures(), nrange("m", 1, 4), nrange("n", 1, 20)},
        [](const Binding& b) {
            const auto& r = b.at("r");
            const auto m = b.nat("m");
            return sum_over(0, as_int(b.nat("n")), [&](u64 k) {
                return sign(k) * gen_binomial(r - Rational(1), k) * stirling_window(k, as_int(m), as_int(k) + 1, m);
            });
        },
        [](const Binding& b) {
            const auto& r = b.at("r");
            const auto m = b.nat("m");
            const auto n = b.nat("n");
            const Rational mf(factorial(m));
            return sign(n) * gen_binomial(r - Rational(1), n) * hlike(n + 1, m) / mf -
                   sum_over(0, as_int(n), [&](u64 k) { return sign(k) * gen_binomial(r, k) * hlike(k, m); }) / mf;
        }));

    reg.add(make(
        "kollar_m1", "Alternating sum of C(r-1,k)/(k+1)",
        "sum_{k=0}^n (-1)^k C(r-1,k)/(k+1) = (-1)^n C(r-1,n) H_{n+1} - sum_{k=0}^n (-1)^k C(r,k) H_k", tag,
        {r_fixtures(), nrange("n", 0, 25)},
        [](const Binding& b) {
            const auto& r = b.at("r");
            return sum_over(0, as_int(b.nat("n")),
                            [&](u64 k) { return sign(k) * gen_binomial(r - Rational(1), k) / Rational(k + 1); });
        },
        [](const Binding& b) {
            const auto& r = b.at("r");
            const auto n = b.nat("n");
            return sign(n) * gen_binomial(r - Rational(1), n) * harm(n + 1) -
                   sum_over(0, as_int(n), [&](u64 k) { return sign(k) * gen_binomial(r, k) * harm(k); });
        }));

    // The second-order term on the right is H_{n+1}^{(2)}; the H_n^{(2)} variant
    // fails already at n = 0.
    reg.add(make(
        "kollar_m2", "Generalized-binomial sums against alternating H_{j-1}/j",
        "sum_{k=0}^n (-1)^k C(r-1,k) sum_{j=2}^{k+1} (-1)^j C(k,j-1) H_{j-1}/j = (-1)^n C(r-1,n) (H_{n+1}^2 - "
        "H_{n+1}^{(2)})/2 - (1/2) sum_{k=0}^n (-1)^k C(r,k) (H_k^2 - H_k^{(2)})",
        tag, {r_fixtures(), nrange("n", 0, 20)},
        [](const Binding& b) {
            const auto& r = b.at("r");
            return sum_over(0, as_int(b.nat("n")), [&](u64 k) {
                return sign(k) * gen_binomial(r - Rational(1), k) * sum_over(2, as_int(k) + 1, [k](u64 j) {
                           return sign(j) * choose(k, j - 1) * harm(j - 1) / Rational(j);
                       });
            });
        },
        [](const Binding& b) {
            const auto& r = b.at("r");
            const auto n = b.nat("n");
            return sign(n) * gen_binomial(r - Rational(1), n) * harm_sq_minus_harm2(n + 1) / Rational(2) -
                   sum_over(0, as_int(n), [&](u64 k) {
                       return sign(k) * gen_binomial(r, k) * harm_sq_minus_harm2(k);
                   }) / Rational(2);
        }));

    // -- linear summation by parts --------------------------------------------

    static const std::vector<Fixture> linear_fixtures = {
        [](u64 k) { return Rational(k); },
        [](u64 k) { return fib(k); },
        [](u64 k) { return hyperharmonic(k, 2); },
        [](u64 k) { return harm(k); },
    };
    reg.add(make(
        "lemma_qrsgpmt", "Summation by parts against k",
        "sum_{k=1}^n k (a_k - a_{k-1}) = n a_n - sum_{k=1}^n a_{k-1}  (a = k, F_k, H_{k,2}, H_k)", tag,
        {nrange("seq", 0, 3), nrange("n", 1, 30)},
        [](const Binding& b) { return telescope_linear_check(fixture_at(linear_fixtures, b), b.nat("n")).lhs; },
        [](const Binding& b) { return telescope_linear_check(fixture_at(linear_fixtures, b), b.nat("n")).rhs; }));
}

} // namespace harmlike::registry
