// Hyperharmonic numbers, odd harmonic numbers and half-integer arguments.

#include "common.hpp"

namespace harmlike::registry {

namespace {

// sum_{k=0}^n C(k+p, k) f(k)
template <typename F>
Rational hockey_sum(u64 n, u64 p, F&& f)
{
    return sum_over(0, as_int(n), [&](u64 k) { return choose(k + p, k) * f(k); });
}

// sum_{k=0}^n C(2k,k)/4^k f(k)
template <typename F>
Rational central_sum(u64 n, F&& f)
{
    return sum_over(0, as_int(n), [&](u64 k) { return central_weight(k, 0) * f(k); });
}

const Rational half = frac(1, 2);

// H_x - H_y for the half-integer lemma, each argument given as (integer part, +-1/2).
Rational half_shift(std::int64_t x_twice, std::int64_t y_twice)
{
    return harmonic_difference(frac(x_twice, 2), frac(y_twice, 2));
}

// Left side: H_x - H_y by stepping; right side: odd harmonic closed form.
struct HalfRelation {
    std::int64_t x_twice_offset; // x = n + x_twice_offset/2
    std::int64_t y_twice;        // y = y_twice/2, or relative to n when `y_follows_n`
    bool y_follows_n;
    Rational (*rhs)(u64 n);
};

const std::vector<HalfRelation>& half_relations()
{
    static const std::vector<HalfRelation> relations = {
        {-1, -1, false, [](u64 n) { return Rational(2) * odd(n); }},                      // H_{n-1/2} - H_{-1/2}
        {-1, 1, false, [](u64 n) { return Rational(2) * (odd(n) - Rational(1)); }},       // H_{n-1/2} - H_{1/2}
        {1, -1, false, [](u64 n) { return Rational(2) * odd(n + 1); }},                   // H_{n+1/2} - H_{-1/2}
        {1, 1, false, [](u64 n) { return Rational(2) * (odd(n + 1) - Rational(1)); }},    // H_{n+1/2} - H_{1/2}
        {1, -1, true, [](u64 n) { return Rational(2) / Rational(2 * n + 1); }},           // H_{n+1/2} - H_{n-1/2}
        {-1, -3, false, [](u64 n) { return Rational(2) * (odd(n) - Rational(1)); }},      // H_{n-1/2} - H_{-3/2}
        {1, -3, false, [](u64 n) { return Rational(2) * (odd(n + 1) - Rational(1)); }},   // H_{n+1/2} - H_{-3/2}
    };
    return relations;
}

} // namespace

void add_hyperharmonic(Registry& reg)
{
    const std::string tag = "section4";

    reg.add(make(
        "hyperharmonic_compact", "Iterated-sum hyperharmonic numbers vs compact form",
        "H_{n,p+1} = C(n+p,n) (H_{n+p} - H_p)", tag, {nrange("n", 0, 40), nrange("p", 0, 8)},
        [](const Binding& b) { return hyperharmonic(b.nat("n"), b.nat("p") + 1); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            const auto p = b.nat("p");
            return choose(n + p, n) * (harm(n + p) - harm(p));
        }));

    reg.add(make(
        "thm_hyphar", "Hockey-stick convolution of H_n(m) with hyperharmonic numbers",
        "sum_{k=0}^n C(k+p,k) H_{n-k}(m) (H_{k+p} - H_p) = sum_{k=0}^n C(k+p,k) H_{n-k}(m+1)", tag,
        {nrange("m", 0, 4), nrange("n", 0, 25), nrange("p", 0, 5)},
        [](const Binding& b) {
            const auto m = b.nat("m");
            const auto n = b.nat("n");
            const auto p = b.nat("p");
            return hockey_sum(n, p, [&](u64 k) { return hlike(n - k, m) * (harm(k + p) - harm(p)); });
        },
        [](const Binding& b) {
            const auto m = b.nat("m");
            const auto n = b.nat("n");
            return hockey_sum(n, b.nat("p"), [&](u64 k) { return hlike(n - k, m + 1); });
        }));

    reg.add(make(
        "hyphar_m0", "Hockey-stick sum of H_{k+p} - H_p",
        "sum_{k=0}^n C(k+p,k) (H_{k+p} - H_p) = sum_{k=0}^n C(k+p,k) H_{n-k}", tag,
        {nrange("n", 0, 30), nrange("p", 0, 6)},
        [](const Binding& b) {
            const auto p = b.nat("p");
            return hockey_sum(b.nat("n"), p, [p](u64 k) { return harm(k + p) - harm(p); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return hockey_sum(n, b.nat("p"), [n](u64 k) { return harm(n - k); });
        }));

    reg.add(make(
        "hyphar_m1", "Hockey-stick convolution of H_{n-k} with H_{k+p} - H_p",
        "sum_{k=0}^n C(k+p,k) H_{n-k} (H_{k+p} - H_p) = sum_{k=0}^n C(k+p,k) (H_{n-k}^2 - H_{n-k}^{(2)})", tag,
        {nrange("n", 0, 30), nrange("p", 0, 6)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            const auto p = b.nat("p");
            return hockey_sum(n, p, [&](u64 k) { return harm(n - k) * (harm(k + p) - harm(p)); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return hockey_sum(n, b.nat("p"), [n](u64 k) { return harm_sq_minus_harm2(n - k); });
        }));

    reg.add(make(
        "odd_even_split_even", "H_{2n} through O_n", "H_{2n} = H_n/2 + O_n", tag, {nrange("n", 0, 40)},
        [](const Binding& b) { return harm(2 * b.nat("n")); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return harm(n) * half + odd(n);
        }));

    reg.add(make(
        "odd_even_split_odd", "H_{2n-1} through O_n", "H_{2n-1} = H_{n-1}/2 + O_n", tag, {nrange("n", 1, 40)},
        [](const Binding& b) { return harm(2 * b.nat("n") - 1); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return harm(n - 1) * half + odd(n);
        }));

    reg.add(make(
        "lemma_czxfdu7", "Half-integer harmonic differences through O_n",
        "relation 1..7: H_{n-1/2} - H_{-1/2} = 2 O_n; H_{n-1/2} - H_{1/2} = 2(O_n - 1); H_{n+1/2} - H_{-1/2} = 2 "
        "O_{n+1}; H_{n+1/2} - H_{1/2} = 2(O_{n+1} - 1); H_{n+1/2} - H_{n-1/2} = 2/(2n+1); H_{n-1/2} - H_{-3/2} = "
        "2(O_n - 1); H_{n+1/2} - H_{-3/2} = 2(O_{n+1} - 1)",
        tag, {nrange("relation", 1, 7), nrange("n", 0, 30)},
        [](const Binding& b) {
            const auto& rel = half_relations().at(b.nat("relation") - 1);
            const auto n2 = 2 * as_int(b.nat("n"));
            const auto y_twice = rel.y_follows_n ? n2 + rel.y_twice : rel.y_twice;
            return half_shift(n2 + rel.x_twice_offset, y_twice);
        },
        [](const Binding& b) { return half_relations().at(b.nat("relation") - 1).rhs(b.nat("n")); }));

    reg.add(make(
        "lemma_m2jjbl5", "Half-integer hyperharmonic numbers: central-binomial vs generalized-binomial route",
        "H_{r,p+1/2} = 2^{1-2r} C(2p,p)^{-1} C(2(r+p),r+p) C(r+p,r) (O_{r+p} - O_p) = C(r+p-1/2,r) "
        "(H_{r+p-1/2} - H_{p-1/2})",
        tag, {nrange("r", 0, 15), nrange("p", 0, 15)},
        [](const Binding& b) { return hyperharmonic_half(b.nat("r"), b.nat("p")); },
        [](const Binding& b) { return hyperharmonic_half_via_gen_binomial(b.nat("r"), b.nat("p")); }));

    reg.add(make(
        "gen_binomial_half", "C(r+p-1/2, r) through central binomials",
        "C(r+p-1/2, r) = 4^{-r} C(2p,p)^{-1} C(2(r+p),r+p) C(r+p,r)", tag, {nrange("r", 0, 12), nrange("p", 0, 12)},
        [](const Binding& b) {
            const auto r = b.nat("r");
            return gen_binomial(Rational(r + b.nat("p")) - half, r);
        },
        [](const Binding& b) {
            const auto r = b.nat("r");
            const auto p = b.nat("p");
            return central_weight(r, p) / choose(2 * p, p);
        }));

    reg.add(make(
        "thm_suzj3to", "Partial sums of half-integer hyperharmonic numbers",
        "sum_{k=1}^n 4^{-k} C(2(k+p),k+p) C(k+p,k) (O_{k+p} - O_p) = 2^{-2n-1} (p+1)/(2p+1) C(2(n+p+1),n+p+1) "
        "C(n+p+1,n) (O_{n+p+1} - O_{p+1})",
        tag, {nrange("n", 0, 20), nrange("p", 0, 20)},
        [](const Binding& b) {
            const auto p = b.nat("p");
            return sum_over(1, as_int(b.nat("n")), [p](u64 k) { return central_weight(k, p) * (odd(k + p) - odd(p)); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            const auto p = b.nat("p");
            const auto top = n + p + 1;
            return frac(as_int(p) + 1, 2 * as_int(p) + 1) * choose(2 * top, top) * choose(top, n) *
                   (odd(top) - odd(p + 1)) / ipow(2, 2 * n + 1);
        }));

    reg.add(make(
        "oklok93", "Partial sums of C(2k,k) O_k / 4^k",
        "sum_{k=1}^n O_k C(2k,k)/2^{2k} = (n+1)/2^{2n+1} C(2(n+1),n+1) (O_{n+1} - 1)", tag, {nrange("n", 0, 30)},
        [](const Binding& b) {
            return sum_over(1, as_int(b.nat("n")), [](u64 k) { return odd(k) * central_weight(k, 0); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return Rational(n + 1) / ipow(2, 2 * n + 1) * choose(2 * (n + 1), n + 1) * (odd(n + 1) - Rational(1));
        }));

    reg.add(make(
        "thm_odd_id1", "Central-binomial convolution of O_k with H_{n-k}(m)",
        "sum_{k=0}^n C(2k,k) O_k H_{n-k}(m)/4^k = (1/2) sum_{k=0}^n C(2k,k) H_{n-k}(m+1)/4^k", tag,
        {nrange("m", 0, 4), nrange("n", 0, 25)},
        [](const Binding& b) {
            const auto m = b.nat("m");
            const auto n = b.nat("n");
            return central_sum(n, [&](u64 k) { return odd(k) * hlike(n - k, m); });
        },
        [](const Binding& b) {
            const auto m = b.nat("m");
            const auto n = b.nat("n");
            return half * central_sum(n, [&](u64 k) { return hlike(n - k, m + 1); });
        }));

    reg.add(make(
        "zfc0q8z", "Central-binomial sums of O_k and H_{n-k}",
        "sum_{k=0}^n C(2k,k) O_k/4^k = (1/2) sum_{k=0}^n C(2k,k) H_{n-k}/4^k", tag, {nrange("n", 0, 30)},
        [](const Binding& b) { return central_sum(b.nat("n"), odd); },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return half * central_sum(n, [n](u64 k) { return harm(n - k); });
        }));

    reg.add(make(
        "odd_id1_m1", "Central-binomial convolution of O_k with H_{n-k}",
        "sum_{k=0}^n C(2k,k) O_k H_{n-k}/4^k = (1/2) sum_{k=0}^n C(2k,k) (H_{n-k}^2 - H_{n-k}^{(2)})/4^k", tag,
        {nrange("n", 0, 30)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            return central_sum(n, [n](u64 k) { return odd(k) * harm(n - k); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return half * central_sum(n, [n](u64 k) { return harm_sq_minus_harm2(n - k); });
        }));

    reg.add(make(
        "tb6ik5l", "Central-binomial sum of H_{n-k}",
        "sum_{k=0}^n C(2k,k) H_{n-k}/2^{2k} = (n+1)/2^{2n} C(2(n+1),n+1) (O_{n+1} - 1)", tag, {nrange("n", 0, 30)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            return central_sum(n, [n](u64 k) { return harm(n - k); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            return Rational(n + 1) / ipow(4, n) * choose(2 * (n + 1), n + 1) * (odd(n + 1) - Rational(1));
        }));

    reg.add(make(
        "thm_general_p", "Shifted central-binomial convolution with H_{n-k}(m)",
        "sum_{k=0}^n 4^{-k} C(2(k+p),k+p) C(k+p,k) H_{n-k}(m) (O_{k+p} - O_p) = (1/2) sum_{k=0}^n 4^{-k} "
        "C(2(k+p),k+p) C(k+p,k) H_{n-k}(m+1)",
        tag, {nrange("m", 0, 4), nrange("n", 0, 20), nrange("p", 0, 5)},
        [](const Binding& b) {
            const auto m = b.nat("m");
            const auto n = b.nat("n");
            const auto p = b.nat("p");
            return sum_over(0, as_int(n), [&](u64 k) {
                return central_weight(k, p) * hlike(n - k, m) * (odd(k + p) - odd(p));
            });
        },
        [](const Binding& b) {
            const auto m = b.nat("m");
            const auto n = b.nat("n");
            const auto p = b.nat("p");
            return half * sum_over(0, as_int(n), [&](u64 k) { return central_weight(k, p) * hlike(n - k, m + 1); });
        }));

    reg.add(make(
        "general_p_m0", "Shifted central-binomial sum of H_{n-k}",
        "sum_{k=0}^n 4^{-k} C(2(k+p),k+p) C(k+p,k) H_{n-k} = 4^{-n} (p+1)/(2p+1) C(2(n+p+1),n+p+1) C(n+p+1,n) "
        "(O_{n+p+1} - O_{p+1})",
        tag, {nrange("n", 0, 25), nrange("p", 0, 6)},
        [](const Binding& b) {
            const auto n = b.nat("n");
            const auto p = b.nat("p");
            return sum_over(0, as_int(n), [&](u64 k) { return central_weight(k, p) * harm(n - k); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            const auto p = b.nat("p");
            const auto top = n + p + 1;
            return frac(as_int(p) + 1, 2 * as_int(p) + 1) * choose(2 * top, top) * choose(top, n) *
                   (odd(top) - odd(p + 1)) / ipow(4, n);
        }));

    reg.add(make(
        "thm_xld8bhi", "k-weighted sums of hyperharmonic numbers",
        "sum_{k=1}^n k H_{k,p} = n H_{n,p+1} - H_{n-1,p+2}", tag, {nrange("n", 1, 30), nrange("p", 0, 6)},
        [](const Binding& b) {
            const auto p = b.nat("p");
            return sum_over(1, as_int(b.nat("n")), [p](u64 k) { return Rational(k) * hyperharmonic(k, p); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            const auto p = b.nat("p");
            return Rational(n) * hyperharmonic(n, p + 1) - hyperharmonic(n - 1, p + 2);
        }));

    reg.add(make(
        "thm_k_weighted_half", "k-weighted sums of half-integer hyperharmonic numbers",
        "sum_{k=1}^n k 4^{-k} C(2(k+p),k+p) C(k+p,k) (O_{k+p} - O_p) = n 4^{-n} C(2(p+1),p+1)^{-1} C(2p,p) "
        "C(2(n+p+1),n+p+1) C(n+p+1,n) (O_{n+p+1} - O_{p+1}) - 4^{1-n} C(2(p+2),p+2)^{-1} C(2p,p) "
        "C(2(n+p+1),n+p+1) C(n+p+1,n-1) (O_{n+p+1} - O_{p+2})",
        tag, {nrange("n", 1, 25), nrange("p", 0, 5)},
        [](const Binding& b) {
            const auto p = b.nat("p");
            return sum_over(1, as_int(b.nat("n")),
                            [p](u64 k) { return Rational(k) * central_weight(k, p) * (odd(k + p) - odd(p)); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            const auto p = b.nat("p");
            const auto top = n + p + 1;
            const Rational shared = choose(2 * p, p) * choose(2 * top, top);
            const Rational first = Rational(n) / ipow(4, n) / choose(2 * (p + 1), p + 1) * shared *
                                   choose(top, n) * (odd(top) - odd(p + 1));
            const Rational second = Rational(4) / ipow(4, n) / choose(2 * (p + 2), p + 2) * shared *
                                    choose(top, n - 1) * (odd(top) - odd(p + 2));
            return first - second;
        }));

    reg.add(make(
        "k_weighted_half_p0", "k-weighted partial sums of C(2k,k) O_k / 4^k",
        "sum_{k=1}^n k C(2k,k) O_k/2^{2k} = n(n+1)/2^{2n+1} C(2(n+1),n+1) (O_{n+1} - 1) - n(n+1)/(3 2^{2n}) "
        "C(2(n+1),n+1) (O_{n+1} - 4/3)",
        tag, {nrange("n", 1, 30)},
        [](const Binding& b) {
            return sum_over(1, as_int(b.nat("n")), [](u64 k) { return Rational(k) * central_weight(k, 0) * odd(k); });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            const Rational nn1(n * (n + 1));
            const Rational c = choose(2 * (n + 1), n + 1);
            return nn1 / ipow(2, 2 * n + 1) * c * (odd(n + 1) - Rational(1)) -
                   nn1 / (ipow(4, n) * Rational(3)) * c * (odd(n + 1) - frac(4, 3));
        }));

    reg.add(make(
        "thm_yycg1tg", "Sums of half-integer hyperharmonic numbers over the half-integer order",
        "sum_{k=1}^n C(2k,k)^{-1} C(2(k+p),k+p) C(k+p,k) (O_{k+p} - O_k) = (1/4) C(2n,n)^{-1} C(2(n+p+1),n+p+1) "
        "C(n+p+1,n) (O_{n+p+1} - O_n) - (1/4) C(2(p+1),p+1) O_{p+1}",
        tag, {nrange("n", 1, 25), nrange("p", 0, 6)},
        [](const Binding& b) {
            const auto p = b.nat("p");
            return sum_over(1, as_int(b.nat("n")), [p](u64 k) {
                return choose(2 * (k + p), k + p) * choose(k + p, k) / choose(2 * k, k) * (odd(k + p) - odd(k));
            });
        },
        [](const Binding& b) {
            const auto n = b.nat("n");
            const auto p = b.nat("p");
            const auto top = n + p + 1;
            const Rational quarter = frac(1, 4);
            return quarter / choose(2 * n, n) * choose(2 * top, top) * choose(top, n) * (odd(top) - odd(n)) -
                   quarter * choose(2 * (p + 1), p + 1) * odd(p + 1);
        }));
}

} // namespace harmlike::registry
