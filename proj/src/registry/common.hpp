#pragma once

// Shorthands shared by the registry translation units.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "harmlike/exact_math.hpp"
#include "harmlike/identities.hpp"
#include "harmlike/sequences.hpp"

namespace harmlike::registry {

using u64 = std::uint64_t;

inline Rational harm(u64 n) { return harmonic(n); }
inline Rational harm2(u64 n) { return harmonic_order(n, 2); }
inline Rational hlike(u64 n, u64 m) { return harmonic_like(n, m); }
inline Rational odd(u64 n) { return odd_harmonic(n); }
inline Rational choose(u64 n, u64 k) { return Rational(binomial(n, k)); }
inline Rational fib(u64 n) { return Rational(fibonacci(n)); }
inline Rational luc(u64 n) { return Rational(lucas(n)); }
inline Rational frac(std::int64_t p, std::int64_t q) { return Rational(Integer(static_cast<long>(p)), Integer(static_cast<long>(q))); }
inline Rational recip(u64 n) { return Rational(Integer(1), Integer(n)); }
inline Rational sign(u64 k) { return Rational(k % 2 == 0 ? 1 : -1); }

// C(n, k) with k possibly negative (then zero).
inline Rational choose_signed(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n) {
        return Rational(0);
    }
    return choose(static_cast<u64>(n), static_cast<u64>(k));
}

// base^e for integer base, e >= 0.
inline Rational ipow(long base, u64 e) { return Rational(base).pow(static_cast<std::int64_t>(e)); }

// s(j, m) / j!
inline Rational stirling_over_factorial(u64 j, u64 m) { return Rational(stirling1(j, m), factorial(j)); }

// H_n^2 - H_n^{(2)} (= H_n(2)) written through first- and second-order harmonics.
inline Rational harm_sq_minus_harm2(u64 n)
{
    const auto h = harm(n);
    return h * h - harm2(n);
}

// sum_{k=lo}^{hi} f(k); empty when hi < lo.
template <typename F>
Rational sum_over(std::int64_t lo, std::int64_t hi, F&& f)
{
    Rational acc;
    for (std::int64_t k = lo; k <= hi; ++k) {
        acc += f(static_cast<u64>(k));
    }
    return acc;
}

inline std::int64_t as_int(u64 v) { return static_cast<std::int64_t>(v); }

// C(2(k+p), k+p) C(k+p, k) / 4^k
inline Rational central_weight(u64 k, u64 p)
{
    return Rational(Integer(binomial(2 * (k + p), k + p) * binomial(k + p, k))) / ipow(4, k);
}

inline GridDim nrange(const char* name, std::int64_t lo, std::int64_t hi) { return GridDim::range(name, lo, hi); }

// Fixture (a, b) pairs for binomial sums.
GridDim ab_fixtures();

// r values for the generalized-binomial identities.
GridDim r_fixtures();

IdentityDescriptor make(std::string id, std::string title, std::string anchor, std::string tag,
                        std::vector<GridDim> dims, Evaluator lhs, Evaluator rhs,
                        std::function<bool(const Binding&)> constraint = {});

void add_preliminaries(Registry& reg);
void add_binomial_sums(Registry& reg);
void add_telescoping(Registry& reg);
void add_hyperharmonic(Registry& reg);

} // namespace harmlike::registry
