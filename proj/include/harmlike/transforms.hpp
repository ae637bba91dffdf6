#pragma once

// Binomial sums S_n(a, b, m) = sum_{k=0}^n C(n,k) a^k b^{n-k} H_k(m): the
// literal sum, the Stirling-number closed form, the m = 1, 2, 3
// specializations, and generic binomial transforms. 0^0 = 1 throughout.

#include <cstdint>
#include <functional>

#include "harmlike/exact_math.hpp"

namespace harmlike {

struct BinomialSumParams {
    Rational a;
    Rational b;
    std::uint64_t m = 0;
    std::uint64_t n = 0;
};

Rational binomial_sum_direct(const BinomialSumParams& p);

// sum_{j=0}^m C(m,j) sum_{k=0}^n H_k(j) (a+b)^k (m-j)!/(n-k)! (-1)^{n-k} b^{n-k} s(n-k, m-j)
Rational binomial_sum_closed(const BinomialSumParams& p);

// H_n (a+b)^n - sum_{k=0}^{n-1} (a+b)^k b^{n-k} / (n-k). Requires m == 1.
Rational binomial_sum_m1(const BinomialSumParams& p);

// H_n(2) (a+b)^n + 2 sum_{k=1}^n (a+b)^{n-k} b^k (H_{k-1} - H_{n-k}) / k. Requires m == 2.
Rational binomial_sum_m2(const BinomialSumParams& p);

// H_n(3) (a+b)^n
//   - 3 sum_{k=1}^n (a+b)^{n-k} b^k
//       (H_{k-1}^2 - H_{k-1}^{(2)} - 2 H_{k-1} H_{n-k} + H_{n-k}^2 - H_{n-k}^{(2)}) / k.
// Requires m == 3.
Rational binomial_sum_m3(const BinomialSumParams& p);

// A sequence given by evaluation; callers guarantee it is defined on 0..n.
using IndexedSequence = std::function<Rational(std::uint64_t)>;

// sum_{k=0}^n C(n,k) (-1)^k seq(k) when `is_signed`, else sum_{k=0}^n C(n,k) seq(k).
// The signed transform is an involution.
Rational binomial_transform(const IndexedSequence& seq, std::uint64_t n, bool is_signed);

// Inverse of the unsigned transform: sum_{k=0}^n C(n,k) (-1)^{n-k} seq(k).
Rational inverse_binomial_transform(const IndexedSequence& seq, std::uint64_t n);

} // namespace harmlike
