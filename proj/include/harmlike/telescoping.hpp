#pragma once

// Summation-by-parts combinators. Each evaluates both sides of a generic
// telescoping identity for an arbitrary sequence, so the identity can be
// checked independently of any particular family.

#include <cstdint>

#include "harmlike/exact_math.hpp"
#include "harmlike/transforms.hpp"

namespace harmlike {

struct SidePair {
    Rational lhs;
    Rational rhs;

    bool equal() const { return lhs == rhs; }
};

// sum_{k=1}^n H_k (a_{k+1} - a_k)  vs  H_n a_{n+1} - sum_{k=1}^n a_k / k.
// a must be defined on 1..n+1.
SidePair telescope_harmonic_check(const IndexedSequence& a, std::uint64_t n);

// sum_{k=1}^n (a_k - a_{k-1}) / k  vs  sum_{k=1}^n a_k / (k(k+1)) - a_0 + a_n / (n+1).
// a must be defined on 0..n.
SidePair telescope_reciprocal_check(const IndexedSequence& a, std::uint64_t n);

// sum_{k=0}^n (-1)^k C(r-1,k) (a_{k+1} - a_k)
//   vs  (-1)^n C(r-1,n) a_{n+1} - sum_{k=0}^n (-1)^k C(r,k) a_k,
// with generalized binomials in r. a must be defined on 0..n+1.
SidePair telescope_kollar_check(const IndexedSequence& a, const Rational& r, std::uint64_t n);

// sum_{k=1}^n k (a_k - a_{k-1})  vs  n a_n - sum_{k=1}^n a_{k-1}.
// a must be defined on 0..n.
SidePair telescope_linear_check(const IndexedSequence& a, std::uint64_t n);

} // namespace harmlike
