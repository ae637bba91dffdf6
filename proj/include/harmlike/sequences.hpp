#pragma once

// Exact evaluation of the harmonic-type sequence families.
//
// Every family has a memoized primary route held in a SeqCache. The free
// functions use a process-wide cache; pass an explicit cache when isolation
// matters (tests comparing cold and warm evaluation, for instance).

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "harmlike/exact_math.hpp"

namespace harmlike {

// Thread-safe memo tables. Readers share a lock; a miss takes the exclusive
// lock and extends the relevant table. Values never change once stored.
class SeqCache {
public:
    SeqCache() = default;
    SeqCache(const SeqCache&) = delete;
    SeqCache& operator=(const SeqCache&) = delete;

    Rational harmonic(std::uint64_t n);
    Rational harmonic_order(std::uint64_t n, std::uint64_t r);
    Rational odd_harmonic(std::uint64_t n);
    Rational harmonic_like(std::uint64_t n, std::uint64_t m);
    Integer stirling1(std::uint64_t n, std::uint64_t k);
    Rational hyperharmonic(std::uint64_t n, std::uint64_t p);
    Integer fibonacci(std::uint64_t n);
    Integer lucas(std::uint64_t n);

    void clear();

private:
    void extend_harmonic_order(std::vector<Rational>& row, std::uint64_t r, std::uint64_t n);
    void extend_harmonic_like(std::uint64_t n, std::uint64_t m);
    void extend_stirling(std::uint64_t n);
    void extend_hyperharmonic(std::uint64_t n, std::uint64_t p);

    mutable std::shared_mutex mutex_;
    std::map<std::uint64_t, std::vector<Rational>> harmonic_order_; // r -> H_0^{(r)}, H_1^{(r)}, ...
    std::vector<Rational> odd_harmonic_;
    std::vector<std::vector<Rational>> harmonic_like_; // [m][n]
    std::vector<std::vector<Integer>> stirling_;        // [n][k], k <= n
    std::vector<std::vector<Rational>> hyperharmonic_;  // [p][n]; [0][0] unused
    std::vector<Integer> fibonacci_;
    std::vector<Integer> lucas_;
};

SeqCache& default_cache();

// H_n = sum_{k=1}^n 1/k.
Rational harmonic(std::uint64_t n);

// H_n^{(r)} = sum_{k=1}^n 1/k^r, r >= 1.
Rational harmonic_order(std::uint64_t n, std::uint64_t r);

// O_n = sum_{k=1}^n 1/(2k-1).
Rational odd_harmonic(std::uint64_t n);

// Multiple harmonic-like number H_n(m) through
//   H_n(m+1) = sum_{j=1}^n H_{n-j}(m) / j,   H_n(0) = 1,  H_0(m) = 0 (m >= 1).
Rational harmonic_like(std::uint64_t n, std::uint64_t m);

inline constexpr std::uint64_t kDefaultBruteforceCeiling = 5'000'000;

// Literal definition: sum of 1/(k_1 ... k_m) over positive m-tuples with
// k_1 + ... + k_m <= n. There are C(n, m) such tuples; enumeration is refused
// with FeasibilityError when that exceeds `ceiling`. m = 0 yields the
// convention value 1.
Rational harmonic_like_bruteforce(std::uint64_t n, std::uint64_t m,
                                  std::uint64_t ceiling = kDefaultBruteforceCeiling);

// Signed Stirling numbers of the first kind, s(n+1,k) = s(n,k-1) - n s(n,k).
Integer stirling1(std::uint64_t n, std::uint64_t k);

// Hyperharmonic H_{n,p} = sum_{i=1}^n H_{i,p-1}, H_{n,0} = 1/n.
// H_{0,0} is undefined and throws DomainError.
Rational hyperharmonic(std::uint64_t n, std::uint64_t p);

// H_{n,p} = C(n+p-1, n) (H_{n+p-1} - H_{p-1}) for p >= 1; p = 0 gives 1/n.
Rational hyperharmonic_compact(std::uint64_t n, std::uint64_t p);

// H_{r,p+1/2} = 2^{1-2r} C(2p,p)^{-1} C(2(r+p), r+p) C(r+p, r) (O_{r+p} - O_p).
Rational hyperharmonic_half(std::uint64_t r, std::uint64_t p);

// Same value through the generalized binomial:
//   C(r+p-1/2, r) (H_{r+p-1/2} - H_{p-1/2}).
Rational hyperharmonic_half_via_gen_binomial(std::uint64_t r, std::uint64_t p);

Integer fibonacci(std::uint64_t n);
Integer lucas(std::uint64_t n);

// Ĥ_n := H_{n-1/2} - H_{-1/2} = 2 O_n.
Rational half_harmonic_offset(std::uint64_t n);

// H_x - H_y for rationals with x - y an integer, by stepping the functional
// equation H_t - H_{t-1} = 1/t. Throws DomainError when x - y is not an
// integer or the walk crosses a pole (a non-positive integer argument).
Rational harmonic_difference(const Rational& x, const Rational& y);

// ---------------------------------------------------------------------------
// SeqSpec: named, parameterized families. The family strings are the public
// vocabulary of the CLI and registry.

enum class Family {
    harmonic,
    harmonic_order,
    odd_harmonic,
    harmonic_like,
    stirling1,
    hyperharmonic,
    hyperharmonic_half,
    fibonacci,
    lucas,
    half_harmonic_offset,
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
const std::vector<Family>& all_families();

// Names of the parameters each family requires, e.g. {"m"} for harmonic_like.
const std::vector<std::string>& required_params(Family f);

class SeqSpec {
public:
    // Throws LookupError for an unknown family and DomainError when the
    // supplied parameters do not match the family's requirement exactly or
    // fall outside their domain.
    static SeqSpec make(std::string_view family, std::map<std::string, std::int64_t> params);
    static SeqSpec make(Family family, std::map<std::string, std::int64_t> params);

    Family family() const { return family_; }
    const std::map<std::string, std::int64_t>& params() const { return params_; }
    std::string describe() const;

    Rational evaluate(std::uint64_t n, SeqCache& cache) const;
    Rational evaluate(std::uint64_t n) const { return evaluate(n, default_cache()); }

private:
    SeqSpec(Family f, std::map<std::string, std::int64_t> p) : family_(f), params_(std::move(p)) {}
    std::uint64_t param(const std::string& name) const;

    Family family_;
    std::map<std::string, std::int64_t> params_;
};

} // namespace harmlike
