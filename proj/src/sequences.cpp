#include "harmlike/sequences.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace harmlike {

namespace {

// Shared-lock probe followed by an exclusive extend-and-read.
template <typename Probe, typename Extend>
auto memo_lookup(std::shared_mutex& mutex, Probe probe, Extend extend)
{
    {
        std::shared_lock lock(mutex);
        if (auto hit = probe()) {
            return *hit;
        }
    }
    std::unique_lock lock(mutex);
    extend();
    return *probe();
}

} // namespace

Rational SeqCache::harmonic(std::uint64_t n)
{
    return harmonic_order(n, 1);
}

void SeqCache::extend_harmonic_order(std::vector<Rational>& row, std::uint64_t r, std::uint64_t n)
{
    if (row.empty()) {
        row.emplace_back(0);
    }
    row.reserve(n + 1);
    for (std::uint64_t k = row.size(); k <= n; ++k) {
        Integer kr;
        mpz_ui_pow_ui(kr.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(r));
        row.push_back(row.back() + Rational(Integer(1), kr));
    }
}

Rational SeqCache::harmonic_order(std::uint64_t n, std::uint64_t r)
{
    if (r == 0) {
        throw DomainError("harmonic_order requires order r >= 1");
    }
    return memo_lookup(
        mutex_,
        [&]() -> std::optional<Rational> {
            auto it = harmonic_order_.find(r);
            if (it != harmonic_order_.end() && n < it->second.size()) {
                return it->second[n];
            }
            return std::nullopt;
        },
        [&] { extend_harmonic_order(harmonic_order_[r], r, n); });
}

Rational SeqCache::odd_harmonic(std::uint64_t n)
{
    return memo_lookup(
        mutex_,
        [&]() -> std::optional<Rational> {
            if (n < odd_harmonic_.size()) {
                return odd_harmonic_[n];
            }
            return std::nullopt;
        },
        [&] {
            if (odd_harmonic_.empty()) {
                odd_harmonic_.emplace_back(0);
            }
            for (std::uint64_t k = odd_harmonic_.size(); k <= n; ++k) {
                odd_harmonic_.push_back(odd_harmonic_.back() + Rational(Integer(1), Integer(2 * k - 1)));
            }
        });
}

void SeqCache::extend_harmonic_like(std::uint64_t n, std::uint64_t m)
{
    if (harmonic_like_.size() <= m) {
        harmonic_like_.resize(m + 1);
    }
    auto& base = harmonic_like_[0];
    while (base.size() <= n) {
        base.emplace_back(1);
    }
    // Reciprocals 1/j shared by every level.
    std::vector<Rational> inv(n + 1);
    for (std::uint64_t j = 1; j <= n; ++j) {
        inv[j] = Rational(Integer(1), Integer(j));
    }
    for (std::uint64_t level = 1; level <= m; ++level) {
        const auto& prev = harmonic_like_[level - 1];
        auto& row = harmonic_like_[level];
        if (row.empty()) {
            row.emplace_back(0);
        }
        for (std::uint64_t i = row.size(); i <= n; ++i) {
            Rational acc;
            for (std::uint64_t j = 1; j <= i; ++j) {
                acc += prev[i - j] * inv[j];
            }
            row.push_back(std::move(acc));
        }
    }
}

Rational SeqCache::harmonic_like(std::uint64_t n, std::uint64_t m)
{
    return memo_lookup(
        mutex_,
        [&]() -> std::optional<Rational> {
            if (m < harmonic_like_.size() && n < harmonic_like_[m].size()) {
                return harmonic_like_[m][n];
            }
            return std::nullopt;
        },
        [&] { extend_harmonic_like(n, m); });
}

void SeqCache::extend_stirling(std::uint64_t n)
{
    if (stirling_.empty()) {
        stirling_.push_back({Integer(1)});
    }
    for (std::uint64_t row = stirling_.size(); row <= n; ++row) {
        const auto& prev = stirling_[row - 1];
        const Integer shift(static_cast<unsigned long>(row - 1));
        std::vector<Integer> next(row + 1);
        for (std::uint64_t k = 0; k <= row; ++k) {
            Integer v = 0;
            if (k >= 1) {
                v += prev[k - 1];
            }
            if (k < prev.size()) {
                v -= shift * prev[k];
            }
            next[k] = std::move(v);
        }
        stirling_.push_back(std::move(next));
    }
}

Integer SeqCache::stirling1(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    return memo_lookup(
        mutex_,
        [&]() -> std::optional<Integer> {
            if (n < stirling_.size()) {
                return stirling_[n][k];
            }
            return std::nullopt;
        },
        [&] { extend_stirling(n); });
}

void SeqCache::extend_hyperharmonic(std::uint64_t n, std::uint64_t p)
{
    if (hyperharmonic_.size() <= p) {
        hyperharmonic_.resize(p + 1);
    }
    auto& base = hyperharmonic_[0];
    if (base.empty()) {
        base.emplace_back(0); // placeholder for the undefined H_{0,0}
    }
    for (std::uint64_t i = base.size(); i <= n; ++i) {
        base.emplace_back(Integer(1), Integer(i));
    }
    for (std::uint64_t level = 1; level <= p; ++level) {
        const auto& prev = hyperharmonic_[level - 1];
        auto& row = hyperharmonic_[level];
        if (row.empty()) {
            row.emplace_back(0);
        }
        for (std::uint64_t i = row.size(); i <= n; ++i) {
            row.push_back(row.back() + prev[i]);
        }
    }
}

Rational SeqCache::hyperharmonic(std::uint64_t n, std::uint64_t p)
{
    if (n == 0 && p == 0) {
        throw DomainError("H_{0,0} is undefined (H_{n,0} = 1/n)");
    }
    return memo_lookup(
        mutex_,
        [&]() -> std::optional<Rational> {
            if (p < hyperharmonic_.size() && n < hyperharmonic_[p].size()) {
                return hyperharmonic_[p][n];
            }
            return std::nullopt;
        },
        [&] { extend_hyperharmonic(n, p); });
}

namespace {

void extend_linear_recurrence(std::vector<Integer>& seq, std::uint64_t n, long first, long second)
{
    if (seq.empty()) {
        seq.emplace_back(first);
        seq.emplace_back(second);
    }
    for (std::uint64_t i = seq.size(); i <= n; ++i) {
        seq.push_back(seq[i - 1] + seq[i - 2]);
    }
}

} // namespace

Integer SeqCache::fibonacci(std::uint64_t n)
{
    return memo_lookup(
        mutex_,
        [&]() -> std::optional<Integer> {
            if (n < fibonacci_.size()) {
                return fibonacci_[n];
            }
            return std::nullopt;
        },
        [&] { extend_linear_recurrence(fibonacci_, n, 0, 1); });
}

Integer SeqCache::lucas(std::uint64_t n)
{
    return memo_lookup(
        mutex_,
        [&]() -> std::optional<Integer> {
            if (n < lucas_.size()) {
                return lucas_[n];
            }
            return std::nullopt;
        },
        [&] { extend_linear_recurrence(lucas_, n, 2, 1); });
}

void SeqCache::clear()
{
    std::unique_lock lock(mutex_);
    harmonic_order_.clear();
    odd_harmonic_.clear();
    harmonic_like_.clear();
    stirling_.clear();
    hyperharmonic_.clear();
    fibonacci_.clear();
    lucas_.clear();
}

SeqCache& default_cache()
{
    static SeqCache cache;
    return cache;
}

Rational harmonic(std::uint64_t n) { return default_cache().harmonic(n); }
Rational harmonic_order(std::uint64_t n, std::uint64_t r) { return default_cache().harmonic_order(n, r); }
Rational odd_harmonic(std::uint64_t n) { return default_cache().odd_harmonic(n); }
Rational harmonic_like(std::uint64_t n, std::uint64_t m) { return default_cache().harmonic_like(n, m); }
Integer stirling1(std::uint64_t n, std::uint64_t k) { return default_cache().stirling1(n, k); }
Rational hyperharmonic(std::uint64_t n, std::uint64_t p) { return default_cache().hyperharmonic(n, p); }
Integer fibonacci(std::uint64_t n) { return default_cache().fibonacci(n); }
Integer lucas(std::uint64_t n) { return default_cache().lucas(n); }

namespace {

void enumerate_compositions(std::uint64_t parts, std::uint64_t budget, const Integer& product, Rational& acc)
{
    if (parts == 0) {
        acc += Rational(Integer(1), product);
        return;
    }
    // Leave at least 1 for each of the remaining parts.
    for (std::uint64_t k = 1; k + (parts - 1) <= budget; ++k) {
        enumerate_compositions(parts - 1, budget - k, product * static_cast<unsigned long>(k), acc);
    }
}

} // namespace

Rational harmonic_like_bruteforce(std::uint64_t n, std::uint64_t m, std::uint64_t ceiling)
{
    if (m == 0) {
        return Rational(1);
    }
    const Integer tuples = binomial(n, m);
    if (tuples > Integer(static_cast<unsigned long>(ceiling))) {
        throw FeasibilityError("enumerating " + tuples.get_str() + " tuples for H_" + std::to_string(n) + "(" +
                               std::to_string(m) + ") exceeds the ceiling of " + std::to_string(ceiling));
    }
    Rational acc;
    enumerate_compositions(m, n, Integer(1), acc);
    return acc;
}

Rational hyperharmonic_compact(std::uint64_t n, std::uint64_t p)
{
    if (p == 0) {
        if (n == 0) {
            throw DomainError("H_{0,0} is undefined (H_{n,0} = 1/n)");
        }
        return Rational(Integer(1), Integer(n));
    }
    return Rational(binomial(n + p - 1, n)) * (harmonic(n + p - 1) - harmonic(p - 1));
}

Rational hyperharmonic_half(std::uint64_t r, std::uint64_t p)
{
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * r));
    const Integer num = 2 * binomial(2 * (r + p), r + p) * binomial(r + p, r);
    const Integer den = two_pow * binomial(2 * p, p);
    return Rational(num, den) * (odd_harmonic(r + p) - odd_harmonic(p));
}

Rational hyperharmonic_half_via_gen_binomial(std::uint64_t r, std::uint64_t p)
{
    const Rational half(Integer(1), Integer(2));
    const Rational upper = Rational(r + p) - half;
    const Rational lower = Rational(p) - half;
    return gen_binomial(upper, r) * harmonic_difference(upper, lower);
}

Rational half_harmonic_offset(std::uint64_t n)
{
    return Rational(2) * odd_harmonic(n);
}

Rational harmonic_difference(const Rational& x, const Rational& y)
{
    const Rational gap = x - y;
    if (!gap.is_integer()) {
        throw DomainError("H_x - H_y needs x - y integral, got x = " + x.str() + ", y = " + y.str());
    }
    if (gap.sign() < 0) {
        return -harmonic_difference(y, x);
    }
    const auto is_pole = [](const Rational& t) { return t.is_integer() && t.sign() <= 0; };
    if (is_pole(y)) {
        throw DomainError("H_t has a pole at t = " + y.str());
    }
    const std::int64_t steps = gap.to_int64();
    Rational acc;
    Rational t = y;
    for (std::int64_t i = 0; i < steps; ++i) {
        t += Rational(1);
        if (is_pole(t)) {
            throw DomainError("H_t has a pole at t = " + t.str());
        }
        acc += t.reciprocal();
    }
    return acc;
}

// ---------------------------------------------------------------------------

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
    std::vector<std::string> params;
};

const std::vector<FamilyInfo>& family_table()
{
    static const std::vector<FamilyInfo> table = {
        {Family::harmonic, "harmonic", {}},
        {Family::harmonic_order, "harmonic_order", {"r"}},
        {Family::odd_harmonic, "odd_harmonic", {}},
        {Family::harmonic_like, "harmonic_like", {"m"}},
        {Family::stirling1, "stirling1", {"k"}},
        {Family::hyperharmonic, "hyperharmonic", {"p"}},
        {Family::hyperharmonic_half, "hyperharmonic_half", {"p"}},
        {Family::fibonacci, "fibonacci", {}},
        {Family::lucas, "lucas", {}},
        {Family::half_harmonic_offset, "half_harmonic_offset", {}},
    };
    return table;
}

const FamilyInfo& info(Family f)
{
    for (const auto& entry : family_table()) {
        if (entry.family == f) {
            return entry;
        }
    }
    throw LookupError("unregistered family");
}

} // namespace

std::string_view family_name(Family f)
{
    return info(f).name;
}

std::optional<Family> family_from_name(std::string_view name)
{
    for (const auto& entry : family_table()) {
        if (entry.name == name) {
            return entry.family;
        }
    }
    return std::nullopt;
}

const std::vector<Family>& all_families()
{
    static const std::vector<Family> families = [] {
        std::vector<Family> out;
        for (const auto& entry : family_table()) {
            out.push_back(entry.family);
        }
        return out;
    }();
    return families;
}

const std::vector<std::string>& required_params(Family f)
{
    return info(f).params;
}

SeqSpec SeqSpec::make(std::string_view family, std::map<std::string, std::int64_t> params)
{
    const auto f = family_from_name(family);
    if (!f) {
        throw LookupError("unknown sequence family '" + std::string(family) + "'");
    }
    return make(*f, std::move(params));
}

SeqSpec SeqSpec::make(Family family, std::map<std::string, std::int64_t> params)
{
    const auto& required = required_params(family);
    for (const auto& name : required) {
        if (!params.contains(name)) {
            throw DomainError(std::string(family_name(family)) + " requires parameter '" + name + "'");
        }
    }
    for (const auto& [name, value] : params) {
        if (std::find(required.begin(), required.end(), name) == required.end()) {
            throw DomainError(std::string(family_name(family)) + " does not take parameter '" + name + "'");
        }
        const std::int64_t minimum = (family == Family::harmonic_order) ? 1 : 0;
        if (value < minimum) {
            throw DomainError("parameter '" + name + "' must be >= " + std::to_string(minimum) + ", got " +
                              std::to_string(value));
        }
    }
    return SeqSpec(family, std::move(params));
}

std::uint64_t SeqSpec::param(const std::string& name) const
{
    return static_cast<std::uint64_t>(params_.at(name));
}

std::string SeqSpec::describe() const
{
    std::string out(family_name(family_));
    for (const auto& [name, value] : params_) {
        out += " " + name + "=" + std::to_string(value);
    }
    return out;
}

Rational SeqSpec::evaluate(std::uint64_t n, SeqCache& cache) const
{
    switch (family_) {
    case Family::harmonic:
        return cache.harmonic(n);
    case Family::harmonic_order:
        return cache.harmonic_order(n, param("r"));
    case Family::odd_harmonic:
        return cache.odd_harmonic(n);
    case Family::harmonic_like:
        return cache.harmonic_like(n, param("m"));
    case Family::stirling1:
        return Rational(cache.stirling1(n, param("k")));
    case Family::hyperharmonic:
        return cache.hyperharmonic(n, param("p"));
    case Family::hyperharmonic_half:
        return hyperharmonic_half(n, param("p"));
    case Family::fibonacci:
        return Rational(cache.fibonacci(n));
    case Family::lucas:
        return Rational(cache.lucas(n));
    case Family::half_harmonic_offset:
        return Rational(2) * cache.odd_harmonic(n);
    }
    throw LookupError("unhandled family");
}

} // namespace harmlike
