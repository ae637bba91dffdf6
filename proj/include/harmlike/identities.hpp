#pragma once

// Identity registry and verification engine.
//
// An identity is a pair of independent evaluators (lhs, rhs) plus a finite
// parameter grid. Verification evaluates both sides exactly at every grid
// point in enumeration order and records the first disagreement.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "harmlike/exact_math.hpp"

namespace harmlike {

// One grid point: named parameter values in declaration order.
class Binding {
public:
    void set(std::string name, Rational value);

    // Throws LookupError for a missing name.
    const Rational& at(std::string_view name) const;
    // Value as a nonnegative machine integer; throws DomainError otherwise.
    std::uint64_t nat(std::string_view name) const;

    const std::vector<std::pair<std::string, Rational>>& values() const { return values_; }
    std::string str() const;

private:
    std::vector<std::pair<std::string, Rational>> values_;
};

using Evaluator = std::function<Rational(const Binding&)>;

// One axis of a grid. Either an inclusive integer range (overridable) or an
// explicit list of points; a point may bind several names at once, as the
// (a, b) fixture pairs do.
class GridDim {
public:
    static GridDim range(std::string name, std::int64_t lo, std::int64_t hi);
    static GridDim values(std::string name, std::vector<Rational> values);
    static GridDim tuples(std::vector<std::string> names, std::vector<std::vector<Rational>> points);

    const std::vector<std::string>& names() const { return names_; }
    bool is_range() const { return is_range_; }
    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return hi_; }
    std::vector<std::vector<Rational>> points() const;
    std::string describe() const;

    GridDim with_upper(std::int64_t hi) const;

private:
    std::vector<std::string> names_;
    bool is_range_ = false;
    std::int64_t lo_ = 0;
    std::int64_t hi_ = -1;
    std::vector<std::vector<Rational>> points_;
};

// Upper bounds replacing the defaults of same-named range dimensions.
using GridOverrides = std::map<std::string, std::int64_t>;

struct Grid {
    std::vector<GridDim> dims;
    // Optional filter; points it rejects are not part of the domain.
    std::function<bool(const Binding&)> constraint;

    Grid with_overrides(const GridOverrides& overrides) const;
    // First dimension varies slowest.
    std::vector<Binding> enumerate() const;
    std::uint64_t cardinality() const { return enumerate().size(); }
    std::string describe() const;
};

struct IdentityDescriptor {
    std::string id;
    std::string title;
    std::string anchor;
    std::vector<std::string> tags;
    Grid domain;
    Evaluator lhs;
    Evaluator rhs;

    bool has_tag(std::string_view tag) const;
};

struct FailureCase {
    Binding binding;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string identity;
    std::string anchor;
    std::uint64_t cases_checked = 0;
    bool passed = true;
    std::optional<FailureCase> first_failure;
    double elapsed_ms = 0.0;
};

// An evaluator that throws counts as a failure; the message is recorded in
// place of the value.
VerificationReport verify(const IdentityDescriptor& identity, const GridOverrides& overrides = {});

class Registry {
public:
    // Throws DomainError on a duplicate id.
    void add(IdentityDescriptor identity);

    // Throws LookupError for an unknown id.
    const IdentityDescriptor& find(std::string_view id) const;
    bool contains(std::string_view id) const;

    const std::vector<IdentityDescriptor>& all() const { return identities_; }
    std::size_t size() const { return identities_.size(); }

private:
    std::vector<IdentityDescriptor> identities_;
};

const Registry& default_registry();

VerificationReport verify_identity(std::string_view id, const GridOverrides& overrides = {});
VerificationReport verify_identity(const Registry& registry, std::string_view id,
                                   const GridOverrides& overrides = {});

// Runs every identity (optionally only those carrying `tag`) on its grid.
// Identities are checked on up to `threads` workers (0 = hardware
// concurrency); the result is sorted by id.
std::vector<VerificationReport> verify_all(const Registry& registry, const std::optional<std::string>& tag = {},
                                           const GridOverrides& overrides = {}, unsigned threads = 0);
std::vector<VerificationReport> verify_all(const std::optional<std::string>& tag = {},
                                           const GridOverrides& overrides = {}, unsigned threads = 0);

struct CatalogEntry {
    std::string id;
    std::string title;
    std::string anchor;
    std::vector<std::string> tags;
    std::string grid;
    std::uint64_t cases = 0;
};

// Sorted by id.
std::vector<CatalogEntry> registry_catalog(const Registry& registry = default_registry());

} // namespace harmlike
