#include "harmlike/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace harmlike {

void Binding::set(std::string name, Rational value)
{
    for (auto& [key, v] : values_) {
        if (key == name) {
            v = std::move(value);
            return;
        }
    }
    values_.emplace_back(std::move(name), std::move(value));
}

const Rational& Binding::at(std::string_view name) const
{
    for (const auto& [key, v] : values_) {
        if (key == name) {
            return v;
        }
    }
    throw LookupError("binding has no parameter '" + std::string(name) + "'");
}

std::uint64_t Binding::nat(std::string_view name) const
{
    const auto& v = at(name);
    const auto i = v.to_int64();
    if (i < 0) {
        throw DomainError("parameter '" + std::string(name) + "' must be nonnegative, got " + v.str());
    }
    return static_cast<std::uint64_t>(i);
}

std::string Binding::str() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += values_[i].first + "=" + values_[i].second.str();
    }
    return out + "}";
}

// ---------------------------------------------------------------------------

GridDim GridDim::range(std::string name, std::int64_t lo, std::int64_t hi)
{
    GridDim d;
    d.names_ = {std::move(name)};
    d.is_range_ = true;
    d.lo_ = lo;
    d.hi_ = hi;
    return d;
}

GridDim GridDim::values(std::string name, std::vector<Rational> values)
{
    std::vector<std::vector<Rational>> points;
    points.reserve(values.size());
    for (auto& v : values) {
        points.push_back({std::move(v)});
    }
    return tuples({std::move(name)}, std::move(points));
}

GridDim GridDim::tuples(std::vector<std::string> names, std::vector<std::vector<Rational>> points)
{
    for (const auto& p : points) {
        if (p.size() != names.size()) {
            throw DomainError("grid point arity does not match its dimension names");
        }
    }
    GridDim d;
    d.names_ = std::move(names);
    d.points_ = std::move(points);
    return d;
}

std::vector<std::vector<Rational>> GridDim::points() const
{
    if (!is_range_) {
        return points_;
    }
    std::vector<std::vector<Rational>> out;
    for (std::int64_t v = lo_; v <= hi_; ++v) {
        out.push_back({Rational(v)});
    }
    return out;
}

std::string GridDim::describe() const
{
    if (is_range_) {
        return names_.front() + "=" + std::to_string(lo_) + ".." + std::to_string(hi_);
    }
    std::string label = names_.size() == 1 ? names_.front() : "(" + [&] {
        std::string joined;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            joined += (i ? "," : "") + names_[i];
        }
        return joined;
    }() + ")";
    std::string out = label + " in {";
    for (std::size_t i = 0; i < points_.size(); ++i) {
        out += i ? ", " : "";
        if (points_[i].size() == 1) {
            out += points_[i][0].str();
        } else {
            out += "(";
            for (std::size_t j = 0; j < points_[i].size(); ++j) {
                out += (j ? "," : "") + points_[i][j].str();
            }
            out += ")";
        }
    }
    return out + "}";
}

GridDim GridDim::with_upper(std::int64_t hi) const
{
    GridDim d = *this;
    if (d.is_range_) {
        d.hi_ = hi;
    }
    return d;
}

Grid Grid::with_overrides(const GridOverrides& overrides) const
{
    Grid g = *this;
    for (auto& dim : g.dims) {
        if (!dim.is_range()) {
            continue;
        }
        if (auto it = overrides.find(dim.names().front()); it != overrides.end()) {
            dim = dim.with_upper(it->second);
        }
    }
    return g;
}

std::vector<Binding> Grid::enumerate() const
{
    std::vector<std::vector<std::vector<Rational>>> axes;
    axes.reserve(dims.size());
    for (const auto& dim : dims) {
        axes.push_back(dim.points());
        if (axes.back().empty()) {
            return {};
        }
    }

    std::vector<Binding> out;
    std::vector<std::size_t> index(dims.size(), 0);
    while (true) {
        Binding b;
        for (std::size_t d = 0; d < dims.size(); ++d) {
            const auto& point = axes[d][index[d]];
            for (std::size_t i = 0; i < point.size(); ++i) {
                b.set(dims[d].names()[i], point[i]);
            }
        }
        if (!constraint || constraint(b)) {
            out.push_back(std::move(b));
        }
        // odometer, last dimension fastest
        std::size_t d = dims.size();
        while (d > 0) {
            --d;
            if (++index[d] < axes[d].size()) {
                break;
            }
            index[d] = 0;
            if (d == 0) {
                return out;
            }
        }
        if (dims.empty()) {
            return out;
        }
    }
}

std::string Grid::describe() const
{
    std::string out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        out += (i ? "; " : "") + dims[i].describe();
    }
    return out;
}

bool IdentityDescriptor::has_tag(std::string_view tag) const
{
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

// ---------------------------------------------------------------------------

namespace {

struct Side {
    std::optional<Rational> value;
    std::string text;
};

Side evaluate_side(const Evaluator& eval, const Binding& b)
{
    try {
        Rational v = eval(b);
        std::string text = v.str();
        return {std::move(v), std::move(text)};
    } catch (const std::exception& e) {
        return {std::nullopt, std::string("error: ") + e.what()};
    }
}

} // namespace

VerificationReport verify(const IdentityDescriptor& identity, const GridOverrides& overrides)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.identity = identity.id;
    report.anchor = identity.anchor;

    for (const auto& binding : identity.domain.with_overrides(overrides).enumerate()) {
        ++report.cases_checked;
        if (report.first_failure) {
            continue; // keep counting the full grid
        }
        auto lhs = evaluate_side(identity.lhs, binding);
        auto rhs = evaluate_side(identity.rhs, binding);
        if (!lhs.value || !rhs.value || *lhs.value != *rhs.value) {
            report.passed = false;
            report.first_failure = FailureCase{binding, std::move(lhs.text), std::move(rhs.text)};
        }
    }
    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

void Registry::add(IdentityDescriptor identity)
{
    if (contains(identity.id)) {
        throw DomainError("duplicate identity id '" + identity.id + "'");
    }
    identities_.push_back(std::move(identity));
}

const IdentityDescriptor& Registry::find(std::string_view id) const
{
    for (const auto& identity : identities_) {
        if (identity.id == id) {
            return identity;
        }
    }
    throw LookupError("unknown identity '" + std::string(id) + "'");
}

bool Registry::contains(std::string_view id) const
{
    return std::any_of(identities_.begin(), identities_.end(), [&](const auto& i) { return i.id == id; });
}

VerificationReport verify_identity(const Registry& registry, std::string_view id, const GridOverrides& overrides)
{
    return verify(registry.find(id), overrides);
}

VerificationReport verify_identity(std::string_view id, const GridOverrides& overrides)
{
    return verify_identity(default_registry(), id, overrides);
}

std::vector<VerificationReport> verify_all(const Registry& registry, const std::optional<std::string>& tag,
                                           const GridOverrides& overrides, unsigned threads)
{
    std::vector<const IdentityDescriptor*> selected;
    for (const auto& identity : registry.all()) {
        if (!tag || identity.has_tag(*tag)) {
            selected.push_back(&identity);
        }
    }

    std::vector<VerificationReport> reports(selected.size());
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, selected.size())));

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
            reports[i] = verify(*selected[i], overrides);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }

    std::sort(reports.begin(), reports.end(),
              [](const auto& x, const auto& y) { return x.identity < y.identity; });
    return reports;
}

std::vector<VerificationReport> verify_all(const std::optional<std::string>& tag, const GridOverrides& overrides,
                                           unsigned threads)
{
    return verify_all(default_registry(), tag, overrides, threads);
}

std::vector<CatalogEntry> registry_catalog(const Registry& registry)
{
    std::vector<CatalogEntry> out;
    for (const auto& identity : registry.all()) {
        out.push_back({identity.id, identity.title, identity.anchor, identity.tags, identity.domain.describe(),
                       identity.domain.cardinality()});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    return out;
}

} // namespace harmlike
