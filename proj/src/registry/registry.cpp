#include "common.hpp"

namespace harmlike {

namespace registry {

GridDim ab_fixtures()
{
    const auto pair = [](Rational a, Rational b) { return std::vector<Rational>{std::move(a), std::move(b)}; };
    return GridDim::tuples({"a", "b"}, {
                                           pair(1, 1),
                                           pair(-1, 1),
                                           pair(2, 1),
                                           pair(1, 2),
                                           pair(frac(1, 2), frac(-1, 3)),
                                           pair(3, -2),
                                           pair(0, 1),
                                           pair(1, 0),
                                       });
}

GridDim r_fixtures()
{
    return GridDim::values("r", {Rational(3), frac(1, 2), frac(5, 2), frac(-2, 3)});
}

IdentityDescriptor make(std::string id, std::string title, std::string anchor, std::string tag,
                        std::vector<GridDim> dims, Evaluator lhs, Evaluator rhs,
                        std::function<bool(const Binding&)> constraint)
{
    IdentityDescriptor d;
    d.id = std::move(id);
    d.title = std::move(title);
    d.anchor = std::move(anchor);
    d.tags = {std::move(tag)};
    d.domain.dims = std::move(dims);
    d.domain.constraint = std::move(constraint);
    d.lhs = std::move(lhs);
    d.rhs = std::move(rhs);
    return d;
}

} // namespace registry

const Registry& default_registry()
{
    static const Registry reg = [] {
        Registry r;
        registry::add_preliminaries(r);
        registry::add_binomial_sums(r);
        registry::add_telescoping(r);
        registry::add_hyperharmonic(r);
        return r;
    }();
    return reg;
}

} // namespace harmlike
