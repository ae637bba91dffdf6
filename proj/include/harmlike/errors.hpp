#pragma once

#include <stdexcept>
#include <string>

namespace harmlike {

// Argument outside the mathematical domain of an operation (division by
// zero, H_{0,0}, series inverse of a non-unit, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Brute-force enumeration refused because it would exceed its work ceiling.
class FeasibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unknown name: sequence family, identity id, CLI family.
class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

} // namespace harmlike
