#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "harmlike/identities.hpp"

namespace harmlike {

// { "identity", "anchor", "cases", "passed", "first_failure", "elapsed_ms" }
// first_failure is null or { "binding": {...}, "lhs": "p/q", "rhs": "p/q" }.
// Integer-valued binding entries are JSON numbers, other rationals strings.
nlohmann::ordered_json report_to_json(const VerificationReport& report);

// JSON array, one object per report, in the given order.
std::string reports_to_json(const std::vector<VerificationReport>& reports, int indent = 2);

} // namespace harmlike
