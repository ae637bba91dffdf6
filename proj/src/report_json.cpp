#include "harmlike/report_json.hpp"

namespace harmlike {

namespace {

nlohmann::ordered_json binding_to_json(const Binding& binding)
{
    auto out = nlohmann::ordered_json::object();
    for (const auto& [name, value] : binding.values()) {
        if (value.is_integer() && value.numerator().fits_slong_p()) {
            out[name] = value.numerator().get_si();
        } else {
            out[name] = value.str();
        }
    }
    return out;
}

} // namespace

nlohmann::ordered_json report_to_json(const VerificationReport& report)
{
    nlohmann::ordered_json j;
    j["identity"] = report.identity;
    j["anchor"] = report.anchor;
    j["cases"] = report.cases_checked;
    j["passed"] = report.passed;
    if (report.first_failure) {
        nlohmann::ordered_json failure;
        failure["binding"] = binding_to_json(report.first_failure->binding);
        failure["lhs"] = report.first_failure->lhs;
        failure["rhs"] = report.first_failure->rhs;
        j["first_failure"] = std::move(failure);
    } else {
        j["first_failure"] = nullptr;
    }
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, int indent)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        arr.push_back(report_to_json(r));
    }
    return arr.dump(indent);
}

} // namespace harmlike
