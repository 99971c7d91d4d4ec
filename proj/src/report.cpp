#include "formedflags/report.hpp"

namespace formedflags {

namespace {
constexpr std::size_t kMaxStoredFailures = 64;
}

void VerificationReport::check(Subset J, const LaurentPoly& lhs, const LaurentPoly& rhs, std::string note)
{
    ++instances_checked;
    if (lhs == rhs)
        return;
    if (failures.size() < kMaxStoredFailures)
        failures.push_back({J, lhs, rhs, std::move(note)});
    else
        failures.back().note = "(further failures truncated)";
}

void VerificationReport::merge(const VerificationReport& o)
{
    instances_checked += o.instances_checked;
    vacuous += o.vacuous;
    for (const auto& f : o.failures)
        if (failures.size() < kMaxStoredFailures)
            failures.push_back(f);
}

nlohmann::json VerificationReport::to_json() const
{
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : failures) {
        nlohmann::json j = {{"J", f.J.elements()}, {"lhs", f.lhs.to_json()}, {"rhs", f.rhs.to_json()}};
        if (!f.note.empty())
            j["note"] = f.note;
        fs.push_back(j);
    }
    return {{"claim", claim},
            {"instances_checked", instances_checked},
            {"vacuous", vacuous},
            {"failures", fs},
            {"verified", verified()}};
}

std::string VerificationReport::summary() const
{
    std::string s = claim + ": " + (verified() ? "verified" : "FAILED") + " (" + std::to_string(instances_checked) +
                    " checked";
    if (vacuous)
        s += ", " + std::to_string(vacuous) + " vacuous";
    if (!failures.empty())
        s += ", " + std::to_string(failures.size()) + " failures";
    return s + ")";
}

} // namespace formedflags
