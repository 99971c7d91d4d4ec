#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "formedflags/laurent_poly.hpp"
#include "formedflags/subset.hpp"

namespace formedflags {

struct Failure {
    Subset J;
    LaurentPoly lhs;
    LaurentPoly rhs;
    std::string note;
};

struct VerificationReport {
    std::string claim;
    long long instances_checked = 0;
    long long vacuous = 0;
    std::vector<Failure> failures;

    bool verified() const { return failures.empty() && instances_checked > 0; }
    void check(Subset J, const LaurentPoly& lhs, const LaurentPoly& rhs, std::string note = {});
    void merge(const VerificationReport& o);
    nlohmann::json to_json() const;
    std::string summary() const;
};

} // namespace formedflags
