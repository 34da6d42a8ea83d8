#ifndef LINKFOL_REPORT_HPP
#define LINKFOL_REPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace linkfol {

/// One verified claim: a stable id, a human-readable statement of the fact
/// being checked, the outcome, and the exact evidence values.
struct ClaimResult {
    std::string id;
    std::string reference;
    bool pass = false;
    std::string evidence;
};

struct VerificationReport {
    std::string model;
    std::vector<ClaimResult> claims;

    bool all_pass() const {
        return std::all_of(claims.begin(), claims.end(),
                           [](const ClaimResult& c) { return c.pass; });
    }
};

} // namespace linkfol

#endif
