#pragma once

#include <string>
#include <vector>

namespace braidqi {

// One row of the consistency report: a printed formula or claim is re-derived
// numerically and compared against an independent recomputation.
struct Finding {
    std::string section;    // stable slug naming the construct under test
    std::string verbatim;   // what the printed form evaluates to
    std::string corrected;  // what the recomputed / repaired form evaluates to
    double residual = 0.0;  // numeric distance between the two readings
    std::string verdict;    // "matches" | "typo-suspected" | "inconsistent"
};

// Slugs that must always be present in the report output.
const std::vector<std::string>& mandatory_sections();

// Recomputes every tracked discrepancy from scratch (no cached numbers) and
// returns findings in a fixed order following the constructs' order of
// appearance in the source material.
std::vector<Finding> build_findings();

// Throws std::logic_error if any mandatory section is missing.
void ensure_mandatory_findings(const std::vector<Finding>& findings);

// Deterministic serializations of the report.
std::string report_json(const std::vector<Finding>& findings);
std::string report_csv(const std::vector<Finding>& findings);

}  // namespace braidqi
