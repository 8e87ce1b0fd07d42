#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace jrbac::oracle {

// Random-case generator for the differential and reachability suites.
// Positive cases are correct by construction; negative cases carry exactly
// one seeded violation whose kind is recorded.
struct GenConfig {
    std::uint64_t seed = 0;
    int max_roles = 6;
    int max_resources = 4;
    int max_actions = 4;
    int max_classes = 30;
    double edge_density = 0.35;
    bool inject_violation = false;
    bool exact_sizes = false; // use the maxima instead of sampling sizes
};

struct GeneratedCase {
    std::string policy_text;
    std::vector<std::pair<std::string, std::string>> sources; // path, text
    bool should_accept = true;
    std::string injected_kind;  // checker kind spelling, when injected
    std::string injected_class; // class carrying the violation
};

GeneratedCase generate_case(const GenConfig& config);

} // namespace jrbac::oracle
