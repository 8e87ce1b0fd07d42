#pragma once

#include <string>
#include <vector>

#include "jrbac/frontend/model.hpp"
#include "jrbac/jpol/policy.hpp"

namespace jrbac::oracle {

// Plain re-derivation of the acceptance decision, written independently of
// the production checker so differential tests can compare the two. Findings
// mirror error-severity diagnostics only.
struct NaiveFinding {
    std::string class_name;
    int line = 0;
    std::string kind; // same spelling as checker::kind_name

    auto operator<=>(const NaiveFinding&) const = default;
};

struct NaiveResult {
    bool ok = true;
    std::vector<NaiveFinding> findings;
};

NaiveResult naive_check(const jpol::Policy& policy,
                        const frontend::ProgramModel& program);

bool naive_ok(const jpol::Policy& policy,
              const frontend::ProgramModel& program);

} // namespace jrbac::oracle
