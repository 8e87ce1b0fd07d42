#pragma once

#include <cstddef>
#include <vector>

#include "jrbac/checker/diagnostic.hpp"
#include "jrbac/classify/groups.hpp"
#include "jrbac/frontend/model.hpp"
#include "jrbac/jpol/policy.hpp"

namespace jrbac::checker {

struct CheckOptions {
    bool strict_packages = false;
    bool parallel = false;
};

struct Verdict {
    bool accepted = false;
    std::vector<Diagnostic> diagnostics;
    std::size_t classes_checked = 0;
    std::size_t calls_examined = 0;

    std::size_t error_count() const;
    std::size_t warning_count() const;
};

// Run the per-group suite for a single class. `calls_examined` is bumped once
// per call site the suite looked at.
std::vector<Diagnostic> check_class(const frontend::ClassModel& cls,
                                    const frontend::ProgramModel& program,
                                    const classify::GroupTables& groups,
                                    const jpol::Policy& policy,
                                    const CheckOptions& opts,
                                    std::size_t& calls_examined);

// Full pipeline over an already-parsed program: classify, check every class,
// then the whole-program passes. Never throws for policy violations; those
// come back as diagnostics with accepted == false.
Verdict verify_program(const frontend::ProgramModel& program,
                       const jpol::Policy& policy,
                       const CheckOptions& opts = {});

} // namespace jrbac::checker
