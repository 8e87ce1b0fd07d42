#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "jrbac/jpol/policy.hpp"

namespace jrbac::cli {

inline constexpr int kExitAccepted = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitPolicyError = 2;
inline constexpr int kExitSourceError = 3;
inline constexpr int kExitUsageError = 4;

struct RunConfig {
    std::string policy_path;
    std::string source_root;
    std::string format = "text"; // text | json
    bool strict_packages = false;
    bool explain = false;
};

// Stable text layout of the policy tables, used by `tables` and golden tests.
std::string render_tables(const jpol::Policy& policy);

// Full driver, in-process: parses argv (without the program name), runs the
// requested command, writes to the given streams, returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace jrbac::cli
