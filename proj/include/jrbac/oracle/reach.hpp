#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jrbac/classify/groups.hpp"
#include "jrbac/frontend/model.hpp"
#include "jrbac/jpol/policy.hpp"

namespace jrbac::oracle {

// The run-time session bookkeeping the simulator models: the authenticated
// user's retrieved roles and the one currently active.
struct SessionState {
    std::vector<std::string> retrieved_roles;
    std::optional<std::string> active_role;

    bool valid() const;
};

// One resource action reachable from a role's entry points, together with
// the call chain that reaches it. `path` is the chain of (class, method)
// nodes from the entry method to the invocation, ending at
// (resource, action).
struct ReachableAccess {
    std::string role;
    std::string resource;
    std::string action;
    std::vector<std::pair<std::string, std::string>> path;
    std::string file; // source of the class performing the invocation
    int line = 0;

    auto operator<=>(const ReachableAccess&) const = default;
};

struct ReachReport {
    std::vector<ReachableAccess> accesses; // sorted, deduplicated
    std::size_t unresolved_edges = 0;      // gaps the closure could not follow
};

// One session per declared role, active on that role.
std::vector<SessionState> session_states(const jpol::Policy& policy);

// Call-graph closure from every public method of each role's controller and
// view classes. Resource and session bodies are not descended into.
ReachReport simulate_sessions(const frontend::ProgramModel& program,
                              const jpol::Policy& policy,
                              const classify::GroupTables& groups);

// Accesses whose [resource, action] is outside the role's effective
// permissions.
std::vector<ReachableAccess> unauthorized_accesses(const jpol::Policy& policy,
                                                   const ReachReport& report);

bool check_satisfaction(const jpol::Policy& policy,
                        const ReachReport& report);

} // namespace jrbac::oracle
