#include "jrbac/oracle/naive.hpp"

#include <set>

namespace jrbac::oracle {

namespace {

// The naive evaluator keeps its own grouping and permission logic on purpose:
// it must not share code with the modules it cross-checks.

enum NG { NRes, NModel, NCtrl, NView, NSess, NOther };

struct NPlace {
    NG g = NOther;
    std::string role;
};

bool has_prefix(const std::string& s, const std::string& p) {
    return s.rfind(p, 0) == 0;
}

NPlace ngroup(const std::string& name, const jpol::Policy& policy) {
    if (policy.resources.find(name) != policy.resources.end())
        return {NRes, ""};
    if (has_prefix(name, "Session"))
        return {NSess, ""};
    NPlace best;
    std::size_t best_len = 0;
    for (const auto& entry : policy.roles) {
        const std::string& r = entry.first;
        if (r.size() < best_len)
            continue;
        if (name == r + "Model")
            best = {NModel, r}, best_len = r.size();
        else if (name == r + "Controller")
            best = {NCtrl, r}, best_len = r.size();
        else if (has_prefix(name, r + "View"))
            best = {NView, r}, best_len = r.size();
    }
    return best;
}

// Permission lookup by walking the subsumption chain, ignoring the
// precomputed effective sets.
bool npermitted(const jpol::Policy& policy, std::string role,
                const std::string& res, const std::string& act) {
    std::set<std::string> seen;
    while (seen.insert(role).second) {
        auto it = policy.roles.find(role);
        if (it == policy.roles.end())
            return false;
        for (const auto& p : it->second.declared)
            if (p.resource == res && p.action == act)
                return true;
        if (!it->second.subsumes)
            return false;
        role = *it->second.subsumes;
    }
    return false;
}

} // namespace

NaiveResult naive_check(const jpol::Policy& policy,
                        const frontend::ProgramModel& program) {
    NaiveResult result;
    auto flag = [&](const std::string& cls, int line, const char* kind) {
        result.findings.push_back({cls, line, kind});
    };

    for (const auto& entry : program.classes) {
        const std::string& cname = entry.first;
        const frontend::ClassModel& cls = entry.second;
        NPlace here = ngroup(cname, policy);

        if (here.g == NRes) {
            const auto& actions = policy.resources.at(cname).actions;
            for (const auto& m : cls.methods) {
                if (m.name == frontend::kConstructor ||
                    m.name == frontend::kFieldInit)
                    continue;
                bool is_action = actions.find(m.name) != actions.end();
                if (is_action &&
                    m.visibility != frontend::Visibility::Public)
                    flag(cname, m.decl_line, "NonPublicAction");
                if (!is_action &&
                    m.visibility != frontend::Visibility::Private)
                    flag(cname, m.decl_line, "NonPrivateAuxiliary");
            }
        }

        for (const auto& m : cls.methods) {
            for (const auto& call : m.calls) {
                if (call.called_class == frontend::kUnresolved) {
                    if (here.g != NOther)
                        flag(cname, call.line, "UnresolvedReceiver");
                    continue;
                }
                if (call.called_class == cname)
                    continue;
                NPlace there = ngroup(call.called_class, policy);
                if (there.g == NOther)
                    continue;

                if (there.g == NRes) {
                    if (here.g == NRes)
                        continue;
                    if (call.called_method == frontend::kConstructor) {
                        if (here.g != NModel)
                            flag(cname, call.line,
                                 "ResourceInstantiationOutsideRoleModel");
                        continue;
                    }
                    if (here.g == NSess || here.g == NOther) {
                        flag(cname, call.line, "ForbiddenCalleeGroup");
                        continue;
                    }
                    const auto& actions =
                        policy.resources.at(call.called_class).actions;
                    if (actions.find(call.called_method) != actions.end() &&
                        !npermitted(policy, here.role, call.called_class,
                                    call.called_method))
                        flag(cname, call.line, "PermissionDenied");
                    continue;
                }
                if (there.g == NModel) {
                    bool ok = (here.g == NModel || here.g == NCtrl) &&
                              here.role == there.role;
                    if (ok)
                        continue;
                    if (here.g == NModel || here.g == NCtrl)
                        flag(cname, call.line, "CrossRoleCall");
                    else
                        flag(cname, call.line, "ForbiddenCalleeGroup");
                    continue;
                }
                if (there.g == NCtrl || there.g == NView) {
                    if (here.g == NSess)
                        continue;
                    bool peer = here.g == NCtrl || here.g == NView;
                    if (peer && here.role == there.role)
                        continue;
                    if (peer)
                        flag(cname, call.line, "CrossRoleCall");
                    else
                        flag(cname, call.line, "ForbiddenCalleeGroup");
                    continue;
                }
                if (there.g == NSess && here.g != NSess)
                    flag(cname, call.line, "ForbiddenCalleeGroup");
            }
        }
    }
    result.ok = result.findings.empty();
    return result;
}

bool naive_ok(const jpol::Policy& policy,
              const frontend::ProgramModel& program) {
    return naive_check(policy, program).ok;
}

} // namespace jrbac::oracle
