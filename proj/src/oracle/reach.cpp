#include "jrbac/oracle/reach.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace jrbac::oracle {

namespace {

using classify::Group;
using frontend::ClassModel;
using frontend::MethodModel;
using frontend::ProgramModel;

using Node = std::pair<std::string, std::string>; // class, method

struct RoleClosure {
    const ProgramModel& program;
    const jpol::Policy& policy;
    const classify::GroupTables& groups;
    const std::string& role;
    ReachReport& report;
    std::set<ReachableAccess> out = {};

    std::map<Node, Node> pred = {};
    std::deque<Node> queue = {};

    void seed(const std::string& cls_name) {
        const ClassModel* cls = program.find(cls_name);
        if (!cls)
            return;
        for (const auto& m : cls->methods) {
            if (m.visibility != frontend::Visibility::Public)
                continue;
            Node n{cls_name, m.name};
            if (pred.emplace(n, Node{"", ""}).second)
                queue.push_back(n);
        }
    }

    void enqueue(const Node& from, const std::string& cls,
                 const std::string& method) {
        const ClassModel* target = program.find(cls);
        if (!target || !target->find_method(method))
            return;
        Node n{cls, method};
        if (pred.emplace(n, from).second)
            queue.push_back(n);
    }

    std::vector<Node> path_to(Node n) const {
        std::vector<Node> path;
        while (!n.first.empty()) {
            path.push_back(n);
            n = pred.at(n);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    void run() {
        while (!queue.empty()) {
            Node node = queue.front();
            queue.pop_front();
            const ClassModel* cls = program.find(node.first);
            const MethodModel* method = cls->find_method(node.second);
            for (const auto& call : method->calls)
                follow(node, call);
        }
        report.accesses.insert(report.accesses.end(), out.begin(), out.end());
    }

    void follow(const Node& from, const frontend::CallSite& call) {
        if (!call.resolved()) {
            ++report.unresolved_edges;
            return;
        }
        Group g = classify::classify(call.called_class, policy).group;
        if (g == Group::Resource) {
            record_access(from, call);
            return; // action bodies are trusted, not traversed
        }
        if (g == Group::Session)
            return; // session bodies are trusted, not traversed
        enqueue(from, call.called_class, call.called_method);
        if (call.called_method == frontend::kConstructor)
            enqueue(from, call.called_class,
                    std::string(frontend::kFieldInit));
    }

    void record_access(const Node& from, const frontend::CallSite& call) {
        if (call.called_method == frontend::kConstructor)
            return;
        const auto& res = policy.resources.at(call.called_class);
        if (!res.actions.count(call.called_method))
            return;
        ReachableAccess access;
        access.role = role;
        access.resource = call.called_class;
        access.action = call.called_method;
        access.path = path_to(from);
        access.path.emplace_back(call.called_class, call.called_method);
        auto it = program.source_index.find(from.first);
        access.file = it != program.source_index.end() ? it->second : "";
        access.line = call.line;
        out.insert(std::move(access));
    }
};

} // namespace

bool SessionState::valid() const {
    if (!active_role)
        return true;
    return std::find(retrieved_roles.begin(), retrieved_roles.end(),
                     *active_role) != retrieved_roles.end();
}

std::vector<SessionState> session_states(const jpol::Policy& policy) {
    std::vector<std::string> all;
    for (const auto& [name, role] : policy.roles)
        all.push_back(name);
    std::vector<SessionState> states;
    states.reserve(all.size());
    for (const auto& name : all)
        states.push_back({all, name});
    return states;
}

ReachReport simulate_sessions(const frontend::ProgramModel& program,
                              const jpol::Policy& policy,
                              const classify::GroupTables& groups) {
    ReachReport report;
    for (const SessionState& session : session_states(policy)) {
        const std::string& role = *session.active_role;
        RoleClosure closure{program, policy, groups, role, report};
        auto seed_all = [&](const auto& table) {
            auto it = table.find(role);
            if (it == table.end())
                return;
            for (const auto& cls : it->second)
                closure.seed(cls);
        };
        seed_all(groups.controllers);
        seed_all(groups.views);
        closure.run();
    }
    std::sort(report.accesses.begin(), report.accesses.end());
    report.accesses.erase(
        std::unique(report.accesses.begin(), report.accesses.end()),
        report.accesses.end());
    return report;
}

std::vector<ReachableAccess> unauthorized_accesses(const jpol::Policy& policy,
                                                   const ReachReport& report) {
    std::vector<ReachableAccess> bad;
    for (const auto& access : report.accesses)
        if (!jpol::is_permitted(policy, access.role, access.resource,
                                access.action))
            bad.push_back(access);
    return bad;
}

bool check_satisfaction(const jpol::Policy& policy,
                        const ReachReport& report) {
    return unauthorized_accesses(policy, report).empty();
}

} // namespace jrbac::oracle
