#include "jrbac/jpol/policy.hpp"

#include <functional>

namespace jrbac::jpol {

PolicySemanticError::PolicySemanticError(std::string message, int line)
    : Error("policy:" + std::to_string(line) + ": " + std::move(message)),
      line_(line) {}

UnknownRoleError::UnknownRoleError(const std::string& role)
    : Error("unknown role '" + role + "'"), role_(role) {}

namespace {

struct Binding {
    enum class Kind { Role, Resource } kind;
    std::string name; // quoted name the id is bound to
    int line;
};

[[noreturn]] void fail(const std::string& msg, int line) {
    throw PolicySemanticError(msg, line);
}

} // namespace

Policy build_tables(const PolicyAst& ast) {
    Policy policy;
    std::map<std::string, Binding> bindings;
    // parent binding id per role name, resolved after all declarations
    std::map<std::string, std::pair<std::string, int>> parent_ids;

    auto declare = [&](Binding::Kind kind, const std::string& id,
                       const std::string& name, int line) {
        if (bindings.count(id))
            fail("duplicate declaration of id '" + id + "'", line);
        if (policy.resources.count(name) || policy.roles.count(name))
            fail("duplicate declaration of name '" + name + "'", line);
        bindings.emplace(id, Binding{kind, name, line});
        if (kind == Binding::Kind::Resource)
            policy.resources.emplace(name, Resource{name, {}});
        else
            policy.roles.emplace(name, Role{name, {}, std::nullopt, {}, line});
    };

    for (const auto& node : ast.statements) {
        if (const auto* s = std::get_if<DecRole>(&node.stmt)) {
            declare(Binding::Kind::Role, s->id, s->role_name, node.line);
        } else if (const auto* s = std::get_if<DecRoleSubsume>(&node.stmt)) {
            declare(Binding::Kind::Role, s->id, s->role_name, node.line);
            parent_ids[s->role_name] = {s->parent_id, node.line};
        } else if (const auto* s = std::get_if<DecRes>(&node.stmt)) {
            declare(Binding::Kind::Resource, s->id, s->resource_name,
                    node.line);
        }
    }

    // The file is declarative: actions attach before any permission is
    // validated, regardless of statement order.
    for (const auto& node : ast.statements) {
        const auto* s = std::get_if<AddActRes>(&node.stmt);
        if (!s)
            continue;
        auto it = bindings.find(s->resource_id);
        if (it == bindings.end() || it->second.kind != Binding::Kind::Resource)
            fail("addAction on undeclared resource id '" + s->resource_id + "'",
                 node.line);
        policy.resources.at(it->second.name).actions.insert(s->action);
    }

    for (const auto& node : ast.statements) {
        const auto* s = std::get_if<AddPermRole>(&node.stmt);
        if (!s)
            continue;
        auto it = bindings.find(s->role_id);
        if (it == bindings.end() || it->second.kind != Binding::Kind::Role)
            fail("addPermission on undeclared role id '" + s->role_id + "'",
                 node.line);
        auto res = policy.resources.find(s->resource_name);
        if (res == policy.resources.end())
            fail("permission names unknown resource '" + s->resource_name + "'",
                 node.line);
        if (!res->second.actions.count(s->action))
            fail("permission names action '" + s->action +
                     "' not declared for resource '" + s->resource_name + "'",
                 node.line);
        policy.roles.at(it->second.name)
            .declared.insert(Permission{s->resource_name, s->action});
    }

    for (auto& [name, pid] : parent_ids) {
        auto it = bindings.find(pid.first);
        if (it == bindings.end() || it->second.kind != Binding::Kind::Role)
            fail("subsumes references undeclared role id '" + pid.first + "'",
                 pid.second);
        policy.roles.at(name).subsumes = it->second.name;
    }

    // Flatten the hierarchy; a cycle is a hard error.
    enum class Mark { Unvisited, InProgress, Done };
    std::map<std::string, Mark> marks;
    std::function<void(Role&)> flatten = [&](Role& role) {
        Mark& m = marks[role.name];
        if (m == Mark::Done)
            return;
        if (m == Mark::InProgress)
            fail("subsumption cycle involving role '" + role.name + "'",
                 role.decl_line);
        m = Mark::InProgress;
        role.effective = role.declared;
        if (role.subsumes) {
            Role& parent = policy.roles.at(*role.subsumes);
            flatten(parent);
            role.effective.insert(parent.effective.begin(),
                                  parent.effective.end());
        }
        marks[role.name] = Mark::Done;
    };
    for (auto& [name, role] : policy.roles)
        flatten(role);

    return policy;
}

bool is_permitted(const Policy& policy, const std::string& role,
                  const std::string& resource, const std::string& action) {
    auto it = policy.roles.find(role);
    if (it == policy.roles.end())
        return false;
    return it->second.effective.count(Permission{resource, action}) > 0;
}

const std::set<Permission>& effective_permissions(const Policy& policy,
                                                  const std::string& role) {
    auto it = policy.roles.find(role);
    if (it == policy.roles.end())
        throw UnknownRoleError(role);
    return it->second.effective;
}

} // namespace jrbac::jpol
