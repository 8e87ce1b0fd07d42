#include "jrbac/classify/groups.hpp"

namespace jrbac::classify {

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.size() >= prefix.size() &&
           s.compare(0, prefix.size(), prefix) == 0;
}

// Role-pattern match for one role name. Returns the matched group when the
// class name is exactly "<role>Model", exactly "<role>Controller", or
// "<role>View" followed by an arbitrary (possibly empty) tail.
std::optional<Group> role_pattern(const std::string& class_name,
                                  const std::string& role) {
    if (class_name == role + "Model")
        return Group::RoleModel;
    if (class_name == role + "Controller")
        return Group::RoleController;
    if (starts_with(class_name, role + "View"))
        return Group::RoleView;
    return std::nullopt;
}

} // namespace

std::string_view group_name(Group g) {
    switch (g) {
    case Group::Resource:
        return "resource";
    case Group::RoleModel:
        return "role model";
    case Group::RoleController:
        return "role controller";
    case Group::RoleView:
        return "role view";
    case Group::Session:
        return "session";
    case Group::Other:
        return "other";
    }
    return "other";
}

ClassificationError::ClassificationError(std::string class_name,
                                         std::string message)
    : Error("class '" + class_name + "': " + message),
      class_name_(std::move(class_name)) {}

AmbiguousClassificationError::AmbiguousClassificationError(
    std::string class_name, std::string role_a, std::string role_b)
    : ClassificationError(std::move(class_name),
                          "name matches the patterns of both role '" + role_a +
                              "' and role '" + role_b + "'") {}

NoSuchRoleError::NoSuchRoleError(std::string role)
    : Error("no role named '" + role + "' in the policy"),
      role_(std::move(role)) {}

const Placement& GroupTables::placement(const std::string& class_name) const {
    auto it = by_class.find(class_name);
    if (it == by_class.end())
        throw Error("class '" + class_name + "' was never classified");
    return it->second;
}

std::optional<std::string> owning_role(const std::string& class_name,
                                       const jpol::Policy& policy) {
    // Longest role name wins: when one role name is a prefix of another
    // (plus pattern suffix), the more specific role owns the class.
    std::optional<std::string> best;
    for (const auto& [role, _] : policy.roles) {
        if (!role_pattern(class_name, role))
            continue;
        if (!best || role.size() > best->size()) {
            best = role;
        } else if (role.size() == best->size() && role != *best) {
            throw AmbiguousClassificationError(class_name, *best, role);
        }
    }
    return best;
}

Placement classify(const std::string& class_name, const jpol::Policy& policy) {
    if (policy.resources.count(class_name))
        return {Group::Resource, {}};
    if (starts_with(class_name, "Session"))
        return {Group::Session, {}};
    if (auto role = owning_role(class_name, policy))
        return {*role_pattern(class_name, *role), *role};
    return {Group::Other, {}};
}

std::set<std::string> role_classes(const GroupTables& tables,
                                   const jpol::Policy& policy,
                                   const std::string& role) {
    if (!policy.roles.count(role))
        throw NoSuchRoleError(role);
    std::set<std::string> out;
    auto add = [&](const std::map<std::string, std::set<std::string>>& table) {
        if (auto it = table.find(role); it != table.end())
            out.insert(it->second.begin(), it->second.end());
    };
    add(tables.models);
    add(tables.controllers);
    add(tables.views);
    return out;
}

GroupTables build_groups(const frontend::ProgramModel& program,
                         const jpol::Policy& policy) {
    GroupTables tables;
    for (const auto& [name, cls] : program.classes) {
        Placement p = classify(name, policy);
        tables.by_class.emplace(name, p);
        switch (p.group) {
        case Group::Resource:
            tables.resources.insert(name);
            break;
        case Group::RoleModel:
            tables.models[p.role].insert(name);
            break;
        case Group::RoleController:
            tables.controllers[p.role].insert(name);
            break;
        case Group::RoleView:
            tables.views[p.role].insert(name);
            break;
        case Group::Session:
            tables.sessions.insert(name);
            break;
        case Group::Other:
            tables.others.insert(name);
            break;
        }
    }
    return tables;
}

} // namespace jrbac::classify
