#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jrbac/error.hpp"
#include "jrbac/frontend/model.hpp"
#include "jrbac/jpol/policy.hpp"

namespace jrbac::classify {

enum class Group {
    Resource,
    RoleModel,
    RoleController,
    RoleView,
    Session,
    Other,
};

std::string_view group_name(Group g);

// Placement of one class: its group plus, for the three role groups, the
// role that owns it.
struct Placement {
    Group group = Group::Other;
    std::string role; // empty unless group is RoleModel/RoleController/RoleView

    bool operator==(const Placement&) const = default;
};

class ClassificationError : public Error {
public:
    ClassificationError(std::string class_name, std::string message);
    const std::string& class_name() const { return class_name_; }

private:
    std::string class_name_;
};

// Thrown when a class name matches the naming scheme of two different roles
// with equal specificity, so neither owner can be preferred.
class AmbiguousClassificationError : public ClassificationError {
public:
    AmbiguousClassificationError(std::string class_name, std::string role_a,
                                 std::string role_b);
};

class NoSuchRoleError : public Error {
public:
    explicit NoSuchRoleError(std::string role);
    const std::string& role() const { return role_; }

private:
    std::string role_;
};

struct GroupTables {
    std::map<std::string, Placement> by_class;
    std::set<std::string> resources;
    std::map<std::string, std::set<std::string>> models;      // role -> classes
    std::map<std::string, std::set<std::string>> controllers; // role -> classes
    std::map<std::string, std::set<std::string>> views;       // role -> classes
    std::set<std::string> sessions;
    std::set<std::string> others;

    const Placement& placement(const std::string& class_name) const;
};

// Classify one class name against the policy's resource and role tables.
Placement classify(const std::string& class_name, const jpol::Policy& policy);

// Classify every class of the program; throws ClassificationError when a
// name cannot be placed consistently.
GroupTables build_groups(const frontend::ProgramModel& program,
                         const jpol::Policy& policy);

// The role whose naming scheme the class name follows, if any.
std::optional<std::string> owning_role(const std::string& class_name,
                                       const jpol::Policy& policy);

// Every class the tables place under one role, across its model, controller
// and view groups. Throws NoSuchRoleError for a role the policy lacks.
std::set<std::string> role_classes(const GroupTables& tables,
                                   const jpol::Policy& policy,
                                   const std::string& role);

} // namespace jrbac::classify
