#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "jrbac/error.hpp"
#include "jrbac/jpol/ast.hpp"

namespace jrbac::jpol {

struct Resource {
    std::string name;
    std::set<std::string> actions;
};

struct Permission {
    std::string resource;
    std::string action;
    auto operator<=>(const Permission&) const = default;
};

struct Role {
    std::string name;
    std::set<Permission> declared;
    std::optional<std::string> subsumes; // parent role name, already resolved
    std::set<Permission> effective;      // declared plus inherited, flattened
    int decl_line = 0;
};

// The Resources and Roles tables. Keys are the quoted names, never the
// binding ids. Immutable once built.
struct Policy {
    std::map<std::string, Resource> resources;
    std::map<std::string, Role> roles;
    std::string source_path; // informational, used for diagnostics
};

class PolicySemanticError : public Error {
public:
    PolicySemanticError(std::string message, int line);
    int line() const { return line_; }

private:
    int line_;
};

class UnknownRoleError : public Error {
public:
    explicit UnknownRoleError(const std::string& role);
    const std::string& role() const { return role_; }

private:
    std::string role_;
};

// Builds the tables from a parsed policy. The file is read declaratively:
// forward references are legal, so a subsumption cycle is expressible and
// rejected here. Errors: duplicate declarations, unresolved resource/role
// references, permissions naming unknown resources or actions, cycles.
Policy build_tables(const PolicyAst& ast);

// Closed world: false for any triple the statements plus subsumption do not
// derive, including unknown names. Total.
bool is_permitted(const Policy& policy, const std::string& role,
                  const std::string& resource, const std::string& action);

// The flattened permission set every checker query uses.
const std::set<Permission>& effective_permissions(const Policy& policy,
                                                  const std::string& role);

} // namespace jrbac::jpol
