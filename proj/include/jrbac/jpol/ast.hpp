#pragma once

#include <string>
#include <variant>
#include <vector>

namespace jrbac::jpol {

// One node per grammar production. Ids (`nhsdoctor`) are binding variables;
// the quoted names (`NHSDoctor`) become the table keys later.

struct DecRole {
    std::string id;
    std::string role_name;
    bool operator==(const DecRole&) const = default;
};

struct DecRoleSubsume {
    std::string id;
    std::string role_name;
    std::string parent_id;
    bool operator==(const DecRoleSubsume&) const = default;
};

struct DecRes {
    std::string id;
    std::string resource_name;
    bool operator==(const DecRes&) const = default;
};

struct AddActRes {
    std::string resource_id;
    std::string action;
    bool operator==(const AddActRes&) const = default;
};

struct AddPermRole {
    std::string role_id;
    std::string resource_name;
    std::string action;
    bool operator==(const AddPermRole&) const = default;
};

using Statement =
    std::variant<DecRole, DecRoleSubsume, DecRes, AddActRes, AddPermRole>;

struct StatementNode {
    Statement stmt;
    int line = 0; // 1-based source line of the statement's first token
};

struct PolicyAst {
    std::vector<StatementNode> statements;
};

// Structural equality; source lines are not part of the structure.
inline bool operator==(const PolicyAst& a, const PolicyAst& b) {
    if (a.statements.size() != b.statements.size())
        return false;
    for (std::size_t i = 0; i < a.statements.size(); ++i)
        if (a.statements[i].stmt != b.statements[i].stmt)
            return false;
    return true;
}

// Canonical text form, one statement per line, straight single quotes.
// Reparsing the result yields a structurally identical AST.
std::string to_text(const PolicyAst& ast);

} // namespace jrbac::jpol
