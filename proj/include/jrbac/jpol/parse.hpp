#pragma once

#include <string>
#include <string_view>

#include "jrbac/error.hpp"
#include "jrbac/jpol/ast.hpp"

namespace jrbac::jpol {

class PolicyParseError : public Error {
public:
    PolicyParseError(std::string message, int line, int column, std::string token);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& token() const { return token_; }

private:
    int line_;
    int column_;
    std::string token_;
};

// Syntax only: reference and duplicate checks happen in build_tables.
// Accepts `//` line comments as a documented extension, and name/permission
// arguments either bare, 'quoted' or `quoted'.
PolicyAst parse_policy(std::string_view text);

} // namespace jrbac::jpol
