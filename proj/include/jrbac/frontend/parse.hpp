#pragma once

#include <string>
#include <string_view>

#include "jrbac/error.hpp"
#include "jrbac/frontend/model.hpp"

namespace jrbac::frontend {

class SourceParseError : public Error {
public:
    SourceParseError(std::string file, int line, int column,
                     std::string message);

    const std::string& file() const { return file_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string file_;
    int line_;
    int column_;
};

// Parses one source file of the supported subset into a ClassModel. Every
// method-invocation and object-creation expression contributes exactly one
// CallSite; receiver resolution is deferred to resolve_calls.
ClassModel parse_class(std::string_view text, const std::string& path);

} // namespace jrbac::frontend
