#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "jrbac/error.hpp"
#include "jrbac/frontend/model.hpp"
#include "jrbac/frontend/parse.hpp"

namespace jrbac::frontend {

// Fills in called_class for every call site of one class, against a
// read-only view of the whole program. Lookup order for a plain-name
// receiver: innermost param/local in scope, then fields, then a program
// class of that name; anything else is kUnresolved.
ClassModel resolve_calls(ClassModel model, const ProgramModel& program);

class ProgramParseError : public Error {
public:
    explicit ProgramParseError(std::vector<SourceParseError> errors);
    const std::vector<SourceParseError>& errors() const { return errors_; }

private:
    std::vector<SourceParseError> errors_;
};

class DuplicateClassError : public Error {
public:
    DuplicateClassError(std::string class_name, std::string first_file,
                        std::string second_file);
    const std::string& class_name() const { return class_name_; }

private:
    std::string class_name_;
};

// Parses every file, rejects duplicate class names and name/filename
// mismatches, then resolves all calls. Per-file parse failures are
// aggregated into one ProgramParseError.
ProgramModel parse_program(const std::vector<std::filesystem::path>& paths);

// Same pipeline over in-memory (path, text) pairs.
ProgramModel
parse_sources(const std::vector<std::pair<std::string, std::string>>& sources);

} // namespace jrbac::frontend
