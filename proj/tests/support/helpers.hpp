#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jrbac/frontend/program.hpp"
#include "jrbac/jpol/parse.hpp"
#include "jrbac/jpol/policy.hpp"

namespace support {

// Lets raw string literals start on the line after the opening quote.
inline std::string snip(const char* s) {
    return s[0] == '\n' ? std::string(s + 1) : std::string(s);
}

inline jrbac::jpol::Policy policy_from(const char* text) {
    return jrbac::jpol::build_tables(jrbac::jpol::parse_policy(snip(text)));
}

// (ClassName, body) pairs; the synthetic path is <ClassName>.java.
inline jrbac::frontend::ProgramModel
program_from(const std::vector<std::pair<std::string, std::string>>& classes) {
    std::vector<std::pair<std::string, std::string>> sources;
    sources.reserve(classes.size());
    for (const auto& [name, body] : classes)
        sources.emplace_back(name + ".java", body);
    return jrbac::frontend::parse_sources(sources);
}

inline std::filesystem::path fixture_dir() {
    return std::filesystem::path(JRBAC_FIXTURE_DIR);
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::vector<std::filesystem::path>
fixture_sources(const std::string& tree) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(
             fixture_dir() / tree / "src"))
        if (entry.is_regular_file() && entry.path().extension() == ".java")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

inline jrbac::frontend::ProgramModel fixture_program(const std::string& tree) {
    return jrbac::frontend::parse_program(fixture_sources(tree));
}

inline jrbac::jpol::Policy fixture_policy(const std::string& tree) {
    std::string text = read_file(fixture_dir() / tree / "policy.jpol");
    auto policy = jrbac::jpol::build_tables(jrbac::jpol::parse_policy(text));
    policy.source_path = (fixture_dir() / tree / "policy.jpol").string();
    return policy;
}

} // namespace support
