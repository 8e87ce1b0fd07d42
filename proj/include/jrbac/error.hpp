#pragma once

#include <stdexcept>
#include <string>

namespace jrbac {

// Base class for every error the verifier library raises.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace jrbac
