#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace jrbac::checker {

enum class Kind {
    NonPublicAction,
    NonPrivateAuxiliary,
    PermissionDenied,
    CrossRoleCall,
    ForbiddenCalleeGroup,
    ResourceInstantiationOutsideRoleModel,
    UnresolvedReceiver,
    ClassificationError,
    UnimplementedRole,
    PackageLayout,
};

enum class Severity { Error, Warning };

std::string_view kind_name(Kind k);
std::string_view severity_name(Severity s);

struct Diagnostic {
    std::string file;
    int line = 0;
    std::string class_name;  // class the diagnostic is attributed to
    std::string method;      // enclosing method, when the site is a call
    Kind kind = Kind::ForbiddenCalleeGroup;
    Severity severity = Severity::Error;
    std::string message;
    std::string callee_class;  // callee, when the site is a call
    std::string callee_method;

    bool operator==(const Diagnostic&) const = default;
};

// Stable report order: file, then line, then kind, then class, then message.
bool diagnostic_before(const Diagnostic& a, const Diagnostic& b);

std::string format_text(const Diagnostic& d);

} // namespace jrbac::checker
