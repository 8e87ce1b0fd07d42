#include "jrbac/checker/diagnostic.hpp"

#include <tuple>

namespace jrbac::checker {

std::string_view kind_name(Kind k) {
    switch (k) {
    case Kind::NonPublicAction:
        return "NonPublicAction";
    case Kind::NonPrivateAuxiliary:
        return "NonPrivateAuxiliary";
    case Kind::PermissionDenied:
        return "PermissionDenied";
    case Kind::CrossRoleCall:
        return "CrossRoleCall";
    case Kind::ForbiddenCalleeGroup:
        return "ForbiddenCalleeGroup";
    case Kind::ResourceInstantiationOutsideRoleModel:
        return "ResourceInstantiationOutsideRoleModel";
    case Kind::UnresolvedReceiver:
        return "UnresolvedReceiver";
    case Kind::ClassificationError:
        return "ClassificationError";
    case Kind::UnimplementedRole:
        return "UnimplementedRole";
    case Kind::PackageLayout:
        return "PackageLayout";
    }
    return "ForbiddenCalleeGroup";
}

std::string_view severity_name(Severity s) {
    return s == Severity::Error ? "error" : "warning";
}

bool diagnostic_before(const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.file, a.line, a.kind, a.class_name, a.message) <
           std::tie(b.file, b.line, b.kind, b.class_name, b.message);
}

std::string format_text(const Diagnostic& d) {
    std::string out = d.file;
    out += ':';
    out += std::to_string(d.line);
    out += ": ";
    out += kind_name(d.kind);
    out += ": ";
    out += d.message;
    return out;
}

} // namespace jrbac::checker
