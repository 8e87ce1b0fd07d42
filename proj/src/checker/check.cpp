#include "jrbac/checker/check.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jrbac::checker {

namespace {

using classify::Group;
using classify::Placement;
using frontend::CallSite;
using frontend::ClassModel;
using frontend::MethodModel;
using frontend::ProgramModel;

std::string source_of(const ProgramModel& program, const std::string& cls) {
    auto it = program.source_index.find(cls);
    return it != program.source_index.end() ? it->second : cls + ".java";
}

// How a caller group relates to resource callees.
enum class ResourceAccess {
    Free,           // resources and their helpers: no restrictions
    Constructing,   // role models: may construct, actions need permission
    PermissionOnly, // controllers and views: no construction, actions need
                    // permission
    Forbidden,      // sessions and everything else: hands off entirely
};

class ClassChecker {
public:
    ClassChecker(const ClassModel& cls, const ProgramModel& program,
                 const classify::GroupTables& groups,
                 const jpol::Policy& policy, const CheckOptions& opts,
                 std::size_t& calls_examined)
        : cls_(cls), program_(program), groups_(groups), policy_(policy),
          opts_(opts), calls_examined_(calls_examined),
          place_(groups.placement(cls.name)),
          file_(source_of(program, cls.name)) {}

    std::vector<Diagnostic> run() {
        if (place_.group == Group::Resource)
            check_resource_visibility();
        for (const auto& method : cls_.methods)
            for (const auto& call : method.calls)
                check_call(method, call);
        if (opts_.strict_packages)
            check_package();
        return std::move(out_);
    }

private:
    Diagnostic& emit(Kind kind, int line, std::string message,
                     Severity severity = Severity::Error) {
        Diagnostic d;
        d.file = file_;
        d.line = line;
        d.class_name = cls_.name;
        d.kind = kind;
        d.severity = severity;
        d.message = std::move(message);
        out_.push_back(std::move(d));
        return out_.back();
    }

    Diagnostic& emit_call(Kind kind, const MethodModel& method,
                          const CallSite& call, std::string message,
                          Severity severity = Severity::Error) {
        Diagnostic& d = emit(kind, call.line, std::move(message), severity);
        d.method = method.name;
        d.callee_class = call.called_class;
        d.callee_method = call.called_method;
        return d;
    }

    // 1a/1b: actions public, everything else private. Constructors and field
    // initializers are neither.
    void check_resource_visibility() {
        const auto& actions = policy_.resources.at(cls_.name).actions;
        for (const auto& method : cls_.methods) {
            if (method.is_constructor() || method.name == frontend::kFieldInit)
                continue;
            if (actions.count(method.name)) {
                if (method.visibility != frontend::Visibility::Public) {
                    Diagnostic& d = emit(
                        Kind::NonPublicAction, method.decl_line,
                        "action '" + method.name + "' of resource '" +
                            cls_.name + "' must be declared public");
                    d.method = method.name;
                }
            } else if (method.visibility != frontend::Visibility::Private) {
                Diagnostic& d = emit(
                    Kind::NonPrivateAuxiliary, method.decl_line,
                    "non-action method '" + method.name + "' of resource '" +
                        cls_.name + "' must be declared private");
                d.method = method.name;
            }
        }
    }

    void check_call(const MethodModel& method, const CallSite& call) {
        ++calls_examined_;
        if (!call.resolved()) {
            Severity sev = place_.group == Group::Other ? Severity::Warning
                                                        : Severity::Error;
            emit_call(Kind::UnresolvedReceiver, method, call,
                      "receiver of call to '" + call.called_method +
                          "' cannot be resolved to a declared type",
                      sev);
            return;
        }
        if (call.called_class == cls_.name)
            return; // calls within the class are free
        Placement callee = classify::classify(call.called_class, policy_);
        switch (callee.group) {
        case Group::Resource:
            check_resource_callee(method, call);
            break;
        case Group::RoleModel:
            check_model_callee(method, call, callee.role);
            break;
        case Group::RoleController:
            check_controller_callee(method, call, callee.role);
            break;
        case Group::RoleView:
            check_view_callee(method, call, callee.role);
            break;
        case Group::Session:
            check_session_callee(method, call);
            break;
        case Group::Other:
            // plain helpers, in the program or in a library, are callable
            // from anywhere
            break;
        }
    }

    ResourceAccess resource_access() const {
        switch (place_.group) {
        case Group::Resource:
            return ResourceAccess::Free;
        case Group::RoleModel:
            return ResourceAccess::Constructing;
        case Group::RoleController:
        case Group::RoleView:
            return ResourceAccess::PermissionOnly;
        case Group::Session:
        case Group::Other:
            return ResourceAccess::Forbidden;
        }
        return ResourceAccess::Forbidden;
    }

    void check_resource_callee(const MethodModel& method,
                               const CallSite& call) {
        ResourceAccess access = resource_access();
        if (access == ResourceAccess::Free)
            return;
        if (call.called_method == frontend::kConstructor) {
            if (access != ResourceAccess::Constructing)
                emit_call(Kind::ResourceInstantiationOutsideRoleModel, method,
                          call,
                          "resource '" + call.called_class +
                              "' may only be instantiated by a role model "
                              "class");
            return;
        }
        if (access == ResourceAccess::Forbidden) {
            emit_call(Kind::ForbiddenCalleeGroup, method, call,
                      forbidden_message("resource", call.called_class));
            return;
        }
        const auto& actions = policy_.resources.at(call.called_class).actions;
        if (!actions.count(call.called_method))
            return; // auxiliary method; resource-side visibility covers it
        if (!jpol::is_permitted(policy_, place_.role, call.called_class,
                                call.called_method)) {
            emit_call(Kind::PermissionDenied, method, call,
                      "Invocation not permitted: role '" + place_.role +
                          "' lacks permission [" + call.called_class + ", " +
                          call.called_method + "]");
        }
    }

    void check_model_callee(const MethodModel& method, const CallSite& call,
                            const std::string& callee_role) {
        switch (place_.group) {
        case Group::RoleModel:
        case Group::RoleController:
            if (callee_role != place_.role)
                emit_cross_role(method, call, callee_role);
            return;
        case Group::RoleView:
        case Group::Session:
        case Group::Other:
        case Group::Resource:
            emit_call(Kind::ForbiddenCalleeGroup, method, call,
                      forbidden_message("role model", call.called_class));
            return;
        }
    }

    void check_controller_callee(const MethodModel& method,
                                 const CallSite& call,
                                 const std::string& callee_role) {
        switch (place_.group) {
        case Group::RoleController:
        case Group::RoleView:
            if (callee_role != place_.role)
                emit_cross_role(method, call, callee_role);
            return;
        case Group::Session:
            return; // sessions drive role controllers
        case Group::RoleModel:
        case Group::Resource:
        case Group::Other:
            emit_call(Kind::ForbiddenCalleeGroup, method, call,
                      forbidden_message("role controller", call.called_class));
            return;
        }
    }

    void check_view_callee(const MethodModel& method, const CallSite& call,
                           const std::string& callee_role) {
        switch (place_.group) {
        case Group::RoleController:
        case Group::RoleView:
            if (callee_role != place_.role)
                emit_cross_role(method, call, callee_role);
            return;
        case Group::Session:
            return; // sessions open role views
        case Group::RoleModel:
        case Group::Resource:
        case Group::Other:
            emit_call(Kind::ForbiddenCalleeGroup, method, call,
                      forbidden_message("role view", call.called_class));
            return;
        }
    }

    void check_session_callee(const MethodModel& method,
                              const CallSite& call) {
        if (place_.group == Group::Session)
            return;
        emit_call(Kind::ForbiddenCalleeGroup, method, call,
                  forbidden_message("session", call.called_class));
    }

    void emit_cross_role(const MethodModel& method, const CallSite& call,
                         const std::string& callee_role) {
        emit_call(Kind::CrossRoleCall, method, call,
                  "class of role '" + place_.role + "' calls '" +
                      call.called_class + "' which belongs to role '" +
                      callee_role + "'");
    }

    std::string forbidden_message(std::string_view callee_group,
                                  const std::string& callee) const {
        std::string out = "a ";
        out += classify::group_name(place_.group);
        out += " class may not call ";
        out += callee_group;
        out += " class '";
        out += callee;
        out += "'";
        return out;
    }

    void check_package() {
        std::string_view expected;
        switch (place_.group) {
        case Group::Resource:
        case Group::RoleModel:
            expected = "model";
            break;
        case Group::RoleController:
            expected = "controller";
            break;
        case Group::RoleView:
            expected = "view";
            break;
        case Group::Session:
            expected = "session";
            break;
        case Group::Other:
            expected = "other";
            break;
        }
        if (package_has_segment(cls_.package, expected))
            return;
        std::string found = cls_.package.empty()
                                ? "the default package"
                                : "package '" + cls_.package + "'";
        emit(Kind::PackageLayout, cls_.decl_line,
             std::string(classify::group_name(place_.group)) + " class '" +
                 cls_.name + "' expected in a '" + std::string(expected) +
                 "' package, found " + found,
             Severity::Warning);
    }

    static bool package_has_segment(const std::string& package,
                                    std::string_view segment) {
        std::size_t pos = 0;
        while (pos <= package.size()) {
            std::size_t dot = package.find('.', pos);
            std::size_t end = dot == std::string::npos ? package.size() : dot;
            if (std::string_view(package).substr(pos, end - pos) == segment)
                return true;
            if (dot == std::string::npos)
                break;
            pos = dot + 1;
        }
        return false;
    }

    const ClassModel& cls_;
    const ProgramModel& program_;
    const classify::GroupTables& groups_;
    const jpol::Policy& policy_;
    const CheckOptions& opts_;
    std::size_t& calls_examined_;
    Placement place_;
    std::string file_;
    std::vector<Diagnostic> out_;
};

} // namespace

std::size_t Verdict::error_count() const {
    return static_cast<std::size_t>(
        std::count_if(diagnostics.begin(), diagnostics.end(),
                      [](const Diagnostic& d) {
                          return d.severity == Severity::Error;
                      }));
}

std::size_t Verdict::warning_count() const {
    return diagnostics.size() - error_count();
}

std::vector<Diagnostic> check_class(const frontend::ClassModel& cls,
                                    const frontend::ProgramModel& program,
                                    const classify::GroupTables& groups,
                                    const jpol::Policy& policy,
                                    const CheckOptions& opts,
                                    std::size_t& calls_examined) {
    return ClassChecker(cls, program, groups, policy, opts, calls_examined)
        .run();
}

Verdict verify_program(const frontend::ProgramModel& program,
                       const jpol::Policy& policy, const CheckOptions& opts) {
    Verdict verdict;
    classify::GroupTables groups;
    try {
        groups = classify::build_groups(program, policy);
    } catch (const classify::ClassificationError& e) {
        Diagnostic d;
        d.kind = Kind::ClassificationError;
        d.severity = Severity::Error;
        d.class_name = e.class_name();
        d.file = source_of(program, e.class_name());
        const frontend::ClassModel* cls = program.find(e.class_name());
        d.line = cls ? cls->decl_line : 0;
        d.message = e.what();
        verdict.diagnostics.push_back(std::move(d));
        verdict.accepted = false;
        return verdict;
    }

    std::vector<const frontend::ClassModel*> order;
    order.reserve(program.classes.size());
    for (const auto& [name, cls] : program.classes)
        order.push_back(&cls);

    bool parallel = opts.parallel;
#ifndef _OPENMP
    parallel = false;
#endif
    if (parallel) {
#ifdef _OPENMP
        const long n = static_cast<long>(order.size());
#pragma omp parallel
        {
            std::vector<Diagnostic> local;
            std::size_t local_calls = 0;
#pragma omp for nowait schedule(dynamic)
            for (long i = 0; i < n; ++i) {
                std::vector<Diagnostic> one = check_class(
                    *order[i], program, groups, policy, opts, local_calls);
                local.insert(local.end(),
                             std::make_move_iterator(one.begin()),
                             std::make_move_iterator(one.end()));
            }
#pragma omp critical(jrbac_verdict_merge)
            {
                verdict.diagnostics.insert(
                    verdict.diagnostics.end(),
                    std::make_move_iterator(local.begin()),
                    std::make_move_iterator(local.end()));
                verdict.calls_examined += local_calls;
            }
        }
#endif
    } else {
        for (const frontend::ClassModel* cls : order) {
            std::vector<Diagnostic> one = check_class(
                *cls, program, groups, policy, opts, verdict.calls_examined);
            verdict.diagnostics.insert(verdict.diagnostics.end(),
                                       std::make_move_iterator(one.begin()),
                                       std::make_move_iterator(one.end()));
        }
    }
    verdict.classes_checked = order.size();

    for (const auto& [name, role] : policy.roles) {
        bool implemented = groups.models.count(name) > 0 ||
                           groups.controllers.count(name) > 0;
        if (implemented)
            continue;
        Diagnostic d;
        d.kind = Kind::UnimplementedRole;
        d.severity = Severity::Warning;
        d.file = policy.source_path;
        d.line = role.decl_line;
        d.class_name = "";
        d.message =
            "role '" + name + "' has neither a model nor a controller class";
        verdict.diagnostics.push_back(std::move(d));
    }

    std::sort(verdict.diagnostics.begin(), verdict.diagnostics.end(),
              diagnostic_before);
    verdict.accepted = verdict.error_count() == 0;
    return verdict;
}

} // namespace jrbac::checker
