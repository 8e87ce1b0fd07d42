#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jrbac::frontend {

// Marker used as called_method for object-creation call sites and as the
// name of declared constructors.
inline constexpr std::string_view kConstructor = "<init>";
// Synthetic method holding calls made from field initializers.
inline constexpr std::string_view kFieldInit = "<fieldinit>";
// Sentinel called_class for receivers the resolver cannot type.
inline constexpr std::string_view kUnresolved = "<unresolved>";

enum class Visibility { Public, Protected, PackagePrivate, Private };

enum class ReceiverForm { StaticClass, Variable, Chained, New, Self };

struct CallSite {
    std::string called_class;  // class name, or kUnresolved
    std::string called_method; // method name, or kConstructor
    int line = 0;              // line of the invocation's opening parenthesis
    ReceiverForm form = ReceiverForm::Self;

    // Resolution inputs captured while parsing; consumed by resolve_calls.
    enum class Recv { Bare, This, ThisPath, NamePath, Chain, New, Expr };
    Recv recv = Recv::Bare;
    std::vector<std::string> receiver_path;     // for NamePath / ThisPath
    std::optional<std::string> head_local_type; // param/local type in scope
    int chain_prev = -1; // index of the receiver call, for Chain

    bool resolved() const { return called_class != kUnresolved; }
};

struct ParamDecl {
    std::string name;
    std::string declared_type;
};

struct MethodModel {
    std::string name; // kConstructor / kFieldInit for the synthetic ones
    Visibility visibility = Visibility::PackagePrivate;
    bool is_static = false;
    std::string return_type; // "void", a primitive, or a class name
    std::vector<ParamDecl> params;
    std::vector<CallSite> calls; // ordered by opening parenthesis
    int decl_line = 0;
    int body_begin = 0;
    int body_end = 0;

    bool is_constructor() const { return name == kConstructor; }
};

struct FieldDecl {
    std::string name;
    std::string declared_type;
    Visibility visibility = Visibility::PackagePrivate;
    int decl_line = 0;
};

struct ClassModel {
    std::string name;
    std::string package; // dotted path, possibly empty
    Visibility visibility = Visibility::PackagePrivate;
    std::optional<std::string> extends;
    std::vector<std::string> implements;
    std::vector<std::string> imports; // recorded, otherwise ignored
    std::vector<FieldDecl> fields;
    std::vector<MethodModel> methods;
    int decl_line = 0;

    const FieldDecl* find_field(const std::string& n) const {
        for (const auto& f : fields)
            if (f.name == n)
                return &f;
        return nullptr;
    }

    // Overloads share identity by name; first declaration wins.
    const MethodModel* find_method(const std::string& n) const {
        for (const auto& m : methods)
            if (m.name == n)
                return &m;
        return nullptr;
    }
};

struct ProgramModel {
    std::map<std::string, ClassModel> classes; // single global namespace
    std::map<std::string, std::string> source_index; // class name -> file path

    const ClassModel* find(const std::string& name) const {
        auto it = classes.find(name);
        return it == classes.end() ? nullptr : &it->second;
    }
};

bool is_primitive_or_void(const std::string& type);

} // namespace jrbac::frontend
