#include "jrbac/frontend/program.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace jrbac::frontend {

namespace {

std::string join_messages(const std::vector<SourceParseError>& errors) {
    std::ostringstream out;
    out << errors.size() << " source file(s) failed to parse";
    for (const auto& e : errors)
        out << "\n  " << e.what();
    return out.str();
}

void mark_unresolved(CallSite& call, ReceiverForm form) {
    call.called_class = std::string(kUnresolved);
    call.form = form;
}

// Declared-type walk over a receiver path: each segment must be a field of a
// program class; the walk fails onto the unresolved sentinel otherwise.
bool walk_fields(const ProgramModel& program, std::string& type,
                 const std::vector<std::string>& path, std::size_t start) {
    for (std::size_t k = start; k < path.size(); ++k) {
        const ClassModel* c = program.find(type);
        if (!c)
            return false;
        const FieldDecl* f = c->find_field(path[k]);
        if (!f)
            return false;
        type = f->declared_type;
    }
    return !is_primitive_or_void(type);
}

void resolve_one(CallSite& call, const MethodModel& method,
                 const ClassModel& model, const ProgramModel& program) {
    switch (call.recv) {
    case CallSite::Recv::Bare:
    case CallSite::Recv::This:
        call.called_class = model.name;
        call.form = ReceiverForm::Self;
        break;
    case CallSite::Recv::New:
        call.form = ReceiverForm::New;
        break;
    case CallSite::Recv::Expr:
        mark_unresolved(call, ReceiverForm::Chained);
        break;
    case CallSite::Recv::Chain: {
        const CallSite& prev = method.calls[call.chain_prev];
        if (!prev.resolved()) {
            mark_unresolved(call, ReceiverForm::Chained);
            break;
        }
        std::string type;
        if (prev.called_method == kConstructor) {
            type = prev.called_class;
        } else {
            const ClassModel* pc = program.find(prev.called_class);
            const MethodModel* pm =
                pc ? pc->find_method(prev.called_method) : nullptr;
            if (!pm || is_primitive_or_void(pm->return_type)) {
                mark_unresolved(call, ReceiverForm::Chained);
                break;
            }
            type = pm->return_type;
        }
        call.called_class = std::move(type);
        call.form = ReceiverForm::Chained;
        break;
    }
    case CallSite::Recv::ThisPath: {
        std::string type = model.name;
        if (!walk_fields(program, type, call.receiver_path, 0)) {
            mark_unresolved(call, ReceiverForm::Variable);
            break;
        }
        call.called_class = std::move(type);
        call.form = ReceiverForm::Variable;
        break;
    }
    case CallSite::Recv::NamePath: {
        const std::string& head = call.receiver_path.front();
        std::string type;
        bool static_head = false;
        if (call.head_local_type) {
            type = *call.head_local_type;
        } else if (const FieldDecl* f = model.find_field(head)) {
            type = f->declared_type;
        } else if (program.find(head)) {
            type = head;
            static_head = true;
        } else {
            mark_unresolved(call, ReceiverForm::Variable);
            break;
        }
        if (!walk_fields(program, type, call.receiver_path, 1)) {
            // one-segment paths still carry a usable declared type; the walk
            // only rejects them when the type is primitive
            mark_unresolved(call, ReceiverForm::Variable);
            break;
        }
        call.called_class = std::move(type);
        call.form = static_head && call.receiver_path.size() == 1
                        ? ReceiverForm::StaticClass
                        : ReceiverForm::Variable;
        break;
    }
    }
}

} // namespace

ProgramParseError::ProgramParseError(std::vector<SourceParseError> errors)
    : Error(join_messages(errors)), errors_(std::move(errors)) {}

DuplicateClassError::DuplicateClassError(std::string class_name,
                                         std::string first_file,
                                         std::string second_file)
    : Error("class '" + class_name + "' is defined in both '" + first_file +
            "' and '" + second_file + "'"),
      class_name_(std::move(class_name)) {}

ClassModel resolve_calls(ClassModel model, const ProgramModel& program) {
    for (auto& method : model.methods)
        for (auto& call : method.calls)
            resolve_one(call, method, model, program);
    return model;
}

ProgramModel parse_sources(
    const std::vector<std::pair<std::string, std::string>>& sources) {
    ProgramModel program;
    std::vector<SourceParseError> errors;
    for (const auto& [path, text] : sources) {
        try {
            ClassModel cls = parse_class(text, path);
            std::string stem = std::filesystem::path(path).stem().string();
            if (!stem.empty() && stem != cls.name)
                throw SourceParseError(path, cls.decl_line, 1,
                                       "class '" + cls.name +
                                           "' must live in a file named '" +
                                           cls.name + ".java'");
            auto prior = program.source_index.find(cls.name);
            if (prior != program.source_index.end())
                throw DuplicateClassError(cls.name, prior->second, path);
            program.source_index.emplace(cls.name, path);
            program.classes.emplace(cls.name, std::move(cls));
        } catch (const SourceParseError& e) {
            errors.push_back(e);
        }
    }
    if (!errors.empty())
        throw ProgramParseError(std::move(errors));
    std::map<std::string, ClassModel> resolved;
    for (const auto& [name, cls] : program.classes)
        resolved.emplace(name, resolve_calls(cls, program));
    program.classes = std::move(resolved);
    return program;
}

ProgramModel parse_program(const std::vector<std::filesystem::path>& files) {
    std::vector<std::pair<std::string, std::string>> sources;
    sources.reserve(files.size());
    for (const auto& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in)
            throw Error("cannot read source file '" + file.string() + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        sources.emplace_back(file.string(), buf.str());
    }
    return parse_sources(sources);
}

} // namespace jrbac::frontend
