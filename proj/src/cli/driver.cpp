#include "jrbac/cli/driver.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jrbac/checker/check.hpp"
#include "jrbac/classify/groups.hpp"
#include "jrbac/frontend/program.hpp"
#include "jrbac/jpol/parse.hpp"
#include "jrbac/oracle/reach.hpp"

namespace jrbac::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

std::vector<fs::path> collect_sources(const fs::path& root) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(root))
        if (entry.is_regular_file() && entry.path().extension() == ".java")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) {
                  return a.string() < b.string();
              });
    return files;
}

// Returns kExitAccepted on success, an exit code otherwise.
int load_policy(const RunConfig& cfg, std::ostream& err,
                jpol::Policy& policy) {
    std::string text;
    if (!read_file(cfg.policy_path, text)) {
        err << "cannot read policy file '" << cfg.policy_path << "'\n";
        return kExitUsageError;
    }
    try {
        policy = jpol::build_tables(jpol::parse_policy(text));
    } catch (const jpol::PolicyParseError& e) {
        err << cfg.policy_path << ":" << e.line() << ":" << e.column()
            << ": policy parse error: " << e.what() << "\n";
        return kExitPolicyError;
    } catch (const jpol::PolicySemanticError& e) {
        err << cfg.policy_path << ":" << e.line()
            << ": policy error: " << e.what() << "\n";
        return kExitPolicyError;
    }
    policy.source_path = cfg.policy_path;
    return kExitAccepted;
}

void write_explain_text(std::ostream& out,
                        const std::vector<oracle::ReachableAccess>& bad) {
    for (const auto& access : bad) {
        out << "explain: role '" << access.role << "' reaches ["
            << access.resource << ", " << access.action
            << "] without permission via ";
        bool first = true;
        for (const auto& [cls, method] : access.path) {
            if (!first)
                out << " -> ";
            out << cls << "." << method;
            first = false;
        }
        out << " (" << access.file << ":" << access.line << ")\n";
    }
}

ordered_json diagnostic_json(const checker::Diagnostic& d) {
    ordered_json j;
    j["file"] = d.file;
    j["line"] = d.line;
    j["class"] = d.class_name;
    if (!d.method.empty())
        j["method"] = d.method;
    j["kind"] = std::string(checker::kind_name(d.kind));
    j["severity"] = std::string(checker::severity_name(d.severity));
    j["message"] = d.message;
    if (!d.callee_class.empty()) {
        j["callee"] = ordered_json{{"class", d.callee_class},
                                   {"method", d.callee_method}};
    }
    return j;
}

int do_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    jpol::Policy policy;
    if (int code = load_policy(cfg, err, policy); code != kExitAccepted)
        return code;

    if (!fs::is_directory(cfg.source_root)) {
        err << "source root '" << cfg.source_root
            << "' is not a readable directory\n";
        return kExitUsageError;
    }
    frontend::ProgramModel program;
    try {
        program = frontend::parse_program(collect_sources(cfg.source_root));
    } catch (const frontend::ProgramParseError& e) {
        for (const auto& one : e.errors())
            err << one.what() << "\n";
        return kExitSourceError;
    } catch (const frontend::DuplicateClassError& e) {
        err << e.what() << "\n";
        return kExitSourceError;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitUsageError;
    }

    checker::CheckOptions opts;
    opts.strict_packages = cfg.strict_packages;
    opts.parallel = true;
    checker::Verdict verdict = checker::verify_program(program, policy, opts);

    std::vector<oracle::ReachableAccess> bad;
    if (cfg.explain) {
        try {
            classify::GroupTables groups =
                classify::build_groups(program, policy);
            oracle::ReachReport report =
                oracle::simulate_sessions(program, policy, groups);
            bad = oracle::unauthorized_accesses(policy, report);
        } catch (const classify::ClassificationError&) {
            // verdict already carries the classification diagnostic
        }
    }

    if (cfg.format == "json") {
        ordered_json j;
        j["schemaVersion"] = 1;
        j["accepted"] = verdict.accepted;
        j["diagnostics"] = ordered_json::array();
        for (const auto& d : verdict.diagnostics)
            j["diagnostics"].push_back(diagnostic_json(d));
        if (cfg.explain) {
            j["unauthorizedAccesses"] = ordered_json::array();
            for (const auto& access : bad) {
                ordered_json a;
                a["role"] = access.role;
                a["resource"] = access.resource;
                a["action"] = access.action;
                a["file"] = access.file;
                a["line"] = access.line;
                a["path"] = ordered_json::array();
                for (const auto& [cls, method] : access.path)
                    a["path"].push_back(
                        ordered_json{{"class", cls}, {"method", method}});
                j["unauthorizedAccesses"].push_back(std::move(a));
            }
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& d : verdict.diagnostics)
            out << checker::format_text(d) << "\n";
        if (cfg.explain)
            write_explain_text(out, bad);
    }
    return verdict.accepted ? kExitAccepted : kExitRejected;
}

int do_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    jpol::Policy policy;
    if (int code = load_policy(cfg, err, policy); code != kExitAccepted)
        return code;
    out << render_tables(policy);
    return kExitAccepted;
}

} // namespace

std::string render_tables(const jpol::Policy& policy) {
    std::ostringstream o;
    o << "Resources\n";
    for (const auto& [name, res] : policy.resources) {
        o << "  " << name << "\n";
        for (const auto& action : res.actions)
            o << "    " << action << "\n";
    }
    o << "Roles\n";
    for (const auto& [name, role] : policy.roles) {
        o << "  " << name;
        if (role.subsumes)
            o << " (subsumes " << *role.subsumes << ")";
        o << "\n";
        for (const auto& perm : role.effective) {
            o << "    [" << perm.resource << ", " << perm.action << "]";
            if (!role.declared.count(perm))
                o << " (inherited)";
            o << "\n";
        }
    }
    return o.str();
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Static verifier for role-based access control policies "
                 "over Java-style sources"};
    app.name("jrbac");
    app.require_subcommand(1);

    RunConfig cfg;
    CLI::App* verify =
        app.add_subcommand("verify", "Check a source tree against a policy");
    verify->add_option("--policy", cfg.policy_path, "JPol policy file")
        ->required();
    verify->add_option("--src", cfg.source_root, "Source root directory")
        ->required();
    verify->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--strict-packages", cfg.strict_packages,
                     "Also lint package layout against MVC conventions");
    verify->add_flag("--explain", cfg.explain,
                     "Show reachable unauthorized accesses for rejections");

    CLI::App* tables =
        app.add_subcommand("tables", "Print the policy's tables");
    tables->add_option("--policy", cfg.policy_path, "JPol policy file")
        ->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("jrbac");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsageError;
    }

    if (verify->parsed())
        return do_verify(cfg, out, err);
    if (tables->parsed())
        return do_tables(cfg, out, err);
    err << app.help();
    return kExitUsageError;
}

} // namespace jrbac::cli
