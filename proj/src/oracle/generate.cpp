#include "jrbac/oracle/generate.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <vector>

namespace jrbac::oracle {

namespace {

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(
                                         hi - lo + 1));
    }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(eng) < p;
    }
};

std::string pad3(int i) {
    std::string s = std::to_string(i);
    while (s.size() < 3)
        s.insert(s.begin(), '0');
    return s;
}

struct ResourceSpec {
    std::string name;
    std::string id;
    std::vector<std::string> actions;
};

struct RoleSpec {
    std::string name;
    std::string id;
    int parent = -1;
    std::set<std::pair<std::string, std::string>> declared;
    std::set<std::pair<std::string, std::string>> effective;
    std::vector<std::string> view_classes;
};

struct MethodSpec {
    std::string vis;
    std::string ret;
    std::string name;
    std::vector<std::string> body;
};

struct ClsSpec {
    std::string name;
    std::vector<std::string> fields; // rendered declarations
    std::vector<MethodSpec> methods;

    MethodSpec* find(const std::string& method) {
        for (auto& m : methods)
            if (m.name == method)
                return &m;
        return nullptr;
    }
};

std::string render(const ClsSpec& c) {
    std::ostringstream o;
    o << "public class " << c.name << " {\n";
    for (const auto& f : c.fields)
        o << "    " << f << "\n";
    for (const auto& m : c.methods) {
        o << "\n    " << m.vis << ' ' << m.ret << ' ' << m.name << "() {\n";
        for (const auto& line : m.body)
            o << "        " << line << "\n";
        o << "    }\n";
    }
    o << "}\n";
    return o.str();
}

const std::vector<std::string> kRolePool = {"Alpha",   "Bravo", "Charlie",
                                            "Delta",   "Echo",  "Foxtrot"};
const std::vector<std::string> kResPool = {"Record", "Ledger", "Chart",
                                           "Invoice"};
const std::vector<std::string> kActPool = {"read",  "write", "listAll",
                                           "audit", "open",  "close",
                                           "tally", "purge"};

struct Builder {
    const GenConfig& cfg;
    Rng rng;
    std::vector<ResourceSpec> resources;
    std::vector<RoleSpec> roles;
    std::vector<ClsSpec> classes;
    GeneratedCase out;

    explicit Builder(const GenConfig& c) : cfg(c), rng(c.seed) {}

    ClsSpec* cls(const std::string& name) {
        for (auto& c : classes)
            if (c.name == name)
                return &c;
        return nullptr;
    }

    void design_policy() {
        int n_res = cfg.exact_sizes ? cfg.max_resources
                                    : rng.range(1, cfg.max_resources);
        int n_roles =
            cfg.exact_sizes ? cfg.max_roles : rng.range(1, cfg.max_roles);
        for (int j = 0; j < n_res; ++j) {
            ResourceSpec r;
            r.name = j < static_cast<int>(kResPool.size())
                         ? kResPool[j]
                         : "Res" + pad3(j);
            r.id = "s" + std::to_string(j);
            int n_act = cfg.exact_sizes ? cfg.max_actions
                                        : rng.range(1, cfg.max_actions);
            for (int t = 0; t < n_act; ++t)
                r.actions.push_back(
                    kActPool[(j + t) % kActPool.size()]);
            resources.push_back(std::move(r));
        }
        for (int i = 0; i < n_roles; ++i) {
            RoleSpec r;
            r.name = i < static_cast<int>(kRolePool.size())
                         ? kRolePool[i]
                         : "R" + pad3(i);
            r.id = "r" + std::to_string(i);
            if (i > 0 && rng.chance(0.5))
                r.parent = i - 1;
            roles.push_back(std::move(r));
        }
        for (auto& role : roles)
            for (const auto& res : resources)
                for (const auto& act : res.actions)
                    if (rng.chance(cfg.edge_density))
                        role.declared.emplace(res.name, act);
        bool any = false;
        for (const auto& role : roles)
            any = any || !role.declared.empty();
        if (!any)
            roles[0].declared.emplace(resources[0].name,
                                      resources[0].actions[0]);
        for (std::size_t i = 0; i < roles.size(); ++i) {
            roles[i].effective = roles[i].declared;
            if (roles[i].parent >= 0)
                for (const auto& p : roles[roles[i].parent].effective)
                    roles[i].effective.insert(p);
        }
    }

    void emit_policy_text() {
        std::ostringstream o;
        for (const auto& res : resources) {
            o << "Resource " << res.id << " = new Resource('" << res.name
              << "');\n";
            for (const auto& act : res.actions)
                o << res.id << ".addAction(" << act << ");\n";
        }
        for (const auto& role : roles) {
            o << "Role " << role.id << " = new Role('" << role.name << "')";
            if (role.parent >= 0)
                o << " subsumes " << roles[role.parent].id;
            o << ";\n";
        }
        for (const auto& role : roles)
            for (const auto& [res, act] : role.declared)
                o << role.id << ".addPermission(" << res << ", " << act
                  << ");\n";
        out.policy_text = o.str();
    }

    bool room() const {
        return static_cast<int>(classes.size()) < cfg.max_classes;
    }

    void plan_classes() {
        for (const auto& res : resources) {
            if (!room())
                break;
            classes.push_back(resource_class(res));
        }
        for (auto& role : roles) {
            if (!room())
                break;
            classes.push_back(model_class(role));
        }
        for (auto& role : roles) {
            if (!room())
                break;
            classes.push_back(controller_class(role));
        }
        if (room())
            classes.push_back(session_controller());
        if (room() && (cfg.exact_sizes || rng.chance(0.6)))
            classes.push_back(session_view());
        if (room())
            classes.push_back(helper_class());
        if (room() && (cfg.exact_sizes || rng.chance(0.5)))
            classes.push_back(decoy_class());
        static const char* kViewTails[] = {"", "Main", "List"};
        for (auto& role : roles) {
            int n_views = cfg.exact_sizes ? 2 : rng.range(0, 2);
            for (int t = 0; t < n_views && room(); ++t) {
                std::string name = role.name + "View" + kViewTails[t];
                role.view_classes.push_back(name);
                classes.push_back(view_class(role, name, t));
            }
        }
    }

    ClsSpec resource_class(const ResourceSpec& res) {
        ClsSpec c;
        c.name = res.name;
        for (const auto& act : res.actions)
            c.methods.push_back({"public", "int", act, {"return 1;"}});
        MethodSpec aux{"private", "int", "scrub", {"return 2;"}};
        if (resources.size() > 1 && rng.chance(0.3)) {
            const ResourceSpec& peer =
                resources[&res == &resources[0] ? 1 : 0];
            aux.body = {peer.name + " peer = new " + peer.name + "();",
                        "peer." + peer.actions[0] + "();", "return 2;"};
        }
        c.methods.push_back(std::move(aux));
        return c;
    }

    // Picks a permitted (resource, action) for the role, if any.
    const std::pair<std::string, std::string>*
    some_permission(const RoleSpec& role) {
        if (role.effective.empty())
            return nullptr;
        auto it = role.effective.begin();
        std::advance(it, rng.range(0, static_cast<int>(
                                          role.effective.size()) -
                                          1));
        return &*it;
    }

    ClsSpec model_class(const RoleSpec& role) {
        ClsSpec c;
        c.name = role.name + "Model";
        c.methods.push_back({"private", "int", "prep", {"return 3;"}});
        c.methods.push_back({"public", "void", "task0", {"this.prep();"}});
        c.methods.push_back(
            {"public", "int", "taskPrep", {"return prep();"}});
        int k = 0;
        for (const auto& [res, act] : role.effective) {
            if (!rng.chance(cfg.edge_density))
                continue;
            MethodSpec m{"public", "void", "use" + res + "_" + act, {}};
            m.body = {res + " tmp = new " + res + "();",
                      "tmp." + act + "();"};
            c.methods.push_back(std::move(m));
            if (++k >= 4)
                break;
        }
        if (const auto* perm = some_permission(role)) {
            c.fields.push_back("private " + perm->first + " store;");
            c.methods.push_back({"public", "int", "fetch",
                                 {"return store." + perm->second + "();"}});
        }
        if (rng.chance(0.5))
            c.methods.push_back(
                {"public", "void", "lean",
                 {"Helper h = new Helper();", "h.assist();"}});
        if (rng.chance(0.4)) {
            c.methods.push_back(
                {"private", "Helper", "mate", {"return new Helper();"}});
            c.methods.push_back({"public", "int", "chainGet",
                                 {"return mate().assist();"}});
        }
        return c;
    }

    ClsSpec controller_class(const RoleSpec& role) {
        ClsSpec c;
        c.name = role.name + "Controller";
        c.fields.push_back("private " + role.name + "Model model;");
        c.methods.push_back({"public", "void", "drive", {"model.task0();"}});
        if (const auto* perm = some_permission(role)) {
            if (rng.chance(0.6)) {
                c.fields.push_back("private " + perm->first + " held;");
                c.methods.push_back({"public", "int", "look",
                                     {"return held." + perm->second +
                                      "();"}});
            }
        }
        return c;
    }

    ClsSpec view_class(const RoleSpec& role, const std::string& name,
                       int index) {
        ClsSpec c;
        c.name = name;
        c.fields.push_back("private " + role.name + "Controller boss;");
        MethodSpec render{"public", "void", "render", {}};
        if (rng.chance(0.7))
            render.body.push_back("boss.drive();");
        c.methods.push_back(std::move(render));
        if (index > 0 && rng.chance(0.5)) {
            const std::string& sibling = role.view_classes[0];
            c.methods.push_back({"public", "void", "mirror",
                                 {sibling + " peer = new " + sibling + "();",
                                  "peer.render();"}});
        }
        if (const auto* perm = some_permission(role)) {
            if (rng.chance(0.4)) {
                c.fields.push_back("private " + perm->first + " shown;");
                c.methods.push_back({"public", "int", "refresh",
                                     {"return shown." + perm->second +
                                      "();"}});
            }
        }
        if (rng.chance(0.3))
            c.methods.push_back(
                {"public", "void", "viaStatic", {"Helper.assist();"}});
        return c;
    }

    ClsSpec session_controller() {
        ClsSpec c;
        c.name = "SessionController";
        c.methods.push_back({"public", "void", "logout", {}});
        for (const auto& role : roles) {
            if (!rng.chance(0.7))
                continue;
            c.methods.push_back(
                {"public", "void", "enter" + role.name,
                 {role.name + "Controller c = new " + role.name +
                      "Controller();",
                  "c.drive();"}});
        }
        return c;
    }

    ClsSpec session_view() {
        ClsSpec c;
        c.name = "SessionViewLogin";
        c.methods.push_back(
            {"public", "void", "show",
             {"SessionController s = new SessionController();",
              "s.logout();"}});
        return c;
    }

    ClsSpec helper_class() {
        ClsSpec c;
        c.name = "Helper";
        c.methods.push_back({"public", "int", "assist", {"return 4;"}});
        c.methods.push_back({"public", "int", "twice", {"return assist();"}});
        return c;
    }

    ClsSpec decoy_class() {
        ClsSpec c;
        c.name = "ModelHelper"; // deliberately model-flavoured, group Other
        c.methods.push_back(
            {"public", "int", "aid",
             {"Helper h = new Helper();", "return h.assist();"}});
        return c;
    }

    RoleSpec* role_with_class(const std::string& suffix) {
        for (auto& role : roles)
            if (cls(role.name + suffix))
                return &role;
        return nullptr;
    }

    void inject() {
        // Try templates in a seeded rotation until one applies.
        int first = rng.range(0, 6);
        for (int step = 0; step < 7; ++step) {
            if (apply_template((first + step) % 7))
                return;
        }
        // Always applicable fallback: break a resource action's visibility.
        apply_template(0);
    }

    bool apply_template(int which) {
        switch (which) {
        case 0: { // non-public action
            ClsSpec* c = cls(resources[0].name);
            if (!c)
                return false;
            c->find(resources[0].actions[0])->vis = "private";
            record("NonPublicAction", c->name);
            return true;
        }
        case 1: { // non-private auxiliary
            ClsSpec* c = cls(resources[0].name);
            if (!c)
                return false;
            c->find("scrub")->vis = "public";
            record("NonPrivateAuxiliary", c->name);
            return true;
        }
        case 2: { // unpermitted action call from a role model
            for (auto& role : roles) {
                ClsSpec* c = cls(role.name + "Model");
                if (!c)
                    continue;
                for (const auto& res : resources) {
                    for (const auto& act : res.actions) {
                        if (role.effective.count({res.name, act}))
                            continue;
                        c->fields.push_back("private " + res.name +
                                            " denied;");
                        c->methods.push_back(
                            {"public", "int", "sneak",
                             {"return denied." + act + "();"}});
                        record("PermissionDenied", c->name);
                        return true;
                    }
                }
            }
            return false;
        }
        case 3: { // cross-role model call from a controller
            if (roles.size() < 2)
                return false;
            ClsSpec* c = cls(roles[0].name + "Controller");
            ClsSpec* foreign_model = cls(roles[1].name + "Model");
            if (!c || !foreign_model)
                return false;
            c->fields.push_back("private " + roles[1].name +
                                "Model foreign;");
            c->methods.push_back(
                {"public", "void", "meddle", {"foreign.task0();"}});
            record("CrossRoleCall", c->name);
            return true;
        }
        case 4: { // forbidden callee group, one of several shapes
            int shape = rng.range(0, 3);
            if (shape == 0) { // role model calls a session class
                if (RoleSpec* role = role_with_class("Model")) {
                    ClsSpec* c = cls(role->name + "Model");
                    c->fields.push_back(
                        "private SessionController sneaky;");
                    c->methods.push_back({"public", "void", "slip",
                                          {"sneaky.logout();"}});
                    record("ForbiddenCalleeGroup", c->name);
                    return true;
                }
                return false;
            }
            if (shape == 1) { // view calls its own role model
                for (auto& role : roles) {
                    if (role.view_classes.empty())
                        continue;
                    ClsSpec* c = cls(role.view_classes[0]);
                    if (!c)
                        continue;
                    c->fields.push_back("private " + role.name +
                                        "Model backdoor;");
                    c->methods.push_back({"public", "void", "poke",
                                          {"backdoor.task0();"}});
                    record("ForbiddenCalleeGroup", c->name);
                    return true;
                }
                return false;
            }
            if (shape == 2) { // plain helper calls a resource action
                ClsSpec* c = cls("Helper");
                if (!c)
                    return false;
                c->fields.push_back("private " + resources[0].name +
                                    " grabbed;");
                c->methods.push_back(
                    {"public", "int", "steal",
                     {"return grabbed." + resources[0].actions[0] +
                      "();"}});
                record("ForbiddenCalleeGroup", c->name);
                return true;
            }
            // session calls a role model
            if (RoleSpec* role = role_with_class("Model")) {
                ClsSpec* c = cls("SessionController");
                if (!c)
                    return false;
                c->fields.push_back("private " + role->name +
                                    "Model grabbedModel;");
                c->methods.push_back({"public", "void", "misuse",
                                      {"grabbedModel.task0();"}});
                record("ForbiddenCalleeGroup", c->name);
                return true;
            }
            return false;
        }
        case 5: { // resource constructed outside role models
            ClsSpec* c = nullptr;
            if (RoleSpec* role = role_with_class("Controller"))
                c = cls(role->name + "Controller");
            if (!c)
                c = cls("Helper");
            if (!c)
                return false;
            c->methods.push_back({"public", "void", "spawn",
                                  {"new " + resources[0].name + "();"}});
            record("ResourceInstantiationOutsideRoleModel", c->name);
            return true;
        }
        case 6: { // unresolved receiver inside a role class
            if (RoleSpec* role = role_with_class("Model")) {
                ClsSpec* c = cls(role->name + "Model");
                c->methods.push_back(
                    {"public", "void", "spooky", {"ghost.poke();"}});
                record("UnresolvedReceiver", c->name);
                return true;
            }
            return false;
        }
        }
        return false;
    }

    void record(const char* kind, const std::string& cls_name) {
        out.should_accept = false;
        out.injected_kind = kind;
        out.injected_class = cls_name;
    }

    GeneratedCase build() {
        design_policy();
        emit_policy_text();
        plan_classes();
        if (cfg.inject_violation)
            inject();
        for (const auto& c : classes)
            out.sources.emplace_back(c.name + ".java", render(c));
        return std::move(out);
    }
};

} // namespace

GeneratedCase generate_case(const GenConfig& config) {
    return Builder(config).build();
}

} // namespace jrbac::oracle
