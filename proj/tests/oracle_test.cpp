#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "jrbac/checker/check.hpp"
#include "jrbac/oracle/generate.hpp"
#include "jrbac/oracle/naive.hpp"
#include "jrbac/oracle/reach.hpp"
#include "support/cases.hpp"
#include "support/helpers.hpp"

using namespace jrbac;
using namespace jrbac::oracle;

TEST_CASE("the naive decision matches the checker on the rule table") {
    auto policy = support::policy_from(support::kCheckPolicy);
    for (const auto& c : support::check_cases()) {
        CAPTURE(c.id);
        auto program = support::program_from(c.sources);
        NaiveResult naive = naive_check(policy, program);
        CHECK(naive.ok == !c.expect_kind.has_value());
        if (c.expect_kind) {
            REQUIRE(naive.findings.size() == 1);
            CHECK(naive.findings[0].class_name == c.expect_class);
            CHECK(naive.findings[0].line == c.expect_line);
            CHECK(naive.findings[0].kind ==
                  std::string(checker::kind_name(*c.expect_kind)));
        }
    }
}

TEST_CASE("naive findings mirror checker errors one for one") {
    auto policy = support::fixture_policy("gp_surgery_bad");
    auto program = support::fixture_program("gp_surgery_bad");

    NaiveResult naive = naive_check(policy, program);
    checker::Verdict verdict = checker::verify_program(program, policy);
    CHECK(naive.ok == verdict.accepted);

    std::multiset<NaiveFinding> from_naive(naive.findings.begin(),
                                           naive.findings.end());
    std::multiset<NaiveFinding> from_checker;
    for (const auto& d : verdict.diagnostics)
        if (d.severity == checker::Severity::Error)
            from_checker.insert({d.class_name, d.line,
                                 std::string(checker::kind_name(d.kind))});
    CHECK(from_naive == from_checker);
}

TEST_CASE("session states cover every role and stay valid") {
    auto policy = support::fixture_policy("gp_surgery");
    auto states = session_states(policy);
    REQUIRE(states.size() == policy.roles.size());
    std::set<std::string> seen;
    for (const auto& s : states) {
        CHECK(s.valid());
        REQUIRE(s.active_role.has_value());
        seen.insert(*s.active_role);
        CHECK(std::find(s.retrieved_roles.begin(), s.retrieved_roles.end(),
                        *s.active_role) != s.retrieved_roles.end());
    }
    CHECK(seen.size() == policy.roles.size());

    SessionState detached;
    detached.active_role = "NHSDoctor";
    CHECK_FALSE(detached.valid());
    CHECK(SessionState{}.valid());
}

TEST_CASE("simulation finds exactly the clinic's reachable accesses") {
    auto policy = support::fixture_policy("gp_surgery");
    auto program = support::fixture_program("gp_surgery");
    auto groups = classify::build_groups(program, policy);

    ReachReport report = simulate_sessions(program, policy, groups);
    CHECK(report.unresolved_edges == 0);

    std::set<std::tuple<std::string, std::string, std::string>> triples;
    for (const auto& a : report.accesses)
        triples.insert({a.role, a.resource, a.action});

    CHECK(triples ==
          std::set<std::tuple<std::string, std::string, std::string>>{
              {"Admin", "Nhspatient", "getFirstName"},
              {"Admin", "Privatepatient", "getFirstName"},
              {"NHSDoctor", "Nhspatient", "getFirstName"},
              {"PrivateDoctor", "Privatepatient", "getFirstName"},
          });

    CHECK(unauthorized_accesses(policy, report).empty());
    CHECK(check_satisfaction(policy, report));
}

TEST_CASE("the leaky clinic yields one unauthorized access with its path") {
    auto policy = support::fixture_policy("gp_surgery_bad");
    auto program = support::fixture_program("gp_surgery_bad");
    auto groups = classify::build_groups(program, policy);

    ReachReport report = simulate_sessions(program, policy, groups);
    auto bad = unauthorized_accesses(policy, report);
    CHECK_FALSE(check_satisfaction(policy, report));
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].role == "NHSDoctor");
    CHECK(bad[0].resource == "Privatepatient");
    CHECK(bad[0].action == "getFirstName");
    CHECK(bad[0].line == 17);
    REQUIRE(bad[0].path.size() >= 2);
    CHECK(bad[0].path.back() ==
          std::pair<std::string, std::string>{"Privatepatient",
                                              "getFirstName"});
}

TEST_CASE("reported paths are real call chains confined to their role") {
    auto policy = support::fixture_policy("gp_surgery");
    auto program = support::fixture_program("gp_surgery");
    auto groups = classify::build_groups(program, policy);

    ReachReport report = simulate_sessions(program, policy, groups);
    REQUIRE_FALSE(report.accesses.empty());

    for (const auto& access : report.accesses) {
        REQUIRE(access.path.size() >= 2);
        // The entry node is a controller or view of the access's role.
        const auto& entry = access.path.front().first;
        auto placement = groups.placement(entry);
        CHECK((placement.group == classify::Group::RoleController ||
               placement.group == classify::Group::RoleView));
        CHECK(placement.role == access.role);

        // Interior nodes belong to the role's classes; each consecutive pair
        // is an actual call site in the program.
        for (std::size_t i = 0; i + 1 < access.path.size(); ++i) {
            const auto& [cls, method] = access.path[i];
            const auto& [next_cls, next_method] = access.path[i + 1];
            auto role_set = classify::role_classes(groups, policy, access.role);
            CHECK(role_set.count(cls));

            const frontend::ClassModel* model = program.find(cls);
            REQUIRE(model != nullptr);
            const frontend::MethodModel* m = nullptr;
            for (const auto& cand : model->methods)
                if (cand.name == method)
                    m = &cand;
            REQUIRE(m != nullptr);
            bool edge = false;
            for (const auto& call : m->calls)
                edge = edge || (call.called_class == next_cls &&
                                call.called_method == next_method);
            CHECK(edge);
        }
    }
}

TEST_CASE("generated positives are accepted and parse cleanly") {
    for (unsigned seed = 100; seed < 130; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        auto generated = generate_case(cfg);
        CAPTURE(seed);
        CHECK(generated.should_accept);

        auto policy = jpol::build_tables(jpol::parse_policy(generated.policy_text));
        auto program = frontend::parse_sources(generated.sources);
        CHECK(checker::verify_program(program, policy).accepted);
        CHECK(naive_ok(policy, program));
    }
}

TEST_CASE("generated negatives carry their advertised violation") {
    for (unsigned seed = 200; seed < 230; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.inject_violation = true;
        auto generated = generate_case(cfg);
        CAPTURE(seed);
        CHECK_FALSE(generated.should_accept);
        CHECK_FALSE(generated.injected_kind.empty());

        auto policy = jpol::build_tables(jpol::parse_policy(generated.policy_text));
        auto program = frontend::parse_sources(generated.sources);
        checker::Verdict v = checker::verify_program(program, policy);
        CHECK_FALSE(v.accepted);
        bool matching = false;
        for (const auto& d : v.diagnostics)
            matching = matching ||
                       (std::string(checker::kind_name(d.kind)) ==
                            generated.injected_kind &&
                        d.class_name == generated.injected_class);
        CHECK(matching);
        CHECK_FALSE(naive_ok(policy, program));
    }
}

TEST_CASE("generation is deterministic in the seed") {
    GenConfig cfg;
    cfg.seed = 424242;
    cfg.inject_violation = true;
    auto a = generate_case(cfg);
    auto b = generate_case(cfg);
    CHECK(a.policy_text == b.policy_text);
    CHECK(a.sources == b.sources);
    CHECK(a.injected_kind == b.injected_kind);

    cfg.seed = 424243;
    auto c = generate_case(cfg);
    CHECK((a.policy_text != c.policy_text || a.sources != c.sources));
}

TEST_CASE("accepted generated programs have no unauthorized reachable access") {
    for (unsigned seed = 300; seed < 330; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        auto generated = generate_case(cfg);
        auto policy = jpol::build_tables(jpol::parse_policy(generated.policy_text));
        auto program = frontend::parse_sources(generated.sources);
        REQUIRE(checker::verify_program(program, policy).accepted);

        auto groups = classify::build_groups(program, policy);
        ReachReport report = simulate_sessions(program, policy, groups);
        CAPTURE(seed);
        CHECK(unauthorized_accesses(policy, report).empty());
        CHECK(check_satisfaction(policy, report));
    }
}
