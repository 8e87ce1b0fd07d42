#include <doctest.h>

#include <string>

#include "jrbac/jpol/parse.hpp"
#include "jrbac/jpol/policy.hpp"
#include "support/helpers.hpp"

using namespace jrbac::jpol;
using support::snip;

namespace {

const char* kClinic = R"(
Resource nhspatient = new Resource(`Nhspatient');
Resource privatepatient = new Resource(`Privatepatient');
nhspatient.addAction(getFirstName);
privatepatient.addAction(getFirstName);
Role nhsdoctor = new Role(`NHSDoctor');
Role privatedoctor = new Role(`PrivateDoctor');
Role admin = new Role(`Admin');
nhsdoctor.addPermission(`Nhspatient', getFirstName);
privatedoctor.addPermission(`Privatepatient', getFirstName);
admin.addPermission(`Nhspatient', getFirstName);
admin.addPermission(`Privatepatient', getFirstName);
)";

} // namespace

TEST_CASE("clinic policy parses into eleven statements plus tables") {
    PolicyAst ast = parse_policy(snip(kClinic));
    REQUIRE(ast.statements.size() == 11);
    CHECK(std::get<DecRes>(ast.statements[0].stmt) ==
          DecRes{"nhspatient", "Nhspatient"});
    CHECK(std::get<AddActRes>(ast.statements[2].stmt) ==
          AddActRes{"nhspatient", "getFirstName"});
    CHECK(std::get<DecRole>(ast.statements[4].stmt) ==
          DecRole{"nhsdoctor", "NHSDoctor"});
    CHECK(std::get<AddPermRole>(ast.statements[7].stmt) ==
          AddPermRole{"nhsdoctor", "Nhspatient", "getFirstName"});
    CHECK(ast.statements[0].line == 1);
    CHECK(ast.statements[10].line == 11);

    Policy policy = build_tables(ast);
    REQUIRE(policy.resources.size() == 2);
    REQUIRE(policy.roles.size() == 3);
    CHECK(policy.resources.at("Nhspatient").actions ==
          std::set<std::string>{"getFirstName"});
    CHECK(policy.roles.at("NHSDoctor").effective ==
          std::set<Permission>{{"Nhspatient", "getFirstName"}});
    CHECK(policy.roles.at("PrivateDoctor").effective ==
          std::set<Permission>{{"Privatepatient", "getFirstName"}});
    CHECK(policy.roles.at("Admin").effective ==
          std::set<Permission>{{"Nhspatient", "getFirstName"},
                               {"Privatepatient", "getFirstName"}});
    CHECK_FALSE(policy.roles.at("Admin").subsumes.has_value());
}

TEST_CASE("quoting styles and comments are interchangeable") {
    const char* mixed = R"(
// resources first
Resource r = new Resource('Vault');   // trailing note
r.addAction(open);
Role a = new Role(`Keeper');
a.addPermission(Vault, open);
a.addPermission('Vault', `open');
)";
    PolicyAst ast = parse_policy(snip(mixed));
    REQUIRE(ast.statements.size() == 5);
    CHECK(std::get<DecRes>(ast.statements[0].stmt).resource_name == "Vault");
    CHECK(std::get<AddPermRole>(ast.statements[3].stmt) ==
          std::get<AddPermRole>(ast.statements[4].stmt));

    Policy policy = build_tables(ast);
    CHECK(policy.roles.at("Keeper").declared.size() == 1);
}

TEST_CASE("canonical text round-trips") {
    PolicyAst ast = parse_policy(snip(kClinic));
    std::string text = to_text(ast);
    PolicyAst again = parse_policy(text);
    CHECK(ast == again);
    CHECK(to_text(again) == text);
}

TEST_CASE("subsumption may reference a later declaration") {
    const char* text = R"(
Resource r = new Resource('Store');
r.addAction(read);
r.addAction(write);
Role senior = new Role('Senior') subsumes junior;
Role junior = new Role('Junior');
junior.addPermission(Store, read);
senior.addPermission(Store, write);
)";
    Policy policy = support::policy_from(text);
    CHECK(policy.roles.at("Senior").subsumes == std::optional<std::string>("Junior"));
    CHECK(policy.roles.at("Senior").effective ==
          std::set<Permission>{{"Store", "read"}, {"Store", "write"}});
    CHECK(policy.roles.at("Junior").effective ==
          std::set<Permission>{{"Store", "read"}});
}

TEST_CASE("three level chains flatten transitively") {
    const char* text = R"(
Resource r = new Resource('Store');
r.addAction(read);
r.addAction(write);
r.addAction(purge);
Role a = new Role('Clerk');
a.addPermission(Store, read);
Role b = new Role('Keeper') subsumes a;
b.addPermission(Store, write);
Role c = new Role('Chief') subsumes b;
c.addPermission(Store, purge);
)";
    Policy policy = support::policy_from(text);
    CHECK(policy.roles.at("Chief").effective ==
          std::set<Permission>{
              {"Store", "read"}, {"Store", "write"}, {"Store", "purge"}});
    CHECK(is_permitted(policy, "Chief", "Store", "read"));
    CHECK(is_permitted(policy, "Keeper", "Store", "read"));
    CHECK_FALSE(is_permitted(policy, "Clerk", "Store", "write"));
}

TEST_CASE("repeated grants are idempotent") {
    const char* text = R"(
Resource r = new Resource('Store');
r.addAction(read);
r.addAction(read);
Role a = new Role('Clerk');
a.addPermission(Store, read);
a.addPermission(Store, read);
)";
    Policy policy = support::policy_from(text);
    CHECK(policy.resources.at("Store").actions.size() == 1);
    CHECK(policy.roles.at("Clerk").declared.size() == 1);
}

TEST_CASE("is_permitted is closed world") {
    Policy policy = support::policy_from(R"(
Resource r = new Resource('Store');
r.addAction(read);
Role a = new Role('Clerk');
a.addPermission(Store, read);
)");
    CHECK(is_permitted(policy, "Clerk", "Store", "read"));
    CHECK_FALSE(is_permitted(policy, "Clerk", "Store", "write"));
    CHECK_FALSE(is_permitted(policy, "Clerk", "Vault", "read"));
    CHECK_FALSE(is_permitted(policy, "Nobody", "Store", "read"));
    CHECK_THROWS_AS((void)effective_permissions(policy, "Nobody"),
                    UnknownRoleError);
    CHECK(effective_permissions(policy, "Clerk").size() == 1);
}

TEST_CASE("parse errors carry position") {
    auto expect_parse_error = [](const char* text, int line) {
        try {
            (void)parse_policy(snip(text));
            FAIL_CHECK("expected a parse error");
        } catch (const PolicyParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() >= 1);
            CHECK_FALSE(std::string(e.what()).empty());
        }
    };

    expect_parse_error("", 1);
    expect_parse_error("// only a comment\n", 2);
    expect_parse_error("Resource r = new Resource('Store')\n", 2);
    expect_parse_error("Resource r = new Resource('Store;\n", 1);
    expect_parse_error("Resource r = Resource('Store');\n", 1);
    expect_parse_error("r.removeAction(read);\n", 1);
    expect_parse_error("Role a = new Role('A') extends b;\n", 1);
    expect_parse_error("Resource r = new Resource('Store'); #\n", 1);
    expect_parse_error(R"(
Resource r = new Resource('Store');
r.addAction();
)",
                       2);
}

TEST_CASE("semantic errors name the offending reference") {
    auto expect_semantic_error = [](const char* text,
                                    const std::string& fragment) {
        try {
            (void)support::policy_from(text);
            FAIL_CHECK("expected a table building error");
        } catch (const PolicySemanticError& e) {
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
            CHECK(e.line() >= 1);
        }
    };

    expect_semantic_error(R"(
Resource r = new Resource('Store');
Resource r2 = new Resource('Store');
)",
                          "duplicate declaration of name 'Store'");
    expect_semantic_error(R"(
Resource r = new Resource('Store');
Role r = new Role('Clerk');
)",
                          "duplicate declaration of id 'r'");
    expect_semantic_error(R"(
Resource r = new Resource('Store');
q.addAction(read);
)",
                          "undeclared resource id 'q'");
    expect_semantic_error(R"(
Resource r = new Resource('Store');
r.addAction(read);
q.addPermission(Store, read);
)",
                          "undeclared role id 'q'");
    expect_semantic_error(R"(
Resource r = new Resource('Store');
r.addAction(read);
Role a = new Role('Clerk');
a.addPermission(Vault, read);
)",
                          "unknown resource 'Vault'");
    expect_semantic_error(R"(
Resource r = new Resource('Store');
r.addAction(read);
Role a = new Role('Clerk');
a.addPermission(Store, write);
)",
                          "action 'write'");
    expect_semantic_error(R"(
Role a = new Role('Clerk') subsumes b;
)",
                          "undeclared role id 'b'");
    expect_semantic_error(R"(
Role a = new Role('Clerk') subsumes b;
Role b = new Role('Chief') subsumes a;
)",
                          "subsumption cycle");
    expect_semantic_error(R"(
Role a = new Role('Clerk') subsumes a;
)",
                          "subsumption cycle");
}
