#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "jrbac/checker/check.hpp"
#include "jrbac/frontend/program.hpp"
#include "jrbac/jpol/parse.hpp"
#include "jrbac/oracle/generate.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compare serial and parallel verification on a generated "
                 "program"};
    int classes = 500;
    int reps = 5;
    std::uint64_t seed = 2024;
    app.add_option("--classes", classes, "Approximate program size");
    app.add_option("--reps", reps, "Repetitions per mode");
    app.add_option("--seed", seed, "Generator seed");
    CLI11_PARSE(app, argc, argv);

    jrbac::oracle::GenConfig cfg;
    cfg.seed = seed;
    cfg.exact_sizes = true;
    cfg.max_resources = 8;
    cfg.max_actions = 4;
    cfg.max_roles = std::max(1, (classes - 12) / 4);
    cfg.max_classes = classes;
    cfg.edge_density = 0.3;
    jrbac::oracle::GeneratedCase gen = jrbac::oracle::generate_case(cfg);

    auto t0 = Clock::now();
    jrbac::jpol::Policy policy =
        jrbac::jpol::build_tables(jrbac::jpol::parse_policy(gen.policy_text));
    jrbac::frontend::ProgramModel program =
        jrbac::frontend::parse_sources(gen.sources);
    double parse_ms = ms_since(t0);

    std::cout << "classes: " << program.classes.size()
              << "  parse+resolve: " << parse_ms << " ms\n";

    auto time_mode = [&](bool parallel) {
        jrbac::checker::CheckOptions opts;
        opts.parallel = parallel;
        double best = 1e18;
        jrbac::checker::Verdict verdict;
        for (int i = 0; i < reps; ++i) {
            auto t = Clock::now();
            verdict = jrbac::checker::verify_program(program, policy, opts);
            best = std::min(best, ms_since(t));
        }
        std::cout << (parallel ? "parallel" : "serial  ") << ": " << best
                  << " ms  (accepted=" << verdict.accepted
                  << ", diagnostics=" << verdict.diagnostics.size()
                  << ", calls=" << verdict.calls_examined << ")\n";
        return verdict;
    };

    jrbac::checker::Verdict serial = time_mode(false);
    jrbac::checker::Verdict parallel = time_mode(true);
    if (serial.diagnostics != parallel.diagnostics ||
        serial.accepted != parallel.accepted) {
        std::cerr << "serial and parallel verdicts differ\n";
        return 1;
    }
    return 0;
}
