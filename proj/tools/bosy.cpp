// Command-line entry point: decide realizability of a JSON LTL specification
// by bounded synthesis and optionally emit the synthesized implementation.
//
// Exit status: 0 realizable, 1 unrealizable, 2 unknown, 3 usage error,
// 4 pipeline error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bosy/emit.hpp"
#include "bosy/error.hpp"
#include "bosy/search.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw bosy::Error("cannot open specification file " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::optional<std::string> env_default(const char* name) {
    const char* value = std::getenv(name);
    if (value && *value) return std::string(value);
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded synthesis from LTL specifications"};

    std::string spec_path;
    std::string backend = "qbf";
    std::string strategy_name = "exponential";
    std::string player = "both";
    std::string target = "aiger";
    std::string optimize = "all";
    bool synthesize = false;
    int min_bound = 1;
    int max_bound = 0;
    std::string external_sat, external_qbf, translator;

    app.add_option("spec", spec_path, "specification file (JSON), or - for stdin")->required();
    app.add_option("--backend", backend, "constraint backend")
        ->check(CLI::IsMember({"sat", "qbf"}))
        ->capture_default_str();
    app.add_option("--strategy", strategy_name, "bound search strategy")
        ->check(CLI::IsMember({"linear", "exponential"}))
        ->capture_default_str();
    app.add_option("--player", player, "which player to search for")
        ->check(CLI::IsMember({"system", "environment", "both"}))
        ->capture_default_str();
    app.add_flag("--synthesize", synthesize, "emit the synthesized implementation");
    app.add_option("--target", target, "output format for --synthesize")
        ->check(CLI::IsMember({"aiger", "smv", "dot"}))
        ->capture_default_str();
    app.add_option("--min-bound", min_bound, "initial bound")->check(CLI::PositiveNumber);
    app.add_option("--max-bound", max_bound, "bound cap (0 = unbounded)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--external-sat", external_sat,
                   "external DIMACS solver command ({} = instance path)");
    app.add_option("--external-qbf", external_qbf,
                   "external QDIMACS solver command ({} = instance path)");
    app.add_option("--translator", translator,
                   "external LTL-to-HOA translator command ({} = formula)");
    app.add_option("--optimize", optimize, "automaton optimizations")
        ->check(CLI::IsMember({"none", "all"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 3;
    }

    try {
        const bosy::SynthesisProblem problem = bosy::parse_spec(read_input(spec_path));

        bosy::SearchStrategy strategy;
        strategy.kind = strategy_name == "linear" ? bosy::StrategyKind::Linear
                                                  : bosy::StrategyKind::Exponential;
        strategy.initial = min_bound;
        if (max_bound > 0) strategy.cap = max_bound;

        bosy::PipelineOptions options;
        options.backend = backend == "sat" ? bosy::Backend::Sat : bosy::Backend::Qbf;
        options.optimize_demote = options.optimize_scc = optimize == "all";
        options.synthesize = synthesize;
        if (!external_sat.empty()) options.external_sat = external_sat;
        else options.external_sat = env_default("BOSY_SAT_CMD");
        if (!external_qbf.empty()) options.external_qbf = external_qbf;
        else options.external_qbf = env_default("BOSY_QBF_CMD");
        if (!translator.empty()) options.translator = translator;
        else options.translator = env_default("BOSY_TRANSLATOR_CMD");

        bosy::Verdict verdict;
        if (player == "both") {
            verdict = bosy::run_dual(problem, strategy, options);
        } else if (player == "system") {
            verdict = bosy::run_single(problem, strategy, options);
        } else {
            verdict = bosy::run_single(bosy::dualize(problem), strategy, options);
        }

        switch (verdict.outcome) {
            case bosy::Outcome::Realizable: std::cout << "REALIZABLE\n"; break;
            case bosy::Outcome::Unrealizable: std::cout << "UNREALIZABLE\n"; break;
            case bosy::Outcome::Unknown: std::cout << "UNKNOWN\n"; break;
        }
        if (verdict.outcome != bosy::Outcome::Unknown) {
            std::cerr << "bound: " << verdict.bound << "\n";
            if (synthesize && verdict.machine) {
                if (target == "aiger") std::cout << bosy::emit_aiger(*verdict.machine);
                else if (target == "smv") std::cout << bosy::emit_smv(*verdict.machine);
                else std::cout << bosy::emit_dot(*verdict.machine);
            }
        }
        switch (verdict.outcome) {
            case bosy::Outcome::Realizable: return 0;
            case bosy::Outcome::Unrealizable: return 1;
            case bosy::Outcome::Unknown: return 2;
        }
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
