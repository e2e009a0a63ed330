#pragma once

// The bound-increment loop and the dual race between the realizability
// search (system player) and the counterexample search (environment player).

#include <cstdint>
#include <optional>
#include <string>

#include "bosy/automaton.hpp"
#include "bosy/encode.hpp"
#include "bosy/machine.hpp"
#include "bosy/spec.hpp"

namespace bosy {

enum class StrategyKind : std::uint8_t { Linear, Exponential };

struct SearchStrategy {
    StrategyKind kind = StrategyKind::Exponential;
    int initial = 1;
    std::optional<int> cap;  // give up beyond this bound

    int next(int bound) const { return kind == StrategyKind::Linear ? bound + 1 : 2 * bound; }
};

enum class Outcome : std::uint8_t { Realizable, Unrealizable, Unknown };

struct Verdict {
    Outcome outcome = Outcome::Unknown;
    std::optional<Machine> machine;  // system machine if realizable, environment
                                     // counter-machine if unrealizable
    int bound = 0;                   // first satisfiable bound
};

struct PipelineOptions {
    Backend backend = Backend::Qbf;
    bool optimize_demote = true;
    bool optimize_scc = true;
    bool synthesize = true;  // decode and verify the machine at the first SAT bound
    std::optional<std::string> external_sat;
    std::optional<std::string> external_qbf;
    std::optional<std::string> translator;  // external HOA producer for the negated formula
};

// LTL -> UCW with the configured translator and optimization passes applied.
UniversalCoBuchi build_spec_automaton(const SynthesisProblem& problem,
                                      const PipelineOptions& options);

struct BoundResult {
    bool sat = false;
    std::optional<Machine> machine;
};

// Encode and decide one bound; with synthesize set, the decoded machine is
// model-checked against the automaton before it is returned.
BoundResult solve_bound(const UniversalCoBuchi& automaton, const SynthesisProblem& problem,
                        int bound, const PipelineOptions& options);

// Iterate bounds for one player; Realizable means this player's problem is.
Verdict run_single(const SynthesisProblem& problem, const SearchStrategy& strategy,
                   const PipelineOptions& options);

// Race the system search against the environment counterexample search
// (strict alternation, one bound per side per turn); the outcome is reported
// from the system's perspective.
Verdict run_dual(const SynthesisProblem& problem, const SearchStrategy& strategy,
                 const PipelineOptions& options);

}  // namespace bosy
