#pragma once

// The common representation of synthesized implementations: a finite-state
// transition system with guard formulas over the inputs and one output
// function per output signal. All emitters and the verifier consume this.

#include <string>
#include <vector>

#include "bosy/automaton.hpp"
#include "bosy/prop.hpp"
#include "bosy/spec.hpp"

namespace bosy {

struct Machine {
    Semantics semantics = Semantics::Mealy;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    int num_states = 0;  // initial state is 0

    // guards[s][t]: condition on the current input for the transition s -> t
    std::vector<std::vector<PropPtr>> guards;
    // output_fn[o][s]: value of output o in state s as a formula over the
    // inputs (a constant under Moore semantics)
    std::vector<std::vector<PropPtr>> output_fn;
};

// Input valuations as bitmasks over the declared input order.
bool eval_on_inputs(const PropPtr& p, const std::vector<std::string>& inputs,
                    std::uint32_t valuation);

// Totality: for every state and input valuation exactly one guard holds;
// under Moore semantics the outputs must not mention input atoms.
bool check_total_deterministic(const Machine& m);

// Product-graph model checking against a universal co-Buchi automaton: no
// forbidden-entry edge (into a demoted safety state) may ever be enabled and
// no reachable product cycle may contain a rejecting automaton state.
bool model_check(const Machine& m, const UniversalCoBuchi& a);

}  // namespace bosy
