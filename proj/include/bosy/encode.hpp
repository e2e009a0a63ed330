#pragma once

// Bounded-synthesis constraint systems: the propositional (SAT) encoding with
// inputs unrolled to concrete valuations and the input-symbolic (QBF)
// encoding with universally quantified inputs. Both assert the existence of a
// machine with n states together with a valid co-Buchi annotation
// (reachability marker plus bounded counters), and both decode solver models
// back into machines.

#include <cstdint>
#include <optional>
#include <vector>

#include "bosy/automaton.hpp"
#include "bosy/logic.hpp"
#include "bosy/machine.hpp"
#include "bosy/qbf.hpp"
#include "bosy/sat.hpp"
#include "bosy/spec.hpp"

namespace bosy {

enum class Backend : std::uint8_t { Sat, Qbf };

struct EncodingContext {
    const UniversalCoBuchi* automaton = nullptr;
    int bound = 0;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    Semantics semantics = Semantics::Mealy;
    Backend backend = Backend::Sat;

    VarRegistry registry;

    // annotation: reach[s][q] (0 for demoted safety states), counter[s][q]
    // (empty when r(q) == 0 or the state is demoted); capacity n * r(q)
    std::vector<std::vector<int>> reach;
    std::vector<std::vector<BoundedNat>> counter;

    // transition function: one successor per concrete input valuation (SAT)
    // or one symbolic successor per state (QBF)
    std::vector<std::vector<BoundedNat>> succ_concrete;  // [s][i]
    std::vector<BoundedNat> succ_symbolic;               // [s]

    // outputs: out_concrete[o][s][i] for Mealy/SAT; out_state[o][s] otherwise
    // (Moore outputs never depend on the input valuation)
    std::vector<std::vector<std::vector<int>>> out_concrete;
    std::vector<std::vector<int>> out_state;

    std::vector<int> input_vars;  // universally quantified inputs (QBF)

    int num_annotation_vars = 0;
    int num_transition_output_vars = 0;
};

EncodingContext make_context(const UniversalCoBuchi& automaton, int bound,
                             const std::vector<std::string>& inputs,
                             const std::vector<std::string>& outputs, Semantics semantics,
                             Backend backend);

// Quantifier-free system; satisfiable iff a realizing machine with <= n
// reachable states exists. Requires |inputs| <= 16.
TermPtr encode_propositional(EncodingContext& ctx);

// Exists(annotation, Moore outputs) Forall(inputs) Exists(successors, Mealy
// outputs) with a single constraint copy instead of the 2^|I| unrolling.
QuantifiedProblem encode_input_symbolic(EncodingContext& ctx);

Machine decode_machine(const EncodingContext& ctx, const Model& model);
Machine decode_machine(const EncodingContext& ctx, const QbfResult& result);

}  // namespace bosy
