#pragma once

// Built-in LTL-to-automaton translation: a set-of-formulas tableau producing
// a generalized Buchi automaton with one acceptance set per until-type
// subformula, degeneralized to a single state-based Buchi set.

#include <vector>

#include "bosy/automaton.hpp"
#include "bosy/ltl.hpp"
#include "bosy/spec.hpp"

namespace bosy {

struct Nba {
    int num_states = 0;
    int initial = 0;
    std::vector<AutomatonEdge> edges;
    std::vector<char> accepting;
    std::vector<std::string> atoms;
};

// f must be in negation normal form. The resulting automaton accepts exactly
// the omega-words satisfying f.
Nba ltl_to_nba(const LtlPtr& f);

// UCW for the problem's combined formula: translate the negation and
// reinterpret the Buchi acceptance set as the rejecting set. No optimization
// passes are applied here.
UniversalCoBuchi build_ucw(const SynthesisProblem& problem);

// As build_ucw, but with the NBA supplied by the caller (e.g. parsed from an
// external translator's HOA output for the negated formula).
UniversalCoBuchi ucw_from_nba(const Nba& nba);

}  // namespace bosy
