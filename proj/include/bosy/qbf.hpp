#pragma once

// Exists-forall-exists solving by universal expansion: the matrix is
// instantiated once per universal valuation with fresh inner variables and
// the conjunction is handed to the CDCL core. The outer assignment plus the
// per-valuation inner assignments are exactly the two-step extraction data
// (top-level assignment and Skolem-function tables).

#include <vector>

#include "bosy/logic.hpp"
#include "bosy/sat.hpp"

namespace bosy {

struct QbfResult {
    bool sat = false;
    Model outer;                  // assignment of the outer existential block
    std::vector<int> universals;  // universal variables in block order
    std::vector<Model> inner;     // Skolem tables: one assignment of the inner
                                  // block per universal valuation (bit k of the
                                  // index = value of universals[k])
};

// Prefix shape must normalize to exists-forall-exists (any block may be
// empty); at most 16 universal variables.
QbfResult expand_universals(const QuantifiedProblem& problem, VarRegistry& registry);

}  // namespace bosy
