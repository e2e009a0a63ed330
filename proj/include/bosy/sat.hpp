#pragma once

// Internal CDCL solver: two-watched-literal propagation, first-UIP clause
// learning, activity-based branching with deterministic tie-breaks, Luby
// restarts and periodic learnt-clause reduction.

#include <cstdint>
#include <vector>

#include "bosy/logic.hpp"

namespace bosy {

// Assignment indexed by variable (1-based); 0 = unassigned.
class Model {
public:
    Model() = default;
    explicit Model(int num_vars) : values_(std::size_t(num_vars) + 1, 0) {}

    int num_vars() const noexcept { return int(values_.size()) - 1; }

    // -1 false, 0 unassigned, +1 true
    int value(int var) const {
        if (var <= 0 || var >= int(values_.size())) return 0;
        return values_[std::size_t(var)];
    }

    void set(int var, bool v) { values_.at(std::size_t(var)) = v ? 1 : -1; }

    bool empty() const noexcept { return values_.size() <= 1; }

private:
    std::vector<std::int8_t> values_;
};

struct SolveResult {
    bool sat = false;
    Model model;  // full assignment when sat
};

SolveResult solve_cnf(const Cnf& cnf);

}  // namespace bosy
