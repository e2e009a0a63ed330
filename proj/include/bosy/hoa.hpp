#pragma once

// Parser for the HOA v1 subset the tool interoperates with: state-based
// single-set Buchi acceptance, explicit labeled edges, one initial state.
// The acceptance set is read as the rejecting set of the UCW (the external
// translator is fed the negated formula).

#include <optional>
#include <string_view>
#include <vector>

#include "bosy/automaton.hpp"

namespace bosy {

// valid_atoms, when given, restricts the AP header to declared signals.
UniversalCoBuchi parse_hoa(std::string_view text,
                           const std::optional<std::vector<std::string>>& valid_atoms = std::nullopt);

}  // namespace bosy
