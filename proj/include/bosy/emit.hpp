#pragma once

// Machine serializers: ASCII AIGER with binary state encoding, SMV, DOT.

#include <string>

#include "bosy/machine.hpp"

namespace bosy {

// ceil(log2 n) latches hold the state in binary; next-state and output
// functions are synthesized as an and-inverter graph with structural hashing.
// Unreachable latch codes fall back to state 0's behavior.
std::string emit_aiger(const Machine& m);

std::string emit_smv(const Machine& m);

std::string emit_dot(const Machine& m);

}  // namespace bosy
