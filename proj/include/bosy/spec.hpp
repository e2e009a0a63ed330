#pragma once

// The JSON specification format and the synthesis problem it denotes.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bosy/ltl.hpp"

namespace bosy {

enum class Semantics : std::uint8_t { Mealy, Moore };
enum class Player : std::uint8_t { System, Environment };

const char* to_string(Semantics s) noexcept;

struct SynthesisProblem {
    std::vector<std::string> inputs;   // signals read by the implementation
    std::vector<std::string> outputs;  // signals produced by the implementation
    Semantics semantics = Semantics::Mealy;
    std::vector<LtlPtr> assumptions;
    std::vector<LtlPtr> guarantees;
    Player player = Player::System;
};

// Parse the JSON input document: object with keys "semantics"
// ("mealy"|"moore"), "inputs"/"outputs" (arrays of identifiers) and
// "assumptions"/"guarantees" (arrays of LTL strings; assumptions may be
// omitted). Every atom of every formula must be a declared signal.
SynthesisProblem parse_spec(std::string_view text);

// (/\ assumptions) -> (/\ guarantees); an empty conjunction is true and an
// empty assumption list yields the guarantee conjunction directly.
LtlPtr combine(const SynthesisProblem& problem);

// The environment player's problem: negated combined formula, signal roles
// swapped (the environment controls the system's inputs and observes its
// outputs) and the semantics flipped between Mealy and Moore.
SynthesisProblem dualize(const SynthesisProblem& problem);

}  // namespace bosy
