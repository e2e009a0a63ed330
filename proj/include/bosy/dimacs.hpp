#pragma once

// DIMACS / QDIMACS writers (byte-stable given a fixed registry) and the
// parsers used by the bundled solver tools and the external-solver adapter.

#include <string>
#include <string_view>
#include <vector>

#include "bosy/logic.hpp"

namespace bosy {

std::string emit_dimacs(const Cnf& cnf);
std::string emit_qdimacs(const QuantifiedCnf& problem);

Cnf parse_dimacs(std::string_view text);

struct ParsedQdimacs {
    Cnf matrix;
    std::vector<QuantBlock> prefix;
};

ParsedQdimacs parse_qdimacs(std::string_view text);

// Literals from solver assignment lines: lines starting with 'v' or 'V',
// whitespace-separated integers, terminating 0s ignored.
std::vector<int> parse_assignment_lines(std::string_view output);

}  // namespace bosy
