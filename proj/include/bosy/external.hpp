#pragma once

// External solver and translator subprocess support. Solvers follow the
// SAT-competition convention: exit status 10 = satisfiable (assignment on
// 'v'/'V' lines), 20 = unsatisfiable; anything else is an error.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace bosy {

enum class SolverFormat { Dimacs, Qdimacs };

struct ExternalResult {
    bool sat = false;
    std::vector<int> literals;  // assignment literals (sat only)
};

// Writes the instance to a temporary file, substitutes its path for "{}" in
// the command template (appending the path when no placeholder is present)
// and runs the command through the shell.
ExternalResult solve_external(const std::string& command_template, const std::string& instance,
                              SolverFormat format,
                              std::optional<std::chrono::milliseconds> timeout = std::nullopt);

struct RunResult {
    int exit_status = -1;
    std::string output;
    bool timed_out = false;
};

RunResult run_shell_capture(const std::string& command,
                            std::optional<std::chrono::milliseconds> timeout = std::nullopt);

std::string shell_quote(const std::string& s);

}  // namespace bosy
