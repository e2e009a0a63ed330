#pragma once

#include <stdexcept>
#include <string>

namespace bosy {

// Base class for everything the pipeline can throw; the CLI maps these to
// exit status 4 with the message on stderr.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Lexing/parsing failure with a byte offset into the offending text.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace bosy
