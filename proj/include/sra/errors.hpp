#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sra {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text input rejected; `line` is 1-based.
struct ParseError : Error {
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line(line) {}
    std::size_t line;
};

/// A simple-word enumeration hit its configured word cap.
struct CapExceededError : Error {
    explicit CapExceededError(std::size_t limit)
        : Error("simple-word enumeration exceeded the cap of " + std::to_string(limit) + " words"),
          limit(limit) {}
    std::size_t limit;
};

/// Exhaustive subset search refused: too many states.
struct StateLimitError : Error {
    StateLimitError(std::size_t states, std::size_t limit)
        : Error("automaton has " + std::to_string(states) + " states, above the enumeration limit of " +
                std::to_string(limit)),
          states(states), limit(limit) {}
    std::size_t states;
    std::size_t limit;
};

struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace sra
