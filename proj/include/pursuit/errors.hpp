#pragma once

// Error types shared across the library. The CLI maps these onto exit codes.

#include <stdexcept>
#include <string>

namespace pursuit {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller passed something the operation cannot accept (bad parameters,
// disconnected graph where a connected one is required, ...).
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

// Malformed input file; carries the 1-based line number.
struct ParseError : Error {
    ParseError(int line_no, const std::string& msg)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

// A configured budget (state space, search nodes, pool size) was exceeded.
// Distinct from a proven negative result.
struct ResourceExhausted : Error {
    explicit ResourceExhausted(const std::string& msg) : Error(msg) {}
};

// A search over k exhausted its cap without finding a winning k.
struct BoundNotFound : Error {
    explicit BoundNotFound(const std::string& msg) : Error(msg) {}
};

// A candidate pool cannot cover the requested vertex set.
struct UncoverableError : Error {
    explicit UncoverableError(const std::string& msg) : Error(msg) {}
};

// A mathematical guarantee was violated at runtime. Must never happen.
struct SoundnessError : Error {
    explicit SoundnessError(const std::string& msg) : Error(msg) {}
};

// Internal consistency failure (e.g. a constructed map fails verification).
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

// A controller or pipeline was wired up with incompatible pieces.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace pursuit
