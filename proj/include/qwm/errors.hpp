#pragma once

#include <stdexcept>
#include <string>

namespace qwm {

/// Requested problem size exceeds a configured cap (qubits, vertices, ...).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Instance has max_cut == min_cut; approximation ratios are undefined.
struct DegenerateInstanceError : std::runtime_error {
    explicit DegenerateInstanceError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed instance file. `line` is 1-based; 0 means "not line-specific".
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line(line) {}
    int line;
};

}  // namespace qwm
