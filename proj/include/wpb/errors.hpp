#pragma once

#include <stdexcept>
#include <string>

namespace wpb {

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A vanishing factor in a denominator position (named where possible).
struct PoleError : EngineError {
    using EngineError::EngineError;
};

// An exponent that cannot be represented on the working lattice, or a
// monomial square root that does not exist over the rationals.
struct LatticeError : EngineError {
    using EngineError::EngineError;
};

struct ParseError : EngineError {
    ParseError(const std::string& msg, int line, int col)
        : EngineError(msg + " at line " + std::to_string(line) + ", column " +
                      std::to_string(col)),
          line(line),
          col(col) {}
    int line;
    int col;
};

struct ConfigError : EngineError {
    using EngineError::EngineError;
};

}  // namespace wpb
