#pragma once

#include <stdexcept>
#include <string>

namespace pgr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed graph construction (bad port, double edge, dangling reference).
struct GraphError : Error {
    using Error::Error;
};

// A morphism no longer describes a subgraph of the host it is applied to.
struct VerificationError : Error {
    using Error::Error;
};

// Scope annotations disagree with the wiring around an implication node.
struct IntegrityError : Error {
    using Error::Error;
};

struct ProofError : Error {
    using Error::Error;
};

struct LinearityError : Error {
    using Error::Error;
};

// A redex id that does not name an available redex of the current graph.
struct RedexError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line(line), column(column) {}
    int line;
    int column;
};

}  // namespace pgr
