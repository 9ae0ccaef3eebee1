#pragma once

#include <stdexcept>

namespace modkit {

// Arguments outside an operation's documented domain (bad sizes, infeasible
// parameters, invalid partitions or decompositions).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Unreadable or malformed input files / streams.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A sampler exhausted its rejection/restart budget.
struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numeric procedure failed to converge or found no bracketing interval.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace modkit
