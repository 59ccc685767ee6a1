#pragma once

#include <stdexcept>
#include <string>

namespace kriglab {

// Thrown when a computation fails numerically (factorization breakdown,
// divergent quadrature where a finite value was required, ...).  Input and
// configuration problems use std::invalid_argument instead; the CLI maps
// the two families to different exit codes.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kriglab
