#pragma once

#include <stdexcept>
#include <string>

namespace pnlie {

/// Malformed input file or string (CLI exit code 2).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operation called outside its contract, or a constructor refusing an
/// invalid structure (CLI exit code 3).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Singular matrix where an inverse is required. Semantically meaningful:
/// this is how degenerate 2-cocycles surface.
struct DegenerateMatrixError : PreconditionError {
    explicit DegenerateMatrixError(const std::string& msg) : PreconditionError(msg) {}
};

/// Shape mismatch between operands.
struct DimensionError : PreconditionError {
    explicit DimensionError(const std::string& msg) : PreconditionError(msg) {}
};

}  // namespace pnlie
