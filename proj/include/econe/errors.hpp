#pragma once
// Error taxonomy shared by the library and the CLI exit-code mapping.

#include <stdexcept>
#include <string>

namespace econe {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract arguments (CLI exit code 4).
struct bad_argument : error {
    using error::error;
};

/// A validation suite or certificate clause failed (CLI exit code 2).
struct validation_error : error {
    using error::error;
};

/// The orbit classifier produced inconsistent invariants. Must never fire
/// on points of the cone; firing means the classification recursion is wrong.
struct classification_error : validation_error {
    using validation_error::validation_error;
};

/// An enumeration exceeded its configured work budget (CLI exit code 3).
struct budget_exceeded : error {
    using error::error;
};

}  // namespace econe
