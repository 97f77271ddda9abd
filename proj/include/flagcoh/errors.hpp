#pragma once

#include <stdexcept>
#include <string>

namespace flagcoh {

// Contract violations: mismatched fields, bad indices, unsupported presets.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No invertible leading term (inverting zero, dividing by zero, gcd != 1).
struct NotAUnitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A valuation or slice is not certified by the available precision window.
struct IndeterminateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation needs more certified precision than the inputs carry.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A subspace family contradicts its structural laws; message names the witness.
struct PresetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input data admits no consistent interpretation (e.g. two independent curve
// relations where one was expected).
struct InconsistentInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace flagcoh
