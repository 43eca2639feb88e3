#pragma once

#include <stdexcept>
#include <string>

namespace jdm {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: asymmetric/negative matrices, bad documents, mismatched
// vertex sets, structurally invalid certificates.
struct validation_error : error {
    using error::error;
};

// The instance fails one of the two realizability conditions. The message
// names the violated condition and the offending class or cell.
struct feasibility_error : error {
    using error::error;
};

// A broken internal invariant. Indicates a bug in the caller or in the
// library itself, never bad user input.
struct internal_error : error {
    using error::error;
};

}  // namespace jdm
