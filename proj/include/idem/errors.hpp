#pragma once

#include <stdexcept>
#include <string>

namespace idem {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two operands belong to different rings.
struct ring_mismatch_error : error {
    using error::error;
};

/// Matrix dimensions are incompatible with the requested operation.
struct dimension_error : error {
    using error::error;
};

/// Inversion was requested for a non-unit.
struct not_a_unit_error : error {
    using error::error;
};

/// Text or JSON input does not match the expected syntax.
struct parse_error : error {
    using error::error;
};

/// No factorization route applies to the given input.
struct route_not_found_error : error {
    using error::error;
};

/// An exhaustive enumeration would exceed the configured budget.
struct budget_error : error {
    using error::error;
};

/// The operation is not defined for this ring kind.
struct unsupported_ring_error : error {
    using error::error;
};

/// An internal certified identity failed to re-verify.  Indicates a bug.
struct invariant_error : error {
    using error::error;
};

}  // namespace idem
