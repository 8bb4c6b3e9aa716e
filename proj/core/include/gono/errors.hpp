#pragma once

#include <stdexcept>
#include <string>

namespace gono {

// Base for everything thrown on purpose by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 128-bit arithmetic would overflow. Results are exact or absent, never wrapped.
struct capacity_error : error {
    using error::error;
};

// A configured cap was exceeded (vertex-count limits, degree caps, search budgets,
// bit-set memory bound). Raising the cap is a caller decision, not a bug.
struct limit_error : error {
    using error::error;
};

// Caller broke a documented precondition (disconnected graph where connectivity is
// required, vertex out of range, malformed text form, ...).
struct precondition_error : error {
    using error::error;
};

} // namespace gono
