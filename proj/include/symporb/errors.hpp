#ifndef SYMPORB_ERRORS_HPP_
#define SYMPORB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace symporb {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A stated precondition does not hold (bad rank, p too small, ...).
struct precondition_error : error {
    using error::error;
};

// Malformed input: non-orthogonal placement, zero coefficient, domain mismatch.
struct validation_error : error {
    using error::error;
};

// The request is well-formed but exceeds a configured enumeration cap.
struct resource_error : error {
    using error::error;
};

// A method was asked for on data it does not apply to.
struct inapplicable_error : error {
    using error::error;
};

// A cache entry or file is missing.
struct missing_artifact_error : error {
    using error::error;
};

// A computation contradicted an identity that must hold; indicates a bug.
struct internal_error : error {
    using error::error;
};

}  // namespace symporb

#endif
