#pragma once

#include <stdexcept>

namespace wmn {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Topology-level invariant violations detected by validate().
struct ValidationError : Error {
    using Error::Error;
};

struct InvalidTopology : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidEdge : ValidationError {
    using ValidationError::ValidationError;
};
struct DuplicateEdge : ValidationError {
    using ValidationError::ValidationError;
};
struct RangeViolation : ValidationError {
    using ValidationError::ValidationError;
};
struct DisconnectedTopology : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidParameter : Error {
    using Error::Error;
};
struct UnknownNode : Error {
    using Error::Error;
};
struct UnknownRadio : Error {
    using Error::Error;
};
struct UnknownVertex : Error {
    using Error::Error;
};
struct GatewayMissing : Error {
    using Error::Error;
};
struct NoRoute : Error {
    using Error::Error;
};
struct UnknownCase : Error {
    using Error::Error;
};
struct InsufficientData : Error {
    using Error::Error;
};

/// Thrown when a computation would exceed its configured runtime budget
/// (e.g. exact clique enumeration on an oversized conflict graph).
struct BudgetExceeded : Error {
    using Error::Error;
};

}  // namespace wmn
