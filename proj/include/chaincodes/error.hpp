#pragma once

#include <stdexcept>
#include <string>

namespace chaincodes {

enum class ErrorKind {
    InvalidParameter,
    IncompatibleOperands,
    InvalidGenerator,
    InternalConsistency,
    BudgetExceeded,
    NotInLayer,
    LiftingFailure,
    InvalidChain,
    PreconditionViolation,
    UnsupportedRing,
    Unsupported,
    Parse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` distinguishes the failure class.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace chaincodes
