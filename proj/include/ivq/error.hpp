#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ivq {

enum class ErrorKind {
    // value construction
    OutOfRange,
    InvertedInterval,
    NonFinite,
    BadRung,
    NegativeScalar,
    NegativeInput,
    // rung validity
    InvalidAtQ,
    NoValidQ,
    ExplicitQInvalid,
    // measures and weights
    MissingSubset,
    NotGrounded,
    NotMonotone,
    NotAdditive,
    BadSubset,
    NegativeWeight,
    WeightSumNotOne,
    InvalidBum,
    SizeMismatch,
    // problem files
    Parse,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ivq
