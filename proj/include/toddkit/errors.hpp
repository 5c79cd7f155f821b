#pragma once

#include <stdexcept>
#include <string>

namespace toddkit {

/// Malformed input: unparseable files, bad grammar, wrong JSON types.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a mathematical condition (e.g. the
/// Calabi-Yau row sums). `row` is 1-based, 0 when not row-specific.
struct ValidationError : std::runtime_error {
    ValidationError(const std::string& what, int row = 0) : std::runtime_error(what), row(row) {}
    int row;
};

/// Operation called outside its precondition.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Polynomials from different truncated rings were combined.
struct RingMismatch : std::invalid_argument {
    RingMismatch() : std::invalid_argument("polynomials belong to different rings") {}
};

}  // namespace toddkit
