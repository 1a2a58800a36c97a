#pragma once

#include <stdexcept>
#include <string>

namespace fpt {

/// Malformed text input (polynomial grammar, CSV tables, CLI values).
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain: zero divisor, mismatched moduli,
/// a constant where a nonconstant polynomial is required, and so on.
class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The equidistribution criterion does not apply to the given input (coefficients
/// outside F_p). Distinct from a negative verdict.
class UndecidableError : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
};

/// A checked internal identity failed. Always a bug.
class InvariantError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace fpt
