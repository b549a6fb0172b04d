#pragma once

#include <stdexcept>
#include <string>

namespace riskvec {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for malformed or inconsistent inputs (documents, arguments,
/// violated preconditions). The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// Raised while computing on otherwise valid inputs (resource caps,
/// degenerate cases). The CLI maps these to exit code 3.
class ComputeError : public Error {
public:
    using Error::Error;
};

/// Probabilities or densities do not sum to one within tolerance.
class MassError : public InputError {
public:
    using InputError::InputError;
};

/// A value or structure violates a documented invariant.
class ValidationError : public InputError {
public:
    using InputError::InputError;
};

/// Input text could not be parsed.
class ParseError : public InputError {
public:
    using InputError::InputError;
};

/// A tail specification violates its invariants.
class SpecError : public InputError {
public:
    using InputError::InputError;
};

/// Scaling a position by a negative factor.
class NegativeScaleError : public InputError {
public:
    using InputError::InputError;
};

/// Vector lengths do not match the shared outcome index set.
class DimensionMismatchError : public InputError {
public:
    using InputError::InputError;
};

/// A national-discretion weight is required but absent.
class DiscretionMissingError : public InputError {
public:
    using InputError::InputError;
};

/// A risk term is not allowed under the requested accord.
class AccordMismatchError : public InputError {
public:
    using InputError::InputError;
};

/// A convolution or construction would exceed a configured size cap.
class SizeError : public ComputeError {
public:
    using ComputeError::ComputeError;
};

/// The quantile-defining set is empty.
class DegenerateSupportError : public ComputeError {
public:
    using ComputeError::ComputeError;
};

/// A conditional expectation was requested on a zero-probability event.
class EmptyTailError : public ComputeError {
public:
    using ComputeError::ComputeError;
};

/// The requested family size exceeds the perturbation budget.
class CapacityError : public ComputeError {
public:
    using ComputeError::ComputeError;
};

} // namespace riskvec
