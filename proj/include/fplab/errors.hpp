#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fplab {

/// Input outside the mathematical domain of an operation (bad β, point off
/// the disk, mismatched grids, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A documented precondition of a check or solver does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The requested operation is not defined for this instance (e.g. ordering
/// on a space that ships without an order).
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Sampling could not produce a single admissible configuration.
class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite arithmetic during an iteration.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, std::size_t step)
        : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// A mapping sent an iterate outside its declared domain.
class DomainEscapeError : public std::runtime_error {
public:
    DomainEscapeError(const std::string& what, std::size_t step)
        : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// An iterative solver ran out of iterations.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, double last_residual)
        : std::runtime_error(what), last_residual_(last_residual) {}

    double last_residual() const noexcept { return last_residual_; }

private:
    double last_residual_;
};

/// A structural invariant that the theory guarantees was observed broken at
/// runtime, e.g. non-monotone Picard iterates.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fplab
