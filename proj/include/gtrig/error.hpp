#ifndef GTRIG_ERROR_HPP
#define GTRIG_ERROR_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace gtrig {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// An iterative method (series, quadrature, root finder) did not converge.
class ConvergenceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class NonConvergent : public ConvergenceError
{
public:
    using ConvergenceError::ConvergenceError;
};

class NoConvergence : public ConvergenceError
{
public:
    using ConvergenceError::ConvergenceError;
};

class MaxIterExceeded : public ConvergenceError
{
public:
    using ConvergenceError::ConvergenceError;
};

/// Target value not enclosed by the function values at the bracket ends.
class BracketInvalid : public DomainError
{
public:
    using DomainError::DomainError;
};

/// Predicate evaluated at a point outside its declared parameter region.
class DomainViolation : public DomainError
{
public:
    using DomainError::DomainError;
};

class UnknownPredicate : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_finite(double v, const char* what)
{
    if (!std::isfinite(v))
        throw DomainError(std::string(what) + " must be finite");
}

} // namespace detail
} // namespace gtrig

#endif
