#pragma once

#include <stdexcept>
#include <string>

namespace breakline {

/// Base class for all breakline errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Requested name is not in the function catalog.
class UnknownFunction : public Error {
public:
    using Error::Error;
};

/// Operation requires a known curvature tag; pass assuming_curvature() to override.
class CurvatureUnknown : public Error {
public:
    using Error::Error;
};

/// Interval is degenerate or lies outside the function's domain.
class DomainViolation : public Error {
public:
    using Error::Error;
};

/// Sampled deviation contradicts the declared concave/convex tag.
class NonConcaveDetected : public Error {
public:
    using Error::Error;
};

/// The gap function is flat at its maximum; uniqueness requires strict concavity.
class NotStrictlyConcave : public Error {
public:
    using Error::Error;
};

/// Iteration cap reached before the requested tolerance.
class NoConvergence : public Error {
public:
    using Error::Error;
};

/// Same condition, name used by the greedy insertion baseline.
using Nonconvergence = NoConvergence;

/// Breakpoint count out of range (n < 2, or unsupported for the operation).
class InvalidCount : public Error {
public:
    using Error::Error;
};

/// Explicitly supplied breakpoints are non-monotone or mismatch the range.
class InvalidExplicit : public Error {
public:
    using Error::Error;
};

/// A solver update would destroy the strict ordering of breakpoints.
class NumericalCollapse : public Error {
public:
    using Error::Error;
};

/// Enumeration budget of the grid oracle exceeded.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Export of an unconverged result without the explicit allow flag.
class Unconverged : public Error {
public:
    using Error::Error;
};

/// Malformed argument value (bad threshold, bad sample count, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace breakline
