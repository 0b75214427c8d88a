#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace qcurve {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (e.g. inverting the zero quaternion).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A caller-supplied parameter is invalid (m = 0, h <= 0, radius <= 0, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A parameter value lies outside the sampled range of a frame field.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Failure evaluating the Frenet apparatus at a parameter value. When the
/// failure happened while building a frame field, index() names the grid point.
class FrameError : public Error {
public:
    FrameError(const std::string& what, double t, std::optional<std::size_t> index = {})
        : Error(what), t_(t), index_(index) {}

    double t() const noexcept { return t_; }
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    double t_;
    std::optional<std::size_t> index_;
};

/// The speed |c'(t)| vanishes (or is below tolerance).
class SingularPointError : public FrameError {
public:
    using FrameError::FrameError;
};

/// The curvature vanishes, so the principal normal is undefined.
class UndefinedFrameError : public FrameError {
public:
    using FrameError::FrameError;
};

/// f = r/k vanishes somewhere on a field where the tangent ODE divides by it.
class DegenerateRatioError : public Error {
public:
    using Error::Error;
};

/// The torsion law was asked for a field whose curvature is not identically one.
class NotUnitCurvatureError : public Error {
public:
    using Error::Error;
};

/// The fitted torsion law leaves its domain |b s| < 1 at some sample.
class DomainExceededError : public Error {
public:
    using Error::Error;
};

/// Two curves have no overlapping total-curvature range to compare on.
class IncomparableRangeError : public Error {
public:
    using Error::Error;
};

/// A similarity criterion cannot be applied to this pair (e.g. a line against
/// a regular curve, or the binormal criterion on a torsion-free curve).
class CriterionInapplicableError : public Error {
public:
    using Error::Error;
};

} // namespace qcurve
