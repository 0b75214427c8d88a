#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcurve/curve.hpp"
#include "qcurve/quaternion.hpp"

namespace qcurve {

/// C^2 cubic interpolating spline through vector samples on strictly
/// increasing (possibly non-uniform) knots, with not-a-knot end conditions.
///
/// The third derivative is piecewise constant; at an interior knot the mean of
/// the two one-sided values is returned, which is the second-order accurate
/// choice on smooth data.
class CubicSpline3 {
public:
    /// Requires at least 4 knots.
    CubicSpline3(std::vector<double> knots, std::vector<SpatialQuaternion> values);

    SpatialQuaternion value(double x) const;
    /// order in 0..3.
    SpatialQuaternion derivative(double x, int order) const;
    /// Exact integral of the spline from knots().front() to x.
    SpatialQuaternion integral(double x) const;

    const std::vector<double>& knots() const { return knots_; }
    const std::vector<SpatialQuaternion>& values() const { return values_; }

private:
    std::size_t segment(double x) const;

    std::vector<double> knots_;
    std::vector<SpatialQuaternion> values_;
    std::vector<SpatialQuaternion> second_;          // spline second derivatives at the knots
    std::vector<SpatialQuaternion> cumulative_;      // integral from knot 0 to knot i
};

/// Curve interpolating sampled positions; derivatives of orders 1..3 come from
/// the spline itself.
Curve spline_curve(std::vector<double> knots, std::vector<SpatialQuaternion> points, std::string label = "spline");

/// Curve whose velocity is the cubic spline through `velocities`; positions are
/// start + the exact integral of that spline, so derivatives of orders 1..3 are
/// the spline, its first and its second derivative (all continuous).
Curve integrated_spline_curve(std::vector<double> knots, std::vector<SpatialQuaternion> velocities,
                              SpatialQuaternion start = {}, std::string label = "integrated-spline");

} // namespace qcurve
