#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qcurve/quaternion.hpp"

namespace qcurve {

/// Closed parameter interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    constexpr double length() const { return hi - lo; }
    constexpr bool contains(double t) const { return t >= lo && t <= hi; }
};

using CurveMap = std::function<SpatialQuaternion(double)>;

/// A parametric map from a closed interval into the spatial quaternions,
/// optionally carrying analytic derivatives of orders 1..3.
///
/// Analytic derivatives are used in place of finite differences wherever
/// present; a missing order is obtained by differencing the highest
/// supplied lower order (see kernel.hpp).
class Curve {
public:
    static constexpr int kMaxDerivativeOrder = 3;

    Curve(Interval domain, CurveMap eval, std::string label = {});

    /// Attaches an analytic derivative of the given order (1..3).
    Curve& with_derivative(int order, CurveMap derivative);
    Curve& with_param(const std::string& name, double value);
    Curve& with_label(std::string label);

    SpatialQuaternion operator()(double t) const { return eval_(t); }

    const Interval& domain() const { return domain_; }
    const std::string& label() const { return label_; }
    const std::map<std::string, double>& params() const { return params_; }

    bool has_derivative(int order) const;
    /// Requires has_derivative(order).
    SpatialQuaternion analytic_derivative(int order, double t) const;
    /// Highest k such that orders 1..k are all analytic (0 if none).
    int analytic_order() const;

    /// Same curve restricted to a sub-interval of its domain.
    Curve restricted(Interval sub) const;

private:
    Interval domain_;
    CurveMap eval_;
    std::array<CurveMap, kMaxDerivativeOrder> derivatives_{};
    std::string label_;
    std::map<std::string, double> params_;
};

/// Row-major 3x3 matrix acting on spatial quaternions; used for rigid motions
/// and the similarity gauge.
struct Matrix3 {
    std::array<std::array<double, 3>, 3> m{};

    static constexpr Matrix3 identity() { return {{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}; }
    static constexpr Matrix3 diagonal(double x, double y, double z) { return {{{{x, 0, 0}, {0, y, 0}, {0, 0, z}}}}; }
    /// Right-handed rotation by `angle` radians about `axis` (nonzero).
    static Matrix3 rotation(const SpatialQuaternion& axis, double angle);

    SpatialQuaternion apply(const SpatialQuaternion& v) const;
    Matrix3 transposed() const;
    double determinant() const;
    friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
};

/// t -> -c(t). Preserves curvature, negates torsion.
Curve antipodal(const Curve& c);

/// t -> linear.apply(c(t)) + offset. With an orthogonal `linear` this is a rigid
/// motion (proper when det = +1); derivatives are carried through.
Curve transformed(const Curve& c, const Matrix3& linear, const SpatialQuaternion& offset = {});

/// n >= 2 equally spaced points covering [iv.lo, iv.hi] inclusive.
std::vector<double> uniform_grid(Interval iv, std::size_t n);

} // namespace qcurve
