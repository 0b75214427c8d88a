#include "qcurve/curve.hpp"

#include <cmath>
#include <utility>

#include "qcurve/errors.hpp"

namespace qcurve {

Curve::Curve(Interval domain, CurveMap eval, std::string label)
    : domain_(domain), eval_(std::move(eval)), label_(std::move(label)) {
    if (!(domain_.hi > domain_.lo) || !std::isfinite(domain_.lo) || !std::isfinite(domain_.hi)) {
        throw ParameterError("curve domain must be a finite interval with lo < hi");
    }
    if (!eval_) {
        throw ParameterError("curve requires an evaluation map");
    }
}

Curve& Curve::with_derivative(int order, CurveMap derivative) {
    if (order < 1 || order > kMaxDerivativeOrder) {
        throw ParameterError("analytic derivative order must be 1..3");
    }
    derivatives_[static_cast<std::size_t>(order - 1)] = std::move(derivative);
    return *this;
}

Curve& Curve::with_param(const std::string& name, double value) {
    params_[name] = value;
    return *this;
}

Curve& Curve::with_label(std::string label) {
    label_ = std::move(label);
    return *this;
}

bool Curve::has_derivative(int order) const {
    return order >= 1 && order <= kMaxDerivativeOrder && static_cast<bool>(derivatives_[static_cast<std::size_t>(order - 1)]);
}

SpatialQuaternion Curve::analytic_derivative(int order, double t) const {
    if (!has_derivative(order)) {
        throw ParameterError("no analytic derivative of order " + std::to_string(order));
    }
    return derivatives_[static_cast<std::size_t>(order - 1)](t);
}

int Curve::analytic_order() const {
    int k = 0;
    while (k < kMaxDerivativeOrder && has_derivative(k + 1)) {
        ++k;
    }
    return k;
}

Curve Curve::restricted(Interval sub) const {
    if (!(sub.lo >= domain_.lo && sub.hi <= domain_.hi && sub.hi > sub.lo)) {
        throw ParameterError("restriction must be a non-empty sub-interval of the domain");
    }
    Curve out = *this;
    out.domain_ = sub;
    return out;
}

Matrix3 Matrix3::rotation(const SpatialQuaternion& axis, double angle) {
    const double len = norm(axis);
    if (!(len > 0.0)) {
        throw ParameterError("rotation axis must be nonzero");
    }
    const SpatialQuaternion u = axis / len;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double C = 1.0 - c;
    return {{{
        {c + u.a1 * u.a1 * C, u.a1 * u.a2 * C - u.a3 * s, u.a1 * u.a3 * C + u.a2 * s},
        {u.a2 * u.a1 * C + u.a3 * s, c + u.a2 * u.a2 * C, u.a2 * u.a3 * C - u.a1 * s},
        {u.a3 * u.a1 * C - u.a2 * s, u.a3 * u.a2 * C + u.a1 * s, c + u.a3 * u.a3 * C},
    }}};
}

SpatialQuaternion Matrix3::apply(const SpatialQuaternion& v) const {
    return {
        m[0][0] * v.a1 + m[0][1] * v.a2 + m[0][2] * v.a3,
        m[1][0] * v.a1 + m[1][1] * v.a2 + m[1][2] * v.a3,
        m[2][0] * v.a1 + m[2][1] * v.a2 + m[2][2] * v.a3,
    };
}

Matrix3 Matrix3::transposed() const {
    Matrix3 out;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            out.m[i][j] = m[j][i];
        }
    }
    return out;
}

double Matrix3::determinant() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 out;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < 3; ++k) {
                acc += a.m[i][k] * b.m[k][j];
            }
            out.m[i][j] = acc;
        }
    }
    return out;
}

Curve antipodal(const Curve& c) {
    return transformed(c, Matrix3::diagonal(-1.0, -1.0, -1.0)).with_label("antipodal(" + c.label() + ")");
}

Curve transformed(const Curve& c, const Matrix3& linear, const SpatialQuaternion& offset) {
    Curve out(c.domain(), [c, linear, offset](double t) { return linear.apply(c(t)) + offset; }, c.label());
    for (const auto& [name, value] : c.params()) {
        out.with_param(name, value);
    }
    for (int order = 1; order <= Curve::kMaxDerivativeOrder; ++order) {
        if (c.has_derivative(order)) {
            out.with_derivative(order, [c, linear, order](double t) { return linear.apply(c.analytic_derivative(order, t)); });
        }
    }
    return out;
}

std::vector<double> uniform_grid(Interval iv, std::size_t n) {
    if (n < 2) {
        throw ParameterError("grid needs at least two points");
    }
    std::vector<double> grid(n);
    const double step = iv.length() / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = iv.lo + step * static_cast<double>(i);
    }
    grid.back() = iv.hi;
    return grid;
}

} // namespace qcurve
