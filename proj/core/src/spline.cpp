#include "qcurve/spline.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "qcurve/errors.hpp"

namespace qcurve {

CubicSpline3::CubicSpline3(std::vector<double> knots, std::vector<SpatialQuaternion> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
    const std::size_t n = knots_.size();
    if (n < 4 || values_.size() != n) {
        throw ParameterError("cubic spline needs at least 4 knots with one value each");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(knots_[i + 1] > knots_[i])) {
            throw ParameterError("spline knots must be strictly increasing");
        }
    }

    std::vector<double> h(n - 1);
    std::vector<SpatialQuaternion> slope(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = knots_[i + 1] - knots_[i];
        slope[i] = (values_[i + 1] - values_[i]) / h[i];
    }

    // Tridiagonal system in M_1..M_{n-2}; M_0 and M_{n-1} are eliminated with
    // the not-a-knot conditions (third derivative continuous at knots 1 and n-2).
    const std::size_t m = n - 2;
    std::vector<double> lower(m, 0.0), diag(m, 0.0), upper(m, 0.0);
    std::vector<SpatialQuaternion> rhs(m);
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t i = r + 1;
        lower[r] = h[i - 1];
        diag[r] = 2.0 * (h[i - 1] + h[i]);
        upper[r] = h[i];
        rhs[r] = 6.0 * (slope[i] - slope[i - 1]);
    }
    {
        const double h0 = h[0];
        const double h1 = h[1];
        diag[0] = (h0 + h1) * (h0 + 2.0 * h1) / h1;
        upper[0] = (h1 - h0) * (h1 + h0) / h1;
        lower[0] = 0.0;
    }
    {
        const double a = h[n - 3];
        const double b = h[n - 2];
        lower[m - 1] = (a - b) * (a + b) / a;
        diag[m - 1] = (a + b) * (2.0 * a + b) / a;
        upper[m - 1] = 0.0;
    }
    // Thomas algorithm.
    std::vector<double> c(m, 0.0);
    std::vector<SpatialQuaternion> d(m);
    c[0] = upper[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for (std::size_t r = 1; r < m; ++r) {
        const double denom = diag[r] - lower[r] * c[r - 1];
        c[r] = upper[r] / denom;
        d[r] = (rhs[r] - lower[r] * d[r - 1]) / denom;
    }
    second_.assign(n, SpatialQuaternion{});
    second_[m] = d[m - 1];
    for (std::size_t r = m - 1; r-- > 0;) {
        second_[r + 1] = d[r] - c[r] * second_[r + 2];
    }
    second_[0] = ((h[0] + h[1]) * second_[1] - h[0] * second_[2]) / h[1];
    {
        const double a = h[n - 3];
        const double b = h[n - 2];
        second_[n - 1] = ((a + b) * second_[n - 2] - b * second_[n - 3]) / a;
    }

    cumulative_.assign(n, SpatialQuaternion{});
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double hi = h[i];
        cumulative_[i + 1] = cumulative_[i] + (0.5 * hi) * (values_[i] + values_[i + 1]) -
                             (hi * hi * hi / 24.0) * (second_[i] + second_[i + 1]);
    }
}

std::size_t CubicSpline3::segment(double x) const {
    auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - knots_.begin());
    hi = std::clamp<std::size_t>(hi, 1, knots_.size() - 1);
    return hi - 1;
}

SpatialQuaternion CubicSpline3::value(double x) const { return derivative(x, 0); }

SpatialQuaternion CubicSpline3::derivative(double x, int order) const {
    const std::size_t i = segment(x);
    const double h = knots_[i + 1] - knots_[i];
    const double a = knots_[i + 1] - x;
    const double b = x - knots_[i];
    const SpatialQuaternion& Mi = second_[i];
    const SpatialQuaternion& Mj = second_[i + 1];
    switch (order) {
    case 0:
        return (a * a * a / (6.0 * h)) * Mi + (b * b * b / (6.0 * h)) * Mj + a * (values_[i] / h - (h / 6.0) * Mi) +
               b * (values_[i + 1] / h - (h / 6.0) * Mj);
    case 1:
        return (-a * a / (2.0 * h)) * Mi + (b * b / (2.0 * h)) * Mj + (values_[i + 1] - values_[i]) / h -
               (h / 6.0) * (Mj - Mi);
    case 2:
        return (a / h) * Mi + (b / h) * Mj;
    case 3: {
        const SpatialQuaternion here = (Mj - Mi) / h;
        // At a knot the one-sided values differ; average them.
        const double snap = 1e-9 * h;
        if (std::abs(b) <= snap && i > 0) {
            const double hp = knots_[i] - knots_[i - 1];
            return 0.5 * (here + (Mi - second_[i - 1]) / hp);
        }
        if (std::abs(a) <= snap && i + 2 < knots_.size()) {
            const double hn = knots_[i + 2] - knots_[i + 1];
            return 0.5 * (here + (second_[i + 2] - Mj) / hn);
        }
        return here;
    }
    default:
        throw ParameterError("spline derivative order must be 0..3");
    }
}

SpatialQuaternion CubicSpline3::integral(double x) const {
    const std::size_t i = segment(x);
    const double h = knots_[i + 1] - knots_[i];
    const double a = knots_[i + 1] - x;
    const double b = x - knots_[i];
    const SpatialQuaternion& Mi = second_[i];
    const SpatialQuaternion& Mj = second_[i + 1];
    const SpatialQuaternion ci = values_[i] / h - (h / 6.0) * Mi;
    const SpatialQuaternion cj = values_[i + 1] / h - (h / 6.0) * Mj;
    // Antiderivative of the segment polynomial, zero at knot i.
    const SpatialQuaternion at_x = (-a * a * a * a / (24.0 * h)) * Mi + (b * b * b * b / (24.0 * h)) * Mj - (0.5 * a * a) * ci +
                                   (0.5 * b * b) * cj;
    const SpatialQuaternion at_knot = (-h * h * h / 24.0) * Mi - (0.5 * h * h) * ci;
    return cumulative_[i] + (at_x - at_knot);
}

Curve spline_curve(std::vector<double> knots, std::vector<SpatialQuaternion> points, std::string label) {
    auto spline = std::make_shared<const CubicSpline3>(std::move(knots), std::move(points));
    const Interval domain{spline->knots().front(), spline->knots().back()};
    Curve c(domain, [spline](double t) { return spline->value(t); }, std::move(label));
    for (int order = 1; order <= 3; ++order) {
        c.with_derivative(order, [spline, order](double t) { return spline->derivative(t, order); });
    }
    return c;
}

Curve integrated_spline_curve(std::vector<double> knots, std::vector<SpatialQuaternion> velocities, SpatialQuaternion start,
                              std::string label) {
    auto spline = std::make_shared<const CubicSpline3>(std::move(knots), std::move(velocities));
    const Interval domain{spline->knots().front(), spline->knots().back()};
    Curve c(domain, [spline, start](double t) { return start + spline->integral(t); }, std::move(label));
    for (int order = 1; order <= 3; ++order) {
        c.with_derivative(order, [spline, order](double t) { return spline->derivative(t, order - 1); });
    }
    return c;
}

} // namespace qcurve
