#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qcurve/errors.hpp"

namespace qcurve::numerics {

/// Finite-difference weights for the `order`-th derivative at x0 from samples
/// at `nodes` (Fornberg's recursion). Exact for polynomials of degree
/// < nodes.size().
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int order);

/// Adaptive Simpson quadrature with Richardson correction. Subintervals are
/// accepted once |S(left)+S(right) - S| <= 15 tol, or at max_depth.
/// Returns -integral(b, a) when b < a.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double abs_tol = 1e-10,
                        int max_depth = 40);

/// Second-order first derivative of samples y(x) on a strictly increasing,
/// possibly non-uniform grid: three-point central formula inside, three-point
/// one-sided formula at both ends. Needs at least three samples.
template <class T>
std::vector<T> differentiate(std::span<const double> x, std::span<const T> y) {
    const std::size_t n = x.size();
    if (n < 3 || y.size() != n) {
        throw ParameterError("differentiate: need >= 3 samples with matching sizes");
    }
    std::vector<T> out(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h1 = x[i] - x[i - 1];
        const double h2 = x[i + 1] - x[i];
        out[i] = (-h2 / (h1 * (h1 + h2))) * y[i - 1] + ((h2 - h1) / (h1 * h2)) * y[i] + (h1 / (h2 * (h1 + h2))) * y[i + 1];
    }
    {
        const double h1 = x[1] - x[0];
        const double h2 = x[2] - x[1];
        out[0] = (-(2.0 * h1 + h2) / (h1 * (h1 + h2))) * y[0] + ((h1 + h2) / (h1 * h2)) * y[1] + (-h1 / (h2 * (h1 + h2))) * y[2];
    }
    {
        const double h1 = x[n - 2] - x[n - 3];
        const double h2 = x[n - 1] - x[n - 2];
        out[n - 1] = (h2 / (h1 * (h1 + h2))) * y[n - 3] + (-(h1 + h2) / (h1 * h2)) * y[n - 2] +
                     ((2.0 * h2 + h1) / (h2 * (h1 + h2))) * y[n - 1];
    }
    return out;
}

/// Linear interpolation of samples y(x) at xq; x strictly increasing and xq inside [x.front(), x.back()].
template <class T>
T interpolate_linear(std::span<const double> x, std::span<const T> y, double xq);

} // namespace qcurve::numerics

#include <algorithm>

namespace qcurve::numerics {

template <class T>
T interpolate_linear(std::span<const double> x, std::span<const T> y, double xq) {
    if (x.size() < 2 || y.size() != x.size() || xq < x.front() || xq > x.back()) {
        throw RangeError("interpolate_linear: query outside sampled range");
    }
    auto it = std::upper_bound(x.begin(), x.end(), xq);
    std::size_t hi = static_cast<std::size_t>(it - x.begin());
    if (hi >= x.size()) {
        hi = x.size() - 1;
    }
    const std::size_t lo = hi - 1;
    const double w = (xq - x[lo]) / (x[hi] - x[lo]);
    return (1.0 - w) * y[lo] + w * y[hi];
}

} // namespace qcurve::numerics
