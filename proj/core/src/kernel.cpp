#include "qcurve/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "qcurve/errors.hpp"
#include "qcurve/numerics.hpp"

namespace qcurve {

namespace {

constexpr double kArcTolerance = 1e-10;
constexpr int kArcDepth = 40;

// Number of stencil points for an O(h^4) difference of the given order.
std::size_t stencil_size(int fd_order, bool central) {
    if (central) {
        return fd_order == 3 ? 7 : 5;
    }
    return static_cast<std::size_t>(fd_order) + 4;
}

SpatialQuaternion base_map(const Curve& c, int base_order, double t) {
    return base_order == 0 ? c(t) : c.analytic_derivative(base_order, t);
}

const std::vector<double>& central_weights(int fd_order) {
    static const std::array<std::vector<double>, 3> table = [] {
        std::array<std::vector<double>, 3> w;
        for (int d = 1; d <= 3; ++d) {
            const std::size_t n = stencil_size(d, true);
            std::vector<double> nodes(n);
            for (std::size_t i = 0; i < n; ++i) {
                nodes[i] = static_cast<double>(i) - static_cast<double>(n / 2);
            }
            w[static_cast<std::size_t>(d - 1)] = numerics::fd_weights(0.0, nodes, d);
        }
        return w;
    }();
    return table[static_cast<std::size_t>(fd_order - 1)];
}

} // namespace

double default_fd_step(const Curve& c) { return 1e-4 * c.domain().length(); }

SpatialQuaternion derivative(const Curve& c, double t, int order, double h) {
    if (order < 1 || order > 3) {
        throw ParameterError("derivative order must be 1..3");
    }
    if (c.has_derivative(order)) {
        return c.analytic_derivative(order, t);
    }
    const Interval& dom = c.domain();
    if (!(h > 0.0) || h < 1e-12 * dom.length()) {
        throw ParameterError("finite-difference step h = " + std::to_string(h) + " is degenerate");
    }
    int base = 0;
    for (int j = order - 1; j >= 1; --j) {
        if (c.has_derivative(j)) {
            base = j;
            break;
        }
    }
    const int fd_order = order - base;

    const std::size_t n_central = stencil_size(fd_order, true);
    const long half = static_cast<long>(n_central / 2);
    if (t - static_cast<double>(half) * h >= dom.lo && t + static_cast<double>(half) * h <= dom.hi) {
        const auto& w = central_weights(fd_order);
        SpatialQuaternion acc;
        for (long k = -half; k <= half; ++k) {
            const double wk = w[static_cast<std::size_t>(k + half)];
            if (wk != 0.0) {
                acc += wk * base_map(c, base, t + static_cast<double>(k) * h);
            }
        }
        return acc / std::pow(h, fd_order);
    }

    // One-sided: slide the stencil inside the domain.
    const std::size_t n = stencil_size(fd_order, false);
    const double span = static_cast<double>(n - 1) * h;
    if (span > dom.length()) {
        throw ParameterError("domain too short for a finite-difference stencil with h = " + std::to_string(h));
    }
    long first = static_cast<long>(std::ceil((dom.lo - t) / h - 1e-9));
    first = std::max(first, -static_cast<long>(n - 1));
    while (t + static_cast<double>(first + static_cast<long>(n) - 1) * h > dom.hi) {
        --first;
    }
    std::vector<double> offsets(n);
    for (std::size_t i = 0; i < n; ++i) {
        offsets[i] = static_cast<double>(first + static_cast<long>(i));
    }
    const auto w = numerics::fd_weights(0.0, offsets, fd_order);
    SpatialQuaternion acc;
    for (std::size_t i = 0; i < n; ++i) {
        acc += w[i] * base_map(c, base, t + offsets[i] * h);
    }
    return acc / std::pow(h, fd_order);
}

SpatialQuaternion derivative(const Curve& c, double t, int order) { return derivative(c, t, order, default_fd_step(c)); }

double arc_length(const Curve& c, double t0, double t1, double h) {
    const Interval& dom = c.domain();
    if (!dom.contains(t0) || !dom.contains(t1)) {
        throw RangeError("arc_length: interval leaves the curve domain");
    }
    return numerics::adaptive_simpson([&](double u) { return norm(derivative(c, u, 1, h)); }, t0, t1, kArcTolerance, kArcDepth);
}

double arc_length(const Curve& c, double t0, double t1) { return arc_length(c, t0, t1, default_fd_step(c)); }

double param_at_arclength(const Curve& c, double s, double h) {
    const Interval& dom = c.domain();
    const double total = arc_length(c, dom.lo, dom.hi, h);
    if (s < 0.0 || s > total) {
        throw RangeError("param_at_arclength: s outside [0, total length]");
    }
    const double speed_floor = 1e-10 * std::max(1.0, total / dom.length());
    auto speed_at = [&](double t) { return norm(derivative(c, t, 1, h)); };

    double lo = dom.lo;
    double hi = dom.hi;
    double t = dom.lo + (s / total) * dom.length();
    for (int iter = 0; iter < 100; ++iter) {
        const double g = numerics::adaptive_simpson(speed_at, dom.lo, t, 1e-12, kArcDepth) - s;
        if (std::abs(g) <= 1e-12) {
            break;
        }
        if (g > 0.0) {
            hi = t;
        } else {
            lo = t;
        }
        const double v = speed_at(t);
        if (v <= speed_floor) {
            throw SingularPointError("singular parametrization: speed vanishes at t = " + std::to_string(t), t);
        }
        double next = t - g / v;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - t) <= 1e-15 * std::max(1.0, std::abs(t))) {
            t = next;
            break;
        }
        t = next;
    }
    if (speed_at(t) <= speed_floor) {
        throw SingularPointError("singular parametrization: speed vanishes at t = " + std::to_string(t), t);
    }
    return t;
}

double param_at_arclength(const Curve& c, double s) { return param_at_arclength(c, s, default_fd_step(c)); }

FrenetSample frenet_local(const Curve& c, double t, double h, FrameTolerance tol) {
    const SpatialQuaternion d1 = derivative(c, t, 1, h);
    const SpatialQuaternion d2 = derivative(c, t, 2, h);
    const SpatialQuaternion d3 = derivative(c, t, 3, h);

    FrenetSample out;
    out.t = t;
    out.speed = norm(d1);
    if (!(out.speed > tol.speed)) {
        throw SingularPointError("singular point: speed " + std::to_string(out.speed) + " at t = " + std::to_string(t), t);
    }
    const SpatialQuaternion b = vec_cross(d1, d2);
    const double b2 = norm2(b);
    const double bn = std::sqrt(b2);
    out.k = bn / (out.speed * out.speed * out.speed);
    if (!(out.k > tol.curvature)) {
        throw UndefinedFrameError("frame undefined: curvature " + std::to_string(out.k) + " at t = " + std::to_string(t), t);
    }
    out.tangent = d1 / out.speed;
    // dt/ds is the component of c'' normal to the tangent, over speed^2.
    out.normal1 = normalized(d2 - vec_dot(d2, out.tangent) * out.tangent);
    out.normal2 = vec_cross(out.tangent, out.normal1);
    out.r = vec_dot(b, d3) / b2;
    return out;
}

FrenetSample frenet_at(const Curve& c, double t, double h, FrameTolerance tol) {
    FrenetSample out = frenet_local(c, t, h, tol);
    out.s = arc_length(c, c.domain().lo, t, h);
    return out;
}

FrenetSample frenet_at(const Curve& c, double t) { return frenet_at(c, t, default_fd_step(c)); }

std::vector<double> FrameField::arc_lengths() const {
    std::vector<double> out(samples.size());
    std::transform(samples.begin(), samples.end(), out.begin(), [](const FrenetSample& f) { return f.s; });
    return out;
}

std::vector<double> FrameField::curvatures() const {
    std::vector<double> out(samples.size());
    std::transform(samples.begin(), samples.end(), out.begin(), [](const FrenetSample& f) { return f.k; });
    return out;
}

std::vector<double> FrameField::torsions() const {
    std::vector<double> out(samples.size());
    std::transform(samples.begin(), samples.end(), out.begin(), [](const FrenetSample& f) { return f.r; });
    return out;
}

std::vector<bool> align_frame_signs(std::span<FrenetSample> samples) {
    std::vector<bool> flipped(samples.size(), false);
    bool negate = false;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i > 0) {
            // samples[i-1] is already aligned; compare against the raw orientation of i.
            const SpatialQuaternion raw = samples[i].normal1;
            const double d = vec_dot(samples[i - 1].normal1, negate ? -raw : raw);
            if (d < 0.0) {
                negate = !negate;
            }
        }
        if (negate) {
            samples[i].normal1 = -samples[i].normal1;
            samples[i].normal2 = -samples[i].normal2;
        }
        flipped[i] = negate;
    }
    return flipped;
}

FrameField frame_field(const Curve& c, std::span<const double> grid, double h, FrameTolerance tol) {
    if (grid.size() < 2) {
        throw ParameterError("frame_field: grid needs at least two points");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!c.domain().contains(grid[i])) {
            throw RangeError("frame_field: grid point " + std::to_string(i) + " outside the curve domain");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw ParameterError("frame_field: grid must be strictly increasing");
        }
    }

    FrameField ff;
    ff.grid.assign(grid.begin(), grid.end());
    ff.samples.reserve(grid.size());
    ff.provenance = c.analytic_order() >= 3 ? Provenance::Analytic : Provenance::FiniteDifference;

    double s = arc_length(c, c.domain().lo, grid[0], h);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i > 0) {
            s += arc_length(c, grid[i - 1], grid[i], h);
        }
        try {
            FrenetSample sample = frenet_local(c, grid[i], h, tol);
            sample.s = s;
            ff.samples.push_back(sample);
        } catch (const SingularPointError& e) {
            throw SingularPointError(std::string(e.what()) + " (grid index " + std::to_string(i) + ")", e.t(), i);
        } catch (const UndefinedFrameError& e) {
            throw UndefinedFrameError(std::string(e.what()) + " (grid index " + std::to_string(i) + ")", e.t(), i);
        }
    }
    ff.flipped = align_frame_signs(ff.samples);
    return ff;
}

FrameField frame_field(const Curve& c, std::span<const double> grid) { return frame_field(c, grid, default_fd_step(c)); }

std::vector<double> total_curvature_samples(const FrameField& ff) {
    std::vector<double> phi(ff.size(), 0.0);
    for (std::size_t i = 1; i < ff.size(); ++i) {
        const auto& a = ff.samples[i - 1];
        const auto& b = ff.samples[i];
        phi[i] = phi[i - 1] + 0.5 * (a.k + b.k) * (b.s - a.s);
    }
    return phi;
}

double total_curvature(const FrameField& ff, double t) {
    if (ff.size() < 2 || t < ff.grid.front() || t > ff.grid.back()) {
        throw RangeError("total_curvature: t outside the field's grid");
    }
    const std::vector<double> phi = total_curvature_samples(ff);
    auto it = std::upper_bound(ff.grid.begin(), ff.grid.end(), t);
    std::size_t j = static_cast<std::size_t>(it - ff.grid.begin());
    j = std::clamp<std::size_t>(j, 1, ff.size() - 1) - 1;
    const auto& a = ff.samples[j];
    const auto& b = ff.samples[j + 1];
    const double w = (t - ff.grid[j]) / (ff.grid[j + 1] - ff.grid[j]);
    const double ds = w * (b.s - a.s);
    const double k_end = a.k + w * (b.k - a.k);
    return phi[j] + 0.5 * (a.k + k_end) * ds;
}

TangentOdeResidual tangent_ode_residual(const FrameField& ff, double f_tol) {
    const std::size_t n = ff.size();
    if (n < 9) {
        throw ParameterError("tangent_ode_residual: field needs at least 9 samples");
    }
    std::vector<double> f(n);
    std::vector<SpatialQuaternion> tangent(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& smp = ff.samples[i];
        if (!(smp.k > 0.0)) {
            throw UndefinedFrameError("tangent_ode_residual: curvature vanishes", smp.t, i);
        }
        f[i] = smp.r / smp.k;
        if (!(std::abs(f[i]) > f_tol)) {
            throw DegenerateRatioError("tangent_ode_residual: f = r/k vanishes at grid index " + std::to_string(i));
        }
        tangent[i] = smp.tangent;
    }
    const std::vector<double> phi = total_curvature_samples(ff);

    using numerics::differentiate;
    const auto t1 = differentiate<SpatialQuaternion>(phi, tangent);
    const auto t2 = differentiate<SpatialQuaternion>(phi, t1);
    std::vector<SpatialQuaternion> scaled(n);
    for (std::size_t i = 0; i < n; ++i) {
        scaled[i] = t2[i] / f[i];
    }
    const auto scaled1 = differentiate<SpatialQuaternion>(phi, scaled);
    const auto f1 = differentiate<double>(phi, f);

    TangentOdeResidual out;
    constexpr std::size_t skip = 3;
    for (std::size_t i = skip; i + skip < n; ++i) {
        const SpatialQuaternion res =
            scaled1[i] + ((1.0 + f[i] * f[i]) / f[i]) * t1[i] - (f1[i] / (f[i] * f[i])) * tangent[i];
        const double r = norm(res);
        out.phi.push_back(phi[i]);
        out.norms.push_back(r);
        out.max_norm = std::max(out.max_norm, r);
    }
    return out;
}

} // namespace qcurve
