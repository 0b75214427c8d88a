#include "qcurve/families.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qcurve/errors.hpp"
#include "qcurve/spline.hpp"

namespace qcurve {

namespace {

std::string fmt_param(const char* name, double v) {
    std::ostringstream os;
    os << name << '=' << v;
    return os.str();
}

} // namespace

SalkowskiParams SalkowskiParams::make(double m, std::optional<double> margin) {
    if (!std::isfinite(m) || m == 0.0) {
        throw ParameterError("Salkowski shape parameter m must be finite and nonzero");
    }
    SalkowskiParams p;
    p.m = m;
    p.n = m / std::sqrt(1.0 + m * m);
    // 1/(1-2n) and 1/(4n^2-1) appear in the closed forms.
    if (std::abs(1.0 - 2.0 * std::abs(p.n)) < 1e-9) {
        throw ParameterError("closed forms are singular at n = 1/2 (m = 1/sqrt(3))");
    }
    p.margin = margin.value_or(0.05 * p.half_width());
    if (!(p.margin > 0.0) || !(p.margin < p.half_width())) {
        throw ParameterError("margin must lie in (0, pi/(2|n|))");
    }
    return p;
}

double SalkowskiParams::half_width() const { return std::numbers::pi / (2.0 * std::abs(n)); }

Interval SalkowskiParams::safe_domain() const { return {-half_width() + margin, half_width() - margin}; }

Interval SalkowskiParams::positive_domain() const {
    if (!(2.0 * margin < half_width())) {
        throw ParameterError("margin leaves no room for the positive half-domain");
    }
    return {margin, half_width() - margin};
}

double SalkowskiParams::speed(double t) const { return std::cos(n * t) / std::sqrt(1.0 + m * m); }

double SalkowskiParams::arc_length(double t) const { return std::sin(n * t) / m; }

double default_margin(double m) { return SalkowskiParams::make(m).margin; }

Curve salkowski(double m, std::optional<double> margin) {
    const SalkowskiParams p = SalkowskiParams::make(m, margin);
    const double n = p.n;
    const double g = 1.0 / std::sqrt(1.0 + m * m);
    const double wp = 1.0 + 2.0 * n;
    const double wq = 1.0 - 2.0 * n;

    auto eval = [=](double t) {
        return g * SpatialQuaternion{
                       (n - 1.0) / (4.0 * wp) * std::sin(wp * t) - (1.0 + n) / (4.0 * wq) * std::sin(wq * t) - 0.5 * std::sin(t),
                       (1.0 - n) / (4.0 * wp) * std::cos(wp * t) + (1.0 + n) / (4.0 * wq) * std::cos(wq * t) + 0.5 * std::cos(t),
                       std::cos(2.0 * n * t) / (4.0 * m),
                   };
    };
    auto velocity = [=](double t) {
        return g * SpatialQuaternion{
                       (n - 1.0) / 4.0 * std::cos(wp * t) - (1.0 + n) / 4.0 * std::cos(wq * t) - 0.5 * std::cos(t),
                       -(1.0 - n) / 4.0 * std::sin(wp * t) - (1.0 + n) / 4.0 * std::sin(wq * t) - 0.5 * std::sin(t),
                       -n * std::sin(2.0 * n * t) / (2.0 * m),
                   };
    };
    auto acceleration = [=](double t) {
        return g * SpatialQuaternion{
                       -(n - 1.0) * wp / 4.0 * std::sin(wp * t) + (1.0 + n) * wq / 4.0 * std::sin(wq * t) + 0.5 * std::sin(t),
                       -(1.0 - n) * wp / 4.0 * std::cos(wp * t) - (1.0 + n) * wq / 4.0 * std::cos(wq * t) - 0.5 * std::cos(t),
                       -n * n * std::cos(2.0 * n * t) / m,
                   };
    };
    auto jerk = [=](double t) {
        return g * SpatialQuaternion{
                       -(n - 1.0) * wp * wp / 4.0 * std::cos(wp * t) + (1.0 + n) * wq * wq / 4.0 * std::cos(wq * t) +
                           0.5 * std::cos(t),
                       (1.0 - n) * wp * wp / 4.0 * std::sin(wp * t) + (1.0 + n) * wq * wq / 4.0 * std::sin(wq * t) +
                           0.5 * std::sin(t),
                       2.0 * n * n * n * std::sin(2.0 * n * t) / m,
                   };
    };
    Curve c(p.safe_domain(), eval, "salkowski(" + fmt_param("m", m) + ")");
    c.with_derivative(1, velocity)
        .with_derivative(2, acceleration)
        .with_derivative(3, jerk)
        .with_param("m", m).with_param("n", n).with_param("margin", p.margin);
    return c;
}

Frame salkowski_frame_closed_form(double m, double t) {
    const SalkowskiParams p = SalkowskiParams::make(m, std::nullopt);
    const double n = p.n;
    if (!(std::abs(n * t) < std::numbers::pi / 2.0)) {
        throw ParameterError("salkowski_frame_closed_form: t outside the Salkowski domain");
    }
    const double ct = std::cos(t), st = std::sin(t);
    const double cn = std::cos(n * t), sn = std::sin(n * t);
    Frame f;
    f.tangent = -SpatialQuaternion{ct * cn + n * st * sn, cn * st - n * ct * sn, n / m * sn};
    f.normal1 = n * SpatialQuaternion{st / m, -ct / m, -1.0};
    f.normal2 = SpatialQuaternion{n * cn * st - ct * sn, -n * ct * cn - st * sn, n / m * cn};
    return f;
}

namespace {

SpatialQuaternion anti_salkowski_printed_point(double m, double n, double t) {
    const double pre = 1.0 / (2.0 * (4.0 * n * n - 1.0) * m);
    const double c2 = std::cos(2.0 * n * t);
    const double s2 = std::sin(2.0 * n * t);
    const double ring = n * (1.0 - 4.0 * n * n + 3.0 * c2);
    return {
        pre * (ring * std::cos(t) + (2.0 * n * n + 1.0) * std::sin(t) * s2),
        pre * (ring * std::sin(t) - (2.0 * n * n + 1.0) * std::cos(t) * s2),
        (n * n - 1.0) / (4.0 * n * n) * (2.0 * n * t + s2),
    };
}

} // namespace

Curve anti_salkowski_printed(double m, std::optional<double> margin) {
    const SalkowskiParams p = SalkowskiParams::make(m, margin);
    const double n = p.n;
    Curve c(p.safe_domain(), [=](double t) { return anti_salkowski_printed_point(m, n, t); },
            "anti-salkowski-printed(" + fmt_param("m", m) + ")");
    c.with_param("m", m).with_param("n", n).with_param("margin", p.margin);
    return c;
}

Curve anti_salkowski(double m, std::optional<double> margin) {
    const SalkowskiParams p = SalkowskiParams::make(m, margin);
    const double n = p.n;
    auto eval = [=](double t) {
        const SpatialQuaternion q = anti_salkowski_printed_point(m, n, t);
        return n * SpatialQuaternion{q.a1, q.a2, -q.a3};
    };
    // Velocity is the Salkowski binormal times the Salkowski speed.
    auto velocity = [=](double t) { return p.speed(t) * salkowski_frame_closed_form(m, t).normal2; };
    Curve c(p.safe_domain(), eval, "anti-salkowski(" + fmt_param("m", m) + ")");
    c.with_derivative(1, velocity).with_param("m", m).with_param("n", n).with_param("margin", p.margin);
    return c;
}

Curve binormal_integral(const Curve& c, std::span<const double> grid, double h) {
    if (grid.size() < 4) {
        throw ParameterError("binormal_integral: grid needs at least 4 points");
    }
    const FrameField ff = frame_field(c, grid, h);
    std::vector<SpatialQuaternion> velocity(ff.size());
    for (std::size_t i = 0; i < ff.size(); ++i) {
        velocity[i] = ff.samples[i].speed * ff.samples[i].normal2;
    }
    Curve beta = integrated_spline_curve(ff.grid, std::move(velocity), {}, "binormal_integral(" + c.label() + ")");
    for (const auto& [name, value] : c.params()) {
        beta.with_param(name, value);
    }
    return beta;
}

Curve binormal_integral(const Curve& c, std::span<const double> grid) { return binormal_integral(c, grid, default_fd_step(c)); }

Curve line(const SpatialQuaternion& point, const SpatialQuaternion& direction, Interval domain) {
    if (!(norm(direction) > 0.0)) {
        throw ParameterError("line direction must be nonzero");
    }
    Curve c(domain, [=](double t) { return point + t * direction; }, "line");
    c.with_derivative(1, [=](double) { return direction; });
    c.with_derivative(2, [](double) { return SpatialQuaternion{}; });
    c.with_derivative(3, [](double) { return SpatialQuaternion{}; });
    return c;
}

Curve circle(double radius, std::optional<Interval> domain) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw ParameterError("circle radius must be positive");
    }
    const double R = radius;
    Curve c(domain.value_or(Interval{0.0, 2.0 * std::numbers::pi}),
            [=](double t) { return SpatialQuaternion{R * std::cos(t), R * std::sin(t), 0.0}; }, "circle(" + fmt_param("radius", R) + ")");
    c.with_derivative(1, [=](double t) { return SpatialQuaternion{-R * std::sin(t), R * std::cos(t), 0.0}; });
    c.with_derivative(2, [=](double t) { return SpatialQuaternion{-R * std::cos(t), -R * std::sin(t), 0.0}; });
    c.with_derivative(3, [=](double t) { return SpatialQuaternion{R * std::sin(t), -R * std::cos(t), 0.0}; });
    c.with_param("radius", R);
    return c;
}

Curve circular_helix(double a, double b, std::optional<Interval> domain) {
    if (!std::isfinite(a) || !std::isfinite(b) || (a == 0.0 && b == 0.0)) {
        throw ParameterError("helix parameters must be finite and not both zero");
    }
    Curve c(domain.value_or(Interval{0.0, 4.0 * std::numbers::pi}),
            [=](double t) { return SpatialQuaternion{a * std::cos(t), a * std::sin(t), b * t}; },
            "helix(" + fmt_param("a", a) + "," + fmt_param("b", b) + ")");
    c.with_derivative(1, [=](double t) { return SpatialQuaternion{-a * std::sin(t), a * std::cos(t), b}; });
    c.with_derivative(2, [=](double t) { return SpatialQuaternion{-a * std::cos(t), -a * std::sin(t), 0.0}; });
    c.with_derivative(3, [=](double t) { return SpatialQuaternion{a * std::sin(t), -a * std::cos(t), 0.0}; });
    c.with_param("a", a).with_param("b", b);
    return c;
}

} // namespace qcurve
