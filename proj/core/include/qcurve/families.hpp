#pragma once

#include <optional>
#include <span>

#include "qcurve/curve.hpp"
#include "qcurve/kernel.hpp"
#include "qcurve/quaternion.hpp"

namespace qcurve {

/// Shape parameter of the Salkowski family and the derived quantities that
/// fix its domain. n = m / sqrt(1 + m^2); the curves are evaluated on the
/// safe domain |t| <= pi/(2|n|) - margin, where cos(nt) > 0.
struct SalkowskiParams {
    double m = 1.0;
    double n = 0.0;
    double margin = 0.0;

    /// Validates m (nonzero, finite, n != +-1/2) and the margin
    /// (defaults to 5% of pi/(2|n|)). Throws ParameterError.
    static SalkowskiParams make(double m, std::optional<double> margin = std::nullopt);

    double half_width() const;          ///< pi / (2|n|)
    Interval safe_domain() const;       ///< [-half_width + margin, half_width - margin]
    /// [margin, half_width - margin]: the part of the safe domain with t > 0,
    /// clear of the zero of tan(nt).
    Interval positive_domain() const;
    double speed(double t) const;       ///< cos(nt) / sqrt(1 + m^2)
    double arc_length(double t) const;  ///< sin(nt) / m, measured from t = 0
};

double default_margin(double m);

struct Frame {
    SpatialQuaternion tangent;
    SpatialQuaternion normal1;
    SpatialQuaternion normal2;
};

/// Salkowski curve of shape m on its safe domain, with analytic derivatives of
/// orders 1..3 attached. Curvature is identically 1 and the speed is
/// cos(nt)/sqrt(1+m^2). With the torsion sign used throughout this library
/// (normal2' = -r normal1) its torsion is -tan(nt).
Curve salkowski(double m, std::optional<double> margin = std::nullopt);

/// Closed-form Frenet frame of salkowski(m) at t. Throws ParameterError when
/// |nt| >= pi/2.
Frame salkowski_frame_closed_form(double m, double t);

/// Anti-Salkowski curve: the binormal integral of salkowski(m) in closed form,
/// curvature |tan(nt)| and torsion 1, defined on the Salkowski safe domain
/// (the frame is undefined at t = 0). Analytic first derivative attached.
Curve anti_salkowski(double m, std::optional<double> margin = std::nullopt);

/// The anti-Salkowski closed form exactly as it is usually printed. It is
/// (1/n) diag(1, 1, -1) applied to anti_salkowski(m), up to translation, and
/// therefore has curvature n|tan(nt)| and torsion -n.
Curve anti_salkowski_printed(double m, std::optional<double> margin = std::nullopt);

/// beta(t) = int_{t0}^{t} normal2(u) |c'(u)| du over the grid, returned as a
/// curve whose velocity is the cubic spline through the sampled integrand
/// (positions are its exact integral). beta is unit speed in the arc length of c.
/// Uses the sign-aligned binormal of the frame field. Propagates frame errors.
Curve binormal_integral(const Curve& c, std::span<const double> grid, double h);
Curve binormal_integral(const Curve& c, std::span<const double> grid);

/// point + t direction on [0, 1] (or `domain`). direction must be nonzero.
Curve line(const SpatialQuaternion& point, const SpatialQuaternion& direction, Interval domain = {0.0, 1.0});

/// (R cos t, R sin t, 0) on [0, 2 pi] (or `domain`); curvature 1/R, torsion 0.
Curve circle(double radius, std::optional<Interval> domain = std::nullopt);

/// (a cos t, a sin t, b t) on [0, 4 pi] (or `domain`);
/// curvature |a|/(a^2+b^2), torsion b/(a^2+b^2).
Curve circular_helix(double a, double b, std::optional<Interval> domain = std::nullopt);

} // namespace qcurve
