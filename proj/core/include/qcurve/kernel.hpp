#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qcurve/curve.hpp"
#include "qcurve/quaternion.hpp"

namespace qcurve {

/// Default finite-difference step: 1e-4 of the domain length.
double default_fd_step(const Curve& c);

/// order-th derivative (1..3) of c at t. Uses the analytic map when attached;
/// otherwise differences the highest attached lower order with an O(h^4)
/// stencil (5 points for first/second differences, 7 for third), shifted to a
/// one-sided stencil of the same order when the central one leaves the domain.
///
/// Throws ParameterError for h <= 0, h below 1e-12 of the domain length, or a
/// domain too short to hold the stencil.
SpatialQuaternion derivative(const Curve& c, double t, int order, double h);
SpatialQuaternion derivative(const Curve& c, double t, int order);

/// Integral of |c'| over [t0, t1] by adaptive Simpson (absolute tolerance
/// 1e-10, depth 40). Negative when t1 < t0.
double arc_length(const Curve& c, double t0, double t1);
double arc_length(const Curve& c, double t0, double t1, double h);

/// Parameter t with arc_length(c, domain.lo, t) = s, by bracketed Newton.
/// Throws SingularPointError if the speed vanishes at an iterate.
double param_at_arclength(const Curve& c, double s);
double param_at_arclength(const Curve& c, double s, double h);

/// Thresholds below which the speed or curvature counts as zero.
struct FrameTolerance {
    double speed = 1e-10;
    double curvature = 1e-6;
};

struct FrenetSample {
    double t = 0.0;
    double s = 0.0;  ///< arc length from the start of the domain (or field)
    double speed = 0.0;
    SpatialQuaternion tangent;
    SpatialQuaternion normal1;
    SpatialQuaternion normal2;
    double k = 0.0;  ///< curvature, >= 0
    double r = 0.0;  ///< torsion, signed so that normal2' = -r normal1
};

/// Frenet apparatus at t:
///   k = |c' ^ c''| / |c'|^3,  r = <c' ^ c'', c'''> / |c' ^ c''|^2,
///   tangent = c'/|c'|, normal1 = (dt/ds)/k, normal2 = tangent ^ normal1.
/// The sample's s is the arc length from the domain start.
FrenetSample frenet_at(const Curve& c, double t, double h, FrameTolerance tol = {});
FrenetSample frenet_at(const Curve& c, double t);

/// Same as frenet_at but leaves s = 0 (skips the quadrature).
FrenetSample frenet_local(const Curve& c, double t, double h, FrameTolerance tol = {});

enum class Provenance { Analytic, FiniteDifference };

/// Frenet samples on a strictly increasing grid with cumulative arc length.
///
/// The (normal1, normal2) pair of each sample is sign-aligned with its
/// predecessor; flipped[i] marks samples whose pair was negated relative to
/// frenet_at (only possible across points where k is close to zero).
struct FrameField {
    std::vector<double> grid;
    std::vector<FrenetSample> samples;
    std::vector<bool> flipped;
    Provenance provenance = Provenance::FiniteDifference;

    std::size_t size() const { return samples.size(); }
    std::vector<double> arc_lengths() const;
    std::vector<double> curvatures() const;
    std::vector<double> torsions() const;
};

/// Throws FrameError subclasses carrying the offending grid index.
FrameField frame_field(const Curve& c, std::span<const double> grid, double h, FrameTolerance tol = {});
FrameField frame_field(const Curve& c, std::span<const double> grid);

/// Flips (normal1, normal2) pairs so adjacent principal normals never point
/// apart. Returns per-sample flip flags.
std::vector<bool> align_frame_signs(std::span<FrenetSample> samples);

/// Total curvature phi(s) = int k ds, one value per sample (trapezoid), zero at the first sample.
std::vector<double> total_curvature_samples(const FrameField& ff);

/// Total curvature from the field's first grid point up to parameter t.
/// Throws RangeError outside the grid.
double total_curvature(const FrameField& ff, double t);

struct TangentOdeResidual {
    std::vector<double> phi;     ///< total curvature at the evaluated samples
    std::vector<double> norms;   ///< |residual| at those samples
    double max_norm = 0.0;
};

/// Residual of the third-order tangent equation
///   d/dphi( t''/f ) + ((1 + f^2)/f) t' - (f'/f^2) t = 0,   f = r/k,
/// with ' = d/dphi, evaluated by second-order differences on the field's
/// total-curvature grid. Three samples at each end are skipped.
/// Throws DegenerateRatioError if |f| <= f_tol anywhere, UndefinedFrameError if k vanishes.
TangentOdeResidual tangent_ode_residual(const FrameField& ff, double f_tol = 1e-6);

} // namespace qcurve
