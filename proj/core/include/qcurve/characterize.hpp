#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcurve/curve.hpp"
#include "qcurve/kernel.hpp"
#include "qcurve/quaternion.hpp"

namespace qcurve {

inline constexpr double kDefaultVerdictTolerance = 1e-4;

// ---------------------------------------------------------------------------
// Slant helices

/// Result of searching for a fixed unit direction d making a constant angle
/// with the principal normal.
struct SlantHelixReport {
    SpatialQuaternion axis;                   ///< unit, mean of the per-sample candidates
    double cos_angle = 0.0;                   ///< fitted cos(theta), >= 0
    double max_angle_deviation = 0.0;         ///< sup |<axis, n1_i> - cos_angle|
    double max_axis_drift = 0.0;              ///< sup |d_i - d_0|
    int branch = 1;                           ///< sign of <d, n2> (the +- of the axis formula)
    bool plane_curve = false;                 ///< torsion vanishes: degenerate theta = pi/2 case
    bool verdict = false;
    std::vector<SpatialQuaternion> axis_samples;  ///< d_i, one per field sample
};

/// Per sample the candidate axis is
///   d_i = cos(theta) n1 + x (f t + n2),  x = +-sin(theta)/sqrt(1 + f^2),  f = r/k,
/// the only unit vectors with <d, n1> = cos(theta) and <d, n1>' = 0. theta and
/// the sign branch are chosen together to minimize the spread of the d_i
/// (a 2x2 eigenproblem in (cos theta, +-sin theta)).
/// verdict: drift and angle deviation both below tol, and the curve is not planar.
/// Throws UndefinedFrameError if k <= tol anywhere.
SlantHelixReport slant_helix_check(const FrameField& ff, double tol = kDefaultVerdictTolerance);

struct TorsionLawReport {
    double b = 0.0;              ///< fitted slope, r(s) = +-b (s - origin) / sqrt(1 - b^2 (s - origin)^2)
    double theta = 0.0;          ///< arccot(b)
    double origin = 0.0;         ///< arc length (field coordinates) where the torsion vanishes
    int branch = 1;              ///< + or - sign of the law
    double max_residual = 0.0;   ///< sup |r_i - law(s_i)|
    bool degenerate_plane = false;
    bool verdict = false;
};

/// Fits the unit-curvature torsion law. The law is linear after the map
/// r -> r / sqrt(1 + r^2) = +-b (s - origin), so b, the branch and the origin
/// come from one least-squares line; the residual is then measured on r.
/// Throws NotUnitCurvatureError if |k - 1| > tol somewhere, DomainExceededError
/// if |b (s - origin)| >= 1 at a sample.
TorsionLawReport salkowski_torsion_law(const FrameField& ff, double tol = kDefaultVerdictTolerance,
                                       double residual_tol = 1e-3);

struct RatioConstancyReport {
    double tan_theta = 0.0;       ///< mean of f = r/k
    double max_deviation = 0.0;   ///< sup |f_i - mean|
    bool verdict = false;
};

/// A curve is an n2-slant helix exactly when f = r/k is constant.
RatioConstancyReport n2_slant_helix_check(const FrameField& ff, double tol = kDefaultVerdictTolerance);

// ---------------------------------------------------------------------------
// Binormal-integral duality

struct DualityReport {
    double curvature_residual = 0.0;  ///< sup | k_beta - |r_alpha| |
    double torsion_residual = 0.0;    ///< sup | r_beta - k_alpha |
    double tangent_residual = 0.0;    ///< sup | t_beta - n2_alpha |
    double normal1_residual = 0.0;    ///< sup | n1_beta - n1_alpha |
    double normal2_residual = 0.0;    ///< sup | n2_beta + t_alpha |
    double speed_residual = 0.0;      ///< sup | |beta'| - |alpha'| |  (beta is unit speed in s_alpha)
    std::size_t compared = 0;         ///< samples where all relations were evaluated
    std::size_t skipped = 0;          ///< samples where k_beta vanished (frame relations skipped)
    bool verdict = false;

    double max_residual() const;
};

/// Builds beta = binormal_integral(c, grid), evaluates both Frenet apparatus
/// at every grid point (equal t means equal arc length) and reports the
/// residual of each relation.
DualityReport anti_salkowski_duality_check(const Curve& c, std::span<const double> grid, double tol = 1e-3);

struct AntiSalkowskiSlantReport {
    SlantHelixReport anti_salkowski;
    SlantHelixReport salkowski;
    double axis_mismatch = 0.0;  ///< min(|a - b|, |a + b|)
    bool verdict = false;
};

/// slant_helix_check on anti_salkowski(m) and salkowski(m), both sampled with
/// `points` nodes on the positive half of the safe domain.
AntiSalkowskiSlantReport slant_helix_of_anti_salkowski(double m, std::size_t points = 2001,
                                                       double tol = kDefaultVerdictTolerance, double axis_tol = 1e-3);

// ---------------------------------------------------------------------------
// Similar curves

enum class Criterion { Tangent, Normal, Binormal, Ratio };

std::string to_string(Criterion c);
/// Accepts tangent | normal | binormal | ratio. Throws ParameterError otherwise.
Criterion parse_criterion(const std::string& name);

struct SimilarityReport {
    Criterion criterion = Criterion::Ratio;
    /// (s_beta, lambda) with lambda = ds_alpha/ds_beta at matched samples.
    std::vector<std::pair<double, double>> transformation_samples;
    double max_discrepancy = 0.0;
    /// +1: proper gauge (rotation) / equal ratios; -1: improper gauge
    /// (rotation composed with a reflection) / opposite ratios.
    int branch = 1;
    Matrix3 gauge = Matrix3::identity();  ///< maps a's frame vectors onto b's
    std::string special_case;             ///< "", "lines" or "plane-curves"
    bool verdict = false;
};

/// Compares two curves sampled on their grids. Samples are matched by equal
/// total curvature measured from each grid's first point, on a common grid
/// over the overlapping range.
///   ratio:     sup |branch * f_a - f_b|
///   tangent:   sup |Q t_a - t_b|
///   normal:    sup |Q n1_a - n1_b|
///   binormal:  sup |det(Q) Q n2_a - n2_b|
/// where Q is the orthogonal Procrustes fit of the tangents (det = branch);
/// both branches are tried and the better one kept.
/// Two straight lines, or two plane curves, are similar without further test.
/// Throws CriterionInapplicableError for a line against a non-line (or the
/// binormal criterion on a torsion-free curve against a twisted one), and
/// IncomparableRangeError when the total-curvature ranges do not overlap.
SimilarityReport similar_check(const Curve& a, std::span<const double> grid_a, const Curve& b,
                               std::span<const double> grid_b, Criterion criterion,
                               double tol = kDefaultVerdictTolerance);

struct CorollaryCase {
    std::string name;
    std::string description;
    std::vector<SimilarityReport> reports;  ///< one per criterion (tangent, normal, binormal, ratio)
    bool criteria_agree = false;
    bool pass = false;
};

/// Similarity of the standard families: straight lines, plane curves,
/// helices with equal r/k, Salkowski curves (rigid and antipodal copies) and
/// anti-Salkowski curves. Each case runs all four criteria; failures are
/// reported, never thrown.
std::vector<CorollaryCase> corollary_suite(double tol = kDefaultVerdictTolerance, std::size_t points = 2001);

} // namespace qcurve
