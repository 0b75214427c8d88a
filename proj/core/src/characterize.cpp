#include "qcurve/characterize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include <Eigen/Dense>

#include "qcurve/errors.hpp"
#include "qcurve/families.hpp"
#include "qcurve/numerics.hpp"

namespace qcurve {

namespace {

SpatialQuaternion mean_of(const std::vector<SpatialQuaternion>& v) {
    SpatialQuaternion acc{};
    for (const auto& x : v) {
        acc += x;
    }
    return acc / static_cast<double>(v.size());
}

double max_abs_torsion(const FrameField& ff) {
    double out = 0.0;
    for (const auto& s : ff.samples) {
        out = std::max(out, std::abs(s.r));
    }
    return out;
}

void require_regular(const FrameField& ff, double tol, const char* who) {
    for (std::size_t i = 0; i < ff.size(); ++i) {
        if (!(ff.samples[i].k > tol)) {
            throw UndefinedFrameError(std::string(who) + ": curvature vanishes", ff.samples[i].t, i);
        }
    }
}

} // namespace

// ---------------------------------------------------------------------------

SlantHelixReport slant_helix_check(const FrameField& ff, double tol) {
    if (ff.size() < 2) {
        throw ParameterError("slant_helix_check: need at least 2 samples");
    }
    require_regular(ff, tol, "slant_helix_check");

    const std::size_t n = ff.size();
    std::vector<SpatialQuaternion> A(n), B(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = ff.samples[i];
        const double f = s.r / s.k;
        A[i] = s.normal1;
        B[i] = (f * s.tangent + s.normal2) / std::sqrt(1.0 + f * f);
    }
    const SpatialQuaternion Am = mean_of(A), Bm = mean_of(B);
    double gaa = 0.0, gab = 0.0, gbb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const SpatialQuaternion da = A[i] - Am, db = B[i] - Bm;
        gaa += vec_dot(da, da);
        gab += vec_dot(da, db);
        gbb += vec_dot(db, db);
    }
    // Smallest eigenvector of [[gaa, gab], [gab, gbb]].
    const double half_diff = 0.5 * (gaa - gbb);
    const double rad = std::hypot(half_diff, gab);
    const double lmin = 0.5 * (gaa + gbb) - rad;
    double u0, u1;
    if (rad == 0.0) {
        // Isotropic spread: every direction is equally good; take the n1 = 0 axis.
        u0 = 0.0;
        u1 = 1.0;
    } else if (std::abs(gaa - lmin) >= std::abs(gbb - lmin)) {
        u0 = -gab;
        u1 = gaa - lmin;
    } else {
        u0 = gbb - lmin;
        u1 = -gab;
    }
    const double un = std::hypot(u0, u1);
    u0 /= un;
    u1 /= un;
    if (u0 < 0.0 || (u0 == 0.0 && u1 < 0.0)) {
        u0 = -u0;
        u1 = -u1;
    }

    SlantHelixReport rep;
    rep.cos_angle = u0;
    rep.branch = u1 < 0.0 ? -1 : 1;
    rep.axis_samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        rep.axis_samples[i] = u0 * A[i] + u1 * B[i];
    }
    rep.axis = normalized(mean_of(rep.axis_samples));
    for (std::size_t i = 0; i < n; ++i) {
        rep.max_angle_deviation =
            std::max(rep.max_angle_deviation, std::abs(vec_dot(rep.axis, ff.samples[i].normal1) - rep.cos_angle));
        rep.max_axis_drift = std::max(rep.max_axis_drift, distance(rep.axis_samples[i], rep.axis_samples[0]));
    }
    rep.plane_curve = max_abs_torsion(ff) <= tol;
    rep.verdict = !rep.plane_curve && rep.max_axis_drift <= tol && rep.max_angle_deviation <= tol;
    return rep;
}

TorsionLawReport salkowski_torsion_law(const FrameField& ff, double tol, double residual_tol) {
    if (ff.size() < 3) {
        throw ParameterError("salkowski_torsion_law: need at least 3 samples");
    }
    for (std::size_t i = 0; i < ff.size(); ++i) {
        if (std::abs(ff.samples[i].k - 1.0) > tol) {
            throw NotUnitCurvatureError("salkowski_torsion_law: curvature is not identically 1 (sample " +
                                        std::to_string(i) + ", k = " + std::to_string(ff.samples[i].k) + ")");
        }
    }

    TorsionLawReport rep;
    if (max_abs_torsion(ff) <= tol) {
        rep.degenerate_plane = true;
        rep.b = 0.0;
        rep.theta = std::numbers::pi / 2.0;
        rep.max_residual = max_abs_torsion(ff);
        rep.verdict = rep.max_residual <= residual_tol;
        return rep;
    }

    const std::size_t n = ff.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& s : ff.samples) {
        const double g = s.r / std::sqrt(1.0 + s.r * s.r);
        sx += s.s;
        sy += g;
        sxx += s.s * s.s;
        sxy += s.s * g;
    }
    const double dn = static_cast<double>(n);
    const double denom = dn * sxx - sx * sx;
    if (!(denom > 0.0)) {
        throw ParameterError("salkowski_torsion_law: samples span no arc length");
    }
    const double slope = (dn * sxy - sx * sy) / denom;
    const double icpt = (sy - slope * sx) / dn;

    rep.branch = slope < 0.0 ? -1 : 1;
    rep.b = std::abs(slope);
    rep.theta = std::atan2(1.0, rep.b);
    rep.origin = rep.b > 0.0 ? -icpt / slope : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = ff.samples[i];
        const double u = rep.b * (s.s - rep.origin);
        if (!(std::abs(u) < 1.0)) {
            throw DomainExceededError("salkowski_torsion_law: |b (s - origin)| >= 1 at sample " + std::to_string(i));
        }
        const double law = rep.branch * u / std::sqrt(1.0 - u * u);
        rep.max_residual = std::max(rep.max_residual, std::abs(s.r - law));
    }
    rep.verdict = rep.max_residual <= residual_tol;
    return rep;
}

RatioConstancyReport n2_slant_helix_check(const FrameField& ff, double tol) {
    if (ff.size() < 1) {
        throw ParameterError("n2_slant_helix_check: empty field");
    }
    require_regular(ff, tol, "n2_slant_helix_check");
    RatioConstancyReport rep;
    double sum = 0.0;
    for (const auto& s : ff.samples) {
        sum += s.r / s.k;
    }
    rep.tan_theta = sum / static_cast<double>(ff.size());
    for (const auto& s : ff.samples) {
        rep.max_deviation = std::max(rep.max_deviation, std::abs(s.r / s.k - rep.tan_theta));
    }
    rep.verdict = rep.max_deviation <= tol;
    return rep;
}

// ---------------------------------------------------------------------------

double DualityReport::max_residual() const {
    return std::max({curvature_residual, torsion_residual, tangent_residual, normal1_residual, normal2_residual,
                     speed_residual});
}

DualityReport anti_salkowski_duality_check(const Curve& c, std::span<const double> grid, double tol) {
    const double h = default_fd_step(c);
    const FrameField alpha = frame_field(c, grid, h);
    const Curve beta = binormal_integral(c, grid, h);
    const double hb = default_fd_step(beta);
    const FrameTolerance ftol;

    DualityReport rep;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const FrenetSample& a = alpha.samples[i];
        const double t = alpha.grid[i];
        const SpatialQuaternion d1 = derivative(beta, t, 1, hb);
        const SpatialQuaternion d2 = derivative(beta, t, 2, hb);
        const double sp = norm(d1);
        const double kb = norm(vec_cross(d1, d2)) / (sp * sp * sp);
        rep.speed_residual = std::max(rep.speed_residual, std::abs(sp - a.speed));
        rep.curvature_residual = std::max(rep.curvature_residual, std::abs(kb - std::abs(a.r)));
        if (!(kb > ftol.curvature)) {
            ++rep.skipped;
            continue;
        }
        const FrenetSample b = frenet_local(beta, t, hb, ftol);
        rep.torsion_residual = std::max(rep.torsion_residual, std::abs(b.r - a.k));
        rep.tangent_residual = std::max(rep.tangent_residual, distance(b.tangent, a.normal2));
        rep.normal1_residual = std::max(rep.normal1_residual, distance(b.normal1, a.normal1));
        rep.normal2_residual = std::max(rep.normal2_residual, distance(b.normal2, -a.tangent));
        ++rep.compared;
    }
    rep.verdict = rep.max_residual() < tol;
    return rep;
}

AntiSalkowskiSlantReport slant_helix_of_anti_salkowski(double m, std::size_t points, double tol, double axis_tol) {
    const SalkowskiParams p = SalkowskiParams::make(m);
    const std::vector<double> grid = uniform_grid(p.positive_domain(), points);
    AntiSalkowskiSlantReport rep;
    rep.anti_salkowski = slant_helix_check(frame_field(anti_salkowski(m), grid), tol);
    rep.salkowski = slant_helix_check(frame_field(salkowski(m), grid), tol);
    const SpatialQuaternion a = rep.anti_salkowski.axis, b = rep.salkowski.axis;
    rep.axis_mismatch = std::min(distance(a, b), distance(a, -b));
    rep.verdict = rep.anti_salkowski.verdict && rep.salkowski.verdict && rep.axis_mismatch <= axis_tol;
    return rep;
}

// ---------------------------------------------------------------------------

std::string to_string(Criterion c) {
    switch (c) {
    case Criterion::Tangent: return "tangent";
    case Criterion::Normal: return "normal";
    case Criterion::Binormal: return "binormal";
    case Criterion::Ratio: return "ratio";
    }
    return "unknown";
}

Criterion parse_criterion(const std::string& name) {
    if (name == "tangent") return Criterion::Tangent;
    if (name == "normal") return Criterion::Normal;
    if (name == "binormal") return Criterion::Binormal;
    if (name == "ratio") return Criterion::Ratio;
    throw ParameterError("unknown similarity criterion '" + name + "' (tangent|normal|binormal|ratio)");
}

namespace {

struct Prepared {
    bool line = false;
    double max_k = 0.0;
    double max_r = 0.0;
    std::optional<FrameField> field;
    std::vector<double> phi;
};

Prepared prepare(const Curve& c, std::span<const double> grid) {
    Prepared p;
    const double h = default_fd_step(c);
    const FrameTolerance ftol;
    for (double t : grid) {
        const SpatialQuaternion d1 = derivative(c, t, 1, h);
        const SpatialQuaternion d2 = derivative(c, t, 2, h);
        const double sp = norm(d1);
        if (!(sp > ftol.speed)) {
            throw SingularPointError("similar_check: speed vanishes", t);
        }
        p.max_k = std::max(p.max_k, norm(vec_cross(d1, d2)) / (sp * sp * sp));
    }
    if (p.max_k <= ftol.curvature) {
        p.line = true;
        return p;
    }
    p.field = frame_field(c, grid, h, ftol);
    p.max_r = max_abs_torsion(*p.field);
    p.phi = total_curvature_samples(*p.field);
    return p;
}

struct Resampled {
    std::vector<SpatialQuaternion> t, n1, n2;
    std::vector<double> k, r, s;
};

Resampled resample(const Prepared& p, const std::vector<double>& phi_q) {
    const FrameField& ff = *p.field;
    const std::size_t n = ff.size();
    std::vector<SpatialQuaternion> t(n), n1(n), n2(n);
    std::vector<double> k(n), r(n), s(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = ff.samples[i].tangent;
        n1[i] = ff.samples[i].normal1;
        n2[i] = ff.samples[i].normal2;
        k[i] = ff.samples[i].k;
        r[i] = ff.samples[i].r;
        s[i] = ff.samples[i].s;
    }
    using numerics::interpolate_linear;
    const std::span<const double> x(p.phi);
    Resampled out;
    for (double q : phi_q) {
        out.t.push_back(normalized(interpolate_linear<SpatialQuaternion>(x, t, q)));
        out.n1.push_back(normalized(interpolate_linear<SpatialQuaternion>(x, n1, q)));
        out.n2.push_back(normalized(interpolate_linear<SpatialQuaternion>(x, n2, q)));
        out.k.push_back(interpolate_linear<double>(x, k, q));
        out.r.push_back(interpolate_linear<double>(x, r, q));
        out.s.push_back(interpolate_linear<double>(x, s, q));
    }
    return out;
}

Eigen::Vector3d to_eigen(const SpatialQuaternion& v) { return {v.a1, v.a2, v.a3}; }

Matrix3 from_eigen(const Eigen::Matrix3d& m) {
    Matrix3 out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            out.m[i][j] = m(i, j);
        }
    }
    return out;
}

/// Orthogonal Q with det(Q) = sign minimizing sum |Q a_i - b_i|^2.
Matrix3 procrustes(const std::vector<SpatialQuaternion>& a, const std::vector<SpatialQuaternion>& b, int sign) {
    Eigen::Matrix3d H = Eigen::Matrix3d::Zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        H += to_eigen(a[i]) * to_eigen(b[i]).transpose();
    }
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(H, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Matrix3d U = svd.matrixU();
    const Eigen::Matrix3d V = svd.matrixV();
    const double d = (V * U.transpose()).determinant() < 0.0 ? -1.0 : 1.0;
    Eigen::Matrix3d D = Eigen::Matrix3d::Identity();
    D(2, 2) = d * static_cast<double>(sign);
    return from_eigen(V * D * U.transpose());
}

SimilarityReport compare(const Prepared& a, const Prepared& b, Criterion criterion, double tol) {
    SimilarityReport rep;
    rep.criterion = criterion;

    if (a.line || b.line) {
        if (a.line && b.line) {
            rep.special_case = "lines";
            rep.max_discrepancy = std::max(a.max_k, b.max_k);
            rep.verdict = true;
            return rep;
        }
        throw CriterionInapplicableError("similar_check: a straight line is only comparable with another line");
    }
    const bool a_plane = a.max_r <= tol, b_plane = b.max_r <= tol;
    if (a_plane && b_plane) {
        rep.special_case = "plane-curves";
        rep.max_discrepancy = std::max(a.max_r, b.max_r);
        rep.verdict = true;
        return rep;
    }
    if (criterion == Criterion::Binormal && (a_plane || b_plane)) {
        throw CriterionInapplicableError("similar_check: binormal criterion needs nonvanishing torsion on both curves");
    }

    const double overlap = std::min(a.phi.back(), b.phi.back());
    const std::size_t n = std::max(a.phi.size(), b.phi.size());
    if (!(overlap > tol) || n < 2) {
        throw IncomparableRangeError("similar_check: total-curvature ranges do not overlap");
    }
    const std::vector<double> phi = uniform_grid({0.0, overlap}, n);
    const Resampled ra = resample(a, phi);
    const Resampled rb = resample(b, phi);

    auto lambda_samples = [&](bool torsion) {
        std::vector<std::pair<double, double>> out;
        for (std::size_t j = 0; j < n; ++j) {
            if (torsion) {
                if (std::abs(ra.r[j]) > tol) {
                    out.emplace_back(rb.s[j], rb.r[j] / ra.r[j]);
                }
            } else {
                out.emplace_back(rb.s[j], rb.k[j] / ra.k[j]);
            }
        }
        return out;
    };

    if (criterion == Criterion::Ratio) {
        double best = std::numeric_limits<double>::infinity();
        for (int sigma : {1, -1}) {
            double d = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                d = std::max(d, std::abs(sigma * ra.r[j] / ra.k[j] - rb.r[j] / rb.k[j]));
            }
            if (d < best) {
                best = d;
                rep.branch = sigma;
            }
        }
        rep.max_discrepancy = best;
        rep.gauge = Matrix3::diagonal(1.0, 1.0, static_cast<double>(rep.branch));
        rep.transformation_samples = lambda_samples(false);
        rep.verdict = rep.max_discrepancy < tol;
        return rep;
    }

    double best = std::numeric_limits<double>::infinity();
    for (int sigma : {1, -1}) {
        const Matrix3 Q = procrustes(ra.t, rb.t, sigma);
        double d = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            SpatialQuaternion lhs, rhs;
            switch (criterion) {
            case Criterion::Tangent:
                lhs = Q.apply(ra.t[j]);
                rhs = rb.t[j];
                break;
            case Criterion::Normal:
                lhs = Q.apply(ra.n1[j]);
                rhs = rb.n1[j];
                break;
            default:
                lhs = static_cast<double>(sigma) * Q.apply(ra.n2[j]);
                rhs = rb.n2[j];
                break;
            }
            d = std::max(d, distance(lhs, rhs));
        }
        if (d < best) {
            best = d;
            rep.branch = sigma;
            rep.gauge = Q;
        }
    }
    rep.max_discrepancy = best;
    rep.transformation_samples = lambda_samples(criterion == Criterion::Binormal);
    rep.verdict = rep.max_discrepancy < tol;
    return rep;
}

} // namespace

SimilarityReport similar_check(const Curve& a, std::span<const double> grid_a, const Curve& b,
                               std::span<const double> grid_b, Criterion criterion, double tol) {
    return compare(prepare(a, grid_a), prepare(b, grid_b), criterion, tol);
}

std::vector<CorollaryCase> corollary_suite(double tol, std::size_t points) {
    struct Pair {
        std::string name;
        std::string description;
        Curve a;
        std::vector<double> grid_a;
        Curve b;
        std::vector<double> grid_b;
    };

    const Matrix3 rot = Matrix3::rotation({1.0, 2.0, 3.0}, 0.7);
    const SpatialQuaternion shift{1.0, -2.0, 0.5};
    const SalkowskiParams sp = SalkowskiParams::make(1.0);

    std::vector<Pair> pairs;
    {
        Curve a = line({0, 0, 0}, {1, 2, 3});
        Curve b = line({1, 0, 0}, {-1, 0.5, 0}, {0.0, 2.0});
        pairs.push_back({"straight-lines", "line vs line", a, uniform_grid(a.domain(), points), b,
                         uniform_grid(b.domain(), points)});
    }
    {
        Curve a = circle(1.0), b = circle(2.0);
        pairs.push_back({"plane-curves", "circle(1) vs circle(2)", a, uniform_grid(a.domain(), points), b,
                         uniform_grid(b.domain(), points)});
    }
    {
        Curve a = circular_helix(1.0, 1.0), b = circular_helix(2.0, 2.0);
        pairs.push_back({"constant-ratio-helices", "helix(1,1) vs helix(2,2)", a, uniform_grid(a.domain(), points), b,
                         uniform_grid(b.domain(), points)});
    }
    {
        Curve a = salkowski(1.0);
        Curve b = transformed(a, rot, shift);
        const auto g = uniform_grid(sp.safe_domain(), points);
        pairs.push_back({"salkowski-rigid", "salkowski(1) vs a rotated, translated copy", a, g, b, g});
    }
    {
        Curve a = salkowski(1.0);
        Curve b = antipodal(a);
        const auto g = uniform_grid(sp.safe_domain(), points);
        pairs.push_back({"salkowski-antipodal", "salkowski(1) vs its antipodal image", a, g, b, g});
    }
    {
        Curve a = anti_salkowski(1.0);
        Curve b = transformed(a, rot, shift);
        const auto g = uniform_grid(sp.positive_domain(), points);
        pairs.push_back({"anti-salkowski-rigid", "anti-salkowski(1) vs a rotated, translated copy", a, g, b, g});
    }

    std::vector<CorollaryCase> out;
    for (const Pair& p : pairs) {
        CorollaryCase cc;
        cc.name = p.name;
        cc.description = p.description;
        try {
            const Prepared pa = prepare(p.a, p.grid_a);
            const Prepared pb = prepare(p.b, p.grid_b);
            for (Criterion c : {Criterion::Tangent, Criterion::Normal, Criterion::Binormal, Criterion::Ratio}) {
                cc.reports.push_back(compare(pa, pb, c, tol));
            }
            const bool first = cc.reports.front().verdict;
            cc.criteria_agree = std::all_of(cc.reports.begin(), cc.reports.end(),
                                            [&](const SimilarityReport& r) { return r.verdict == first; });
            cc.pass = cc.criteria_agree && first;
        } catch (const Error& e) {
            cc.description += std::string(" [error: ") + e.what() + "]";
            cc.pass = false;
        }
        out.push_back(std::move(cc));
    }
    return out;
}

} // namespace qcurve
