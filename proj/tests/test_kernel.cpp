#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include <qcurve/errors.hpp>
#include <qcurve/families.hpp>
#include <qcurve/kernel.hpp>
#include <qcurve/numerics.hpp>

using namespace qcurve;

namespace {

constexpr double kPi = std::numbers::pi;

/// Helix (a cos t, a sin t, b t) with no analytic derivatives, so every order is differenced.
Curve bare_helix(double a, double b, Interval d = {0.0, 4.0 * kPi}) {
    return Curve(d, [=](double t) { return SpatialQuaternion{a * std::cos(t), a * std::sin(t), b * t}; });
}

Curve bare_salkowski(double m) {
    const Curve s = salkowski(m);
    return Curve(s.domain(), [s](double t) { return s(t); });
}

} // namespace

TEST(Derivative, CircleMatchesClosedForm) {
    const Curve c = Curve({0.0, 2.0 * kPi}, [](double t) { return SpatialQuaternion{2 * std::cos(t), 2 * std::sin(t), 0}; });
    for (double t : {0.0, 0.4, 3.0, 2.0 * kPi}) {
        EXPECT_LT(distance(derivative(c, t, 1), {-2 * std::sin(t), 2 * std::cos(t), 0}), 1e-9);
        EXPECT_LT(distance(derivative(c, t, 2), {-2 * std::cos(t), -2 * std::sin(t), 0}), 1e-6);
        EXPECT_LT(distance(derivative(c, t, 3), {2 * std::sin(t), -2 * std::cos(t), 0}), 1e-3);
    }
}

TEST(Derivative, SalkowskiVelocityAtOrigin) {
    // Speed cos(0)/sqrt(2) along the tangent -(1, 0, 0).
    const Curve c = bare_salkowski(1.0);
    const SpatialQuaternion v = derivative(c, 0.0, 1);
    EXPECT_LT(distance(v, {-1.0 / std::sqrt(2.0), 0, 0}), 1e-10);
}

TEST(Derivative, FirstDifferenceIsFourthOrder) {
    const Curve c = bare_helix(1.5, 0.5);
    const double t = 1.0;
    const SpatialQuaternion exact{-1.5 * std::sin(t), 1.5 * std::cos(t), 0.5};
    const double e1 = distance(derivative(c, t, 1, 0.04), exact);
    const double e2 = distance(derivative(c, t, 1, 0.02), exact);
    EXPECT_NEAR(e1 / e2, 16.0, 1.0);
}

TEST(Derivative, OneSidedStencilNearDomainEnd) {
    const Curve c = bare_helix(1.0, 1.0, {0.0, 1.0});
    EXPECT_LT(distance(derivative(c, 0.0, 1, 1e-3), {0, 1, 1}), 1e-9);
    EXPECT_LT(distance(derivative(c, 1.0, 2, 1e-3), {-std::cos(1.0), -std::sin(1.0), 0}), 1e-5);
}

TEST(Derivative, RejectsDegenerateSteps) {
    const Curve c = bare_helix(1.0, 1.0, {0.0, 1.0});
    EXPECT_THROW(derivative(c, 0.5, 1, 0.0), ParameterError);
    EXPECT_THROW(derivative(c, 0.5, 1, -1e-3), ParameterError);
    EXPECT_THROW(derivative(c, 0.5, 1, 1e-14), ParameterError);
    EXPECT_THROW(derivative(c, 0.5, 1, 0.5), ParameterError);
}

TEST(ArcLength, HelixLengthIsSpeedTimesDuration) {
    const Curve c = circular_helix(1.0, 1.0);
    EXPECT_NEAR(arc_length(c, 0, 4 * kPi), std::sqrt(2.0) * 4 * kPi, 1e-9);
    EXPECT_NEAR(arc_length(c, 4 * kPi, 0), -std::sqrt(2.0) * 4 * kPi, 1e-9);
}

TEST(ArcLength, SalkowskiArcLengthRoundTrip) {
    const Curve c = salkowski(1.0);
    const double n = 1.0 / std::sqrt(2.0);
    const double lo = c.domain().lo;
    for (double t : {-1.5, -0.3, 0.0, 0.9, 2.0}) {
        const double s = arc_length(c, lo, t);
        EXPECT_NEAR(s, std::sin(n * t) - std::sin(n * lo), 1e-10);
        EXPECT_NEAR(param_at_arclength(c, s), t, 1e-9);
    }
}

TEST(Frenet, CircleOfRadiusTwo) {
    const Curve c = circle(2.0);
    const FrenetSample f = frenet_at(c, 1.0);
    EXPECT_NEAR(f.k, 0.5, 1e-9);
    EXPECT_NEAR(f.r, 0.0, 1e-6);
    EXPECT_NEAR(f.speed, 2.0, 1e-12);
    EXPECT_NEAR(f.s, 2.0, 1e-9);
    EXPECT_LT(distance(f.normal1, {-std::cos(1.0), -std::sin(1.0), 0}), 1e-9);
    EXPECT_LT(distance(f.normal2, {0, 0, 1}), 1e-9);
}

TEST(Frenet, HelixCurvatureTorsionAndOrientation) {
    const double a = 2.0, b = 0.5;
    const Curve c = bare_helix(a, b);
    const double h = default_fd_step(c);
    for (double t : {0.5, 3.0, 7.0}) {
        const FrenetSample f = frenet_local(c, t, h);
        EXPECT_NEAR(f.k, a / (a * a + b * b), 1e-7);
        EXPECT_NEAR(f.r, b / (a * a + b * b), 1e-6);
        EXPECT_LT(distance(vec_cross(f.tangent, f.normal1), f.normal2), 1e-12);
        EXPECT_NEAR(vec_dot(f.tangent, f.normal1), 0.0, 1e-12);
    }
}

TEST(Frenet, LineHasNoPrincipalNormal) {
    const Curve c = line({1, 2, 3}, {1, 1, 0});
    EXPECT_THROW(frenet_at(c, 0.5), UndefinedFrameError);
}

TEST(FrameField, ErrorsCarryGridIndex) {
    const Curve inflection({-1.0, 1.0}, [](double t) { return SpatialQuaternion{t, t * t * t, 0}; });
    const auto grid = uniform_grid({-1.0, 1.0}, 5);
    try {
        frame_field(inflection, grid);
        FAIL() << "expected UndefinedFrameError";
    } catch (const UndefinedFrameError& e) {
        ASSERT_TRUE(e.index().has_value());
        EXPECT_EQ(*e.index(), 2u);
        EXPECT_DOUBLE_EQ(e.t(), 0.0);
    }
    const Curve cusp({-1.0, 1.0}, [](double t) { return SpatialQuaternion{t * t, t * t * t, 0}; });
    try {
        frame_field(cusp, grid);
        FAIL() << "expected SingularPointError";
    } catch (const SingularPointError& e) {
        ASSERT_TRUE(e.index().has_value());
        EXPECT_EQ(*e.index(), 2u);
    }
}

TEST(FrameField, ProvenanceAndSignAlignment) {
    const Curve c = circular_helix(1.0, 1.0);
    const auto grid = uniform_grid(c.domain(), 101);
    const FrameField ff = frame_field(c, grid);
    ASSERT_EQ(ff.size(), 101u);
    for (std::size_t i = 1; i < ff.size(); ++i) {
        EXPECT_GT(vec_dot(ff.samples[i].normal1, ff.samples[i - 1].normal1), 0.0);
        EXPECT_FALSE(ff.flipped[i]);
    }
    EXPECT_NEAR(ff.arc_lengths().back(), std::sqrt(2.0) * 4 * kPi, 1e-8);
}

TEST(TotalCurvature, FullCircleIsTwoPi) {
    const Curve c = circle(3.0);
    const FrameField ff = frame_field(c, uniform_grid(c.domain(), 401));
    const auto phi = total_curvature_samples(ff);
    EXPECT_DOUBLE_EQ(phi.front(), 0.0);
    EXPECT_NEAR(phi.back(), 2 * kPi, 1e-8);
    EXPECT_NEAR(total_curvature(ff, kPi), kPi, 1e-8);
    EXPECT_THROW(total_curvature(ff, 7.0), RangeError);
    EXPECT_THROW(total_curvature(ff, -0.1), RangeError);
}

TEST(FrenetEquations, HoldAlongHelixWithSecondOrderConvergence) {
    // Difference the sampled frame along s and compare with the Frenet equations.
    auto residual = [](std::size_t n) {
        const Curve c = bare_helix(1.0, 0.7, {0.0, 6.0});
        const FrameField ff = frame_field(c, uniform_grid(c.domain(), n));
        const auto s = ff.arc_lengths();
        std::vector<SpatialQuaternion> t, n1, n2;
        for (const auto& f : ff.samples) {
            t.push_back(f.tangent);
            n1.push_back(f.normal1);
            n2.push_back(f.normal2);
        }
        const auto dt = numerics::differentiate<SpatialQuaternion>(s, t);
        const auto dn1 = numerics::differentiate<SpatialQuaternion>(s, n1);
        const auto dn2 = numerics::differentiate<SpatialQuaternion>(s, n2);
        double worst = 0;
        for (std::size_t i = 0; i < ff.size(); ++i) {
            const auto& f = ff.samples[i];
            worst = std::max(worst, distance(dt[i], f.k * f.normal1));
            worst = std::max(worst, distance(dn1[i], -f.k * f.tangent + f.r * f.normal2));
            worst = std::max(worst, distance(dn2[i], -f.r * f.normal1));
        }
        return worst;
    };
    const double r1 = residual(81), r2 = residual(161);
    EXPECT_LT(r2, 1e-3);
    EXPECT_NEAR(r1 / r2, 4.0, 0.5);
}

TEST(FrenetEquations, InvariantUnderReparametrization) {
    const Curve c = bare_helix(1.0, 0.5, {0.0, 3.0});
    // u -> t = u + 0.2 u^2 maps [0, 2.5] onto [0, 3].
    const Curve g({0.0, 2.5}, [](double u) {
        const double t = u + 0.2 * u * u;
        return SpatialQuaternion{std::cos(t), std::sin(t), 0.5 * t};
    });
    for (double u : {0.3, 1.1, 2.0}) {
        const double t = u + 0.2 * u * u;
        const FrenetSample a = frenet_local(c, t, default_fd_step(c));
        const FrenetSample b = frenet_local(g, u, default_fd_step(g));
        EXPECT_NEAR(a.k, b.k, 1e-5);
        EXPECT_NEAR(a.r, b.r, 1e-5);
        EXPECT_LT(distance(a.tangent, b.tangent), 1e-5);
        EXPECT_LT(distance(a.normal2, b.normal2), 1e-5);
    }
}

TEST(TangentOde, ConstantRatioHelixReducesCleanly) {
    const Curve c = circular_helix(1.0, 1.0);
    const FrameField ff = frame_field(c, uniform_grid(c.domain(), 2001));
    const TangentOdeResidual res = tangent_ode_residual(ff);
    EXPECT_LT(res.max_norm, 1e-4);
    EXPECT_EQ(res.norms.size(), res.phi.size());
}

TEST(TangentOde, PlaneCurveIsDegenerate) {
    const Curve c = circle(1.0);
    const FrameField ff = frame_field(c, uniform_grid(c.domain(), 101));
    EXPECT_THROW(tangent_ode_residual(ff), DegenerateRatioError);
}
