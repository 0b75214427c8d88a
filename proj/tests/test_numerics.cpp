#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include <qcurve/errors.hpp>
#include <qcurve/numerics.hpp>
#include <qcurve/spline.hpp>

using namespace qcurve;
using namespace qcurve::numerics;

TEST(FdWeights, CentralStencilsMatchTextbookCoefficients) {
    const std::vector<double> five{-2, -1, 0, 1, 2};
    const auto w1 = fd_weights(0.0, five, 1);
    const double e1[] = {1.0 / 12, -8.0 / 12, 0, 8.0 / 12, -1.0 / 12};
    const auto w2 = fd_weights(0.0, five, 2);
    const double e2[] = {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12};
    for (int i = 0; i < 5; ++i) {
        EXPECT_NEAR(w1[i], e1[i], 1e-14);
        EXPECT_NEAR(w2[i], e2[i], 1e-14);
    }
    const std::vector<double> seven{-3, -2, -1, 0, 1, 2, 3};
    const auto w3 = fd_weights(0.0, seven, 3);
    const double e3[] = {1.0 / 8, -1.0, 13.0 / 8, 0, -13.0 / 8, 1.0, -1.0 / 8};
    for (int i = 0; i < 7; ++i) {
        EXPECT_NEAR(w3[i], e3[i], 1e-13);
    }
}

TEST(FdWeights, OneSidedStencilIsExactOnPolynomials) {
    const std::vector<double> nodes{0, 0.5, 1.1, 1.4, 2.0};
    auto poly = [](double x) { return 3 - x + 2 * x * x - 0.5 * x * x * x + 0.1 * x * x * x * x; };
    const double x0 = 0.2;
    const double d2 = 4 - 3 * x0 + 1.2 * x0 * x0;
    const auto w = fd_weights(x0, nodes, 2);
    double acc = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        acc += w[i] * poly(nodes[i]);
    }
    EXPECT_NEAR(acc, d2, 1e-11);
}

TEST(AdaptiveSimpson, KnownIntegrals) {
    EXPECT_NEAR(adaptive_simpson([](double x) { return std::sin(x); }, 0, std::numbers::pi), 2.0, 1e-10);
    EXPECT_NEAR(adaptive_simpson([](double x) { return std::exp(x); }, 0, 1), std::exp(1.0) - 1, 1e-10);
    EXPECT_NEAR(adaptive_simpson([](double x) { return std::sqrt(x); }, 0, 1), 2.0 / 3, 1e-8);
    EXPECT_NEAR(adaptive_simpson([](double x) { return x * x; }, 1, 0), -1.0 / 3, 1e-14);
}

TEST(Differentiate, ExactOnQuadraticsOverNonuniformGrid) {
    const std::vector<double> x{0, 0.1, 0.35, 0.4, 0.8, 1.0};
    std::vector<double> y;
    for (double xi : x) {
        y.push_back(1 + 2 * xi - 3 * xi * xi);
    }
    const auto d = differentiate<double>(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) {
        EXPECT_NEAR(d[i], 2 - 6 * x[i], 1e-12);
    }
    EXPECT_THROW(differentiate<double>(std::vector<double>{0, 1}, std::vector<double>{0, 1}), ParameterError);
}

TEST(InterpolateLinear, InsideAndOutside) {
    const std::vector<double> x{0, 1, 3};
    const std::vector<double> y{0, 2, 6};
    EXPECT_DOUBLE_EQ(interpolate_linear<double>(x, y, 2.0), 4.0);
    EXPECT_DOUBLE_EQ(interpolate_linear<double>(x, y, 3.0), 6.0);
    EXPECT_THROW(interpolate_linear<double>(x, y, 3.5), RangeError);
}

TEST(CubicSpline, ReproducesCubicsWithNotAKnotEnds) {
    std::vector<double> knots{0, 0.3, 0.7, 1.2, 1.5, 2.2, 3.0};
    auto f = [](double t) { return SpatialQuaternion{t * t * t - t, 2 - t * t, 0.5 * t * t * t + t}; };
    auto df = [](double t) { return SpatialQuaternion{3 * t * t - 1, -2 * t, 1.5 * t * t + 1}; };
    auto F = [](double t) { return SpatialQuaternion{t * t * t * t / 4 - t * t / 2, 2 * t - t * t * t / 3, t * t * t * t / 8 + t * t / 2}; };
    std::vector<SpatialQuaternion> vals;
    for (double k : knots) {
        vals.push_back(f(k));
    }
    const CubicSpline3 s(knots, vals);
    for (double t = 0; t <= 3.0; t += 0.137) {
        EXPECT_LT(distance(s.value(t), f(t)), 1e-12);
        EXPECT_LT(distance(s.derivative(t, 1), df(t)), 1e-11);
        EXPECT_LT(distance(s.derivative(t, 3), SpatialQuaternion{6, 0, 3}), 1e-9);
        EXPECT_LT(distance(s.integral(t), F(t) - F(0)), 1e-12);
    }
}

TEST(CubicSpline, RejectsBadKnots) {
    EXPECT_THROW(CubicSpline3({0, 1, 2}, {{}, {}, {}}), ParameterError);
    EXPECT_THROW(CubicSpline3({0, 1, 1, 2}, {{}, {}, {}, {}}), ParameterError);
}

TEST(CubicSpline, ConvergesAtFourthOrderOnSmoothData) {
    auto err = [](int n) {
        std::vector<double> knots;
        std::vector<SpatialQuaternion> vals;
        for (int i = 0; i < n; ++i) {
            const double t = 2.0 * i / (n - 1);
            knots.push_back(t);
            vals.push_back({std::sin(t), std::cos(t), std::exp(-t)});
        }
        const CubicSpline3 s(knots, vals);
        double e = 0;
        for (double t = 0.01; t < 2.0; t += 0.0371) {
            e = std::max(e, distance(s.value(t), SpatialQuaternion{std::sin(t), std::cos(t), std::exp(-t)}));
        }
        return e;
    };
    const double ratio = err(41) / err(81);
    EXPECT_GT(ratio, 12.0);
    EXPECT_LT(ratio, 20.0);
}
