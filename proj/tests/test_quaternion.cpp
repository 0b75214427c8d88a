#include <array>
#include <random>

#include <gtest/gtest.h>

#include <qcurve/errors.hpp>
#include <qcurve/quaternion.hpp>

using namespace qcurve;

namespace {

void expect_quat_near(const Quaternion& a, const Quaternion& b, double tol) {
    EXPECT_NEAR(a.a1, b.a1, tol);
    EXPECT_NEAR(a.a2, b.a2, tol);
    EXPECT_NEAR(a.a3, b.a3, tol);
    EXPECT_NEAR(a.a4, b.a4, tol);
}

} // namespace

TEST(Quaternion, BasisProductTable) {
    // e_i e_i = -e4, e1 e2 = e3 (cyclic), e2 e1 = -e3, e4 is the identity.
    const std::array<Quaternion, 3> e{basis::e1, basis::e2, basis::e3};
    for (int i = 0; i < 3; ++i) {
        expect_quat_near(e[i] * e[i], -basis::e4, 0.0);
        expect_quat_near(e[i] * basis::e4, e[i], 0.0);
        expect_quat_near(basis::e4 * e[i], e[i], 0.0);
        const Quaternion& next = e[(i + 1) % 3];
        const Quaternion& third = e[(i + 2) % 3];
        expect_quat_near(e[i] * next, third, 0.0);
        expect_quat_near(next * e[i], -third, 0.0);
    }
    expect_quat_near(basis::e4 * basis::e4, basis::e4, 0.0);
}

TEST(Quaternion, ProductMatchesHandExpansion) {
    const Quaternion q{1, 2, 3, 4}, p{-2, 0.5, 1, 3};
    // (4 + i + 2j + 3k)(3 - 2i + 0.5j + k), expanded by hand.
    const Quaternion expect{
        4 * -2 + 3 * 1 + (2 * 1 - 3 * 0.5),
        4 * 0.5 + 3 * 2 + (3 * -2 - 1 * 1),
        4 * 1 + 3 * 3 + (1 * 0.5 - 2 * -2),
        4 * 3 - (1 * -2 + 2 * 0.5 + 3 * 1),
    };
    expect_quat_near(q * p, expect, 1e-15);
}

TEST(Quaternion, ConjugateNormInner) {
    const Quaternion q{1, -2, 3, 0.5};
    expect_quat_near(conj(q), {-1, 2, -3, 0.5}, 0.0);
    EXPECT_DOUBLE_EQ(norm2(q), 1 + 4 + 9 + 0.25);
    EXPECT_DOUBLE_EQ(inner(q, q), norm2(q));
    const Quaternion p{0.5, 1, -1, 2};
    EXPECT_NEAR(inner(q, p), 0.5 - 2 - 3 + 1, 1e-15);
    expect_quat_near(q * conj(q), {0, 0, 0, norm2(q)}, 1e-14);
}

TEST(Quaternion, InverseIsConjugateOverSquaredNorm) {
    const Quaternion q{0, 0, 0, 2};
    expect_quat_near(inverse(q), {0, 0, 0, 0.5}, 1e-15);
    const Quaternion r{1, 2, -1, 3};
    expect_quat_near(r * inverse(r), basis::e4, 1e-15);
    expect_quat_near(inverse(r) * r, basis::e4, 1e-15);
}

TEST(Quaternion, InverseOfZeroThrows) { EXPECT_THROW(inverse(Quaternion{}), DomainError); }

TEST(Quaternion, SplitAndCombine) {
    const Quaternion q{1.5, -2, 0.25, 7};
    const auto [v, s] = split(q);
    EXPECT_DOUBLE_EQ(v.a1, 1.5);
    EXPECT_DOUBLE_EQ(v.a2, -2);
    EXPECT_DOUBLE_EQ(v.a3, 0.25);
    EXPECT_DOUBLE_EQ(s, 7);
    expect_quat_near(combine(v, s), q, 0.0);
}

TEST(Quaternion, SpatialProductGivesDotAndCross) {
    const SpatialQuaternion u{1, 2, 3}, v{-4, 5, 0.5};
    EXPECT_DOUBLE_EQ(vec_dot(u, v), -4 + 10 + 1.5);
    const SpatialQuaternion c = vec_cross(u, v);
    EXPECT_DOUBLE_EQ(c.a1, 2 * 0.5 - 3 * 5);
    EXPECT_DOUBLE_EQ(c.a2, 3 * -4 - 1 * 0.5);
    EXPECT_DOUBLE_EQ(c.a3, 1 * 5 - 2 * -4);
    // u x v = -<u, v> + u ^ v
    const Quaternion prod = u.as_quaternion() * v.as_quaternion();
    EXPECT_DOUBLE_EQ(prod.a4, -vec_dot(u, v));
}

TEST(Quaternion, SeededAlgebraLaws) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    auto rnd = [&] { return Quaternion{d(rng), d(rng), d(rng), d(rng)}; };
    for (int i = 0; i < 2000; ++i) {
        const Quaternion q = rnd(), p = rnd(), r = rnd();
        expect_quat_near((q * p) * r, q * (p * r), 1e-14);
        EXPECT_NEAR(norm(q * p), norm(q) * norm(p), 1e-14);
        expect_quat_near(conj(q * p), conj(p) * conj(q), 1e-15);
        if (norm(q) > 1e-3) {
            expect_quat_near(q * inverse(q), basis::e4, 1e-12);
        }
    }
}
