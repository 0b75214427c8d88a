#pragma once

#include <cmath>
#include <iosfwd>
#include <utility>

namespace qcurve {

struct Quaternion;

/// A quaternion with zero scalar part, identified with a point or vector of E^3.
struct SpatialQuaternion {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    constexpr SpatialQuaternion() = default;
    constexpr SpatialQuaternion(double x, double y, double z) : a1(x), a2(y), a3(z) {}

    constexpr Quaternion as_quaternion() const;

    constexpr SpatialQuaternion& operator+=(const SpatialQuaternion& o) {
        a1 += o.a1;
        a2 += o.a2;
        a3 += o.a3;
        return *this;
    }
    constexpr SpatialQuaternion& operator-=(const SpatialQuaternion& o) {
        a1 -= o.a1;
        a2 -= o.a2;
        a3 -= o.a3;
        return *this;
    }
    constexpr SpatialQuaternion& operator*=(double s) {
        a1 *= s;
        a2 *= s;
        a3 *= s;
        return *this;
    }

    friend constexpr SpatialQuaternion operator+(SpatialQuaternion u, const SpatialQuaternion& v) { return u += v; }
    friend constexpr SpatialQuaternion operator-(SpatialQuaternion u, const SpatialQuaternion& v) { return u -= v; }
    friend constexpr SpatialQuaternion operator-(const SpatialQuaternion& u) { return {-u.a1, -u.a2, -u.a3}; }
    friend constexpr SpatialQuaternion operator*(double s, SpatialQuaternion u) { return u *= s; }
    friend constexpr SpatialQuaternion operator*(SpatialQuaternion u, double s) { return u *= s; }
    friend constexpr SpatialQuaternion operator/(SpatialQuaternion u, double s) { return u *= (1.0 / s); }
    friend constexpr bool operator==(const SpatialQuaternion&, const SpatialQuaternion&) = default;
};

/// Real quaternion a1 e1 + a2 e2 + a3 e3 + a4 e4. e4 is the multiplicative
/// identity, a4 the scalar part and (a1, a2, a3) the vector part.
struct Quaternion {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double x, double y, double z, double w) : a1(x), a2(y), a3(z), a4(w) {}
    constexpr Quaternion(const SpatialQuaternion& v, double scalar) : a1(v.a1), a2(v.a2), a3(v.a3), a4(scalar) {}

    constexpr double scalar() const { return a4; }
    constexpr SpatialQuaternion vector() const { return {a1, a2, a3}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        a1 += o.a1;
        a2 += o.a2;
        a3 += o.a3;
        a4 += o.a4;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        a1 -= o.a1;
        a2 -= o.a2;
        a3 -= o.a3;
        a4 -= o.a4;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        a1 *= s;
        a2 *= s;
        a3 *= s;
        a4 *= s;
        return *this;
    }

    friend constexpr Quaternion operator+(Quaternion q, const Quaternion& p) { return q += p; }
    friend constexpr Quaternion operator-(Quaternion q, const Quaternion& p) { return q -= p; }
    friend constexpr Quaternion operator-(const Quaternion& q) { return {-q.a1, -q.a2, -q.a3, -q.a4}; }
    friend constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }
    friend constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion SpatialQuaternion::as_quaternion() const { return {a1, a2, a3, 0.0}; }

namespace basis {
inline constexpr Quaternion e1{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion e2{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion e3{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion e4{0.0, 0.0, 0.0, 1.0};
} // namespace basis

/// Quaternion product
///   q x p = s_q s_p - <v_q, v_p> + s_q v_p + s_p v_q + v_q ^ v_p,
/// written out componentwise so that it stays the single source of the
/// Euclidean dot and cross products below.
constexpr Quaternion mul(const Quaternion& q, const Quaternion& p) {
    return {
        q.a4 * p.a1 + p.a4 * q.a1 + (q.a2 * p.a3 - q.a3 * p.a2),
        q.a4 * p.a2 + p.a4 * q.a2 + (q.a3 * p.a1 - q.a1 * p.a3),
        q.a4 * p.a3 + p.a4 * q.a3 + (q.a1 * p.a2 - q.a2 * p.a1),
        q.a4 * p.a4 - (q.a1 * p.a1 + q.a2 * p.a2 + q.a3 * p.a3),
    };
}

constexpr Quaternion operator*(const Quaternion& q, const Quaternion& p) { return mul(q, p); }

constexpr Quaternion conj(const Quaternion& q) { return {-q.a1, -q.a2, -q.a3, q.a4}; }

/// h(q, p) = 1/2 (q p̄ + p q̄); the sum is purely temporal, so its scalar part is returned.
constexpr double inner(const Quaternion& q, const Quaternion& p) {
    return 0.5 * (mul(q, conj(p)) + mul(p, conj(q))).a4;
}

constexpr double norm2(const Quaternion& q) { return q.a1 * q.a1 + q.a2 * q.a2 + q.a3 * q.a3 + q.a4 * q.a4; }
inline double norm(const Quaternion& q) { return std::sqrt(norm2(q)); }

/// q^-1 = q̄ / |q|^2. Throws DomainError for the zero quaternion.
Quaternion inverse(const Quaternion& q);

/// Returns the spatial part 1/2 (q - q̄) and the temporal part 1/2 (q + q̄).
constexpr std::pair<SpatialQuaternion, double> split(const Quaternion& q) {
    const Quaternion spatial = 0.5 * (q - conj(q));
    const Quaternion temporal = 0.5 * (q + conj(q));
    return {spatial.vector(), temporal.a4};
}

constexpr Quaternion combine(const SpatialQuaternion& spatial, double temporal) { return {spatial, temporal}; }

/// Euclidean dot product: the negated scalar part of u x v.
constexpr double vec_dot(const SpatialQuaternion& u, const SpatialQuaternion& v) {
    return -mul(u.as_quaternion(), v.as_quaternion()).a4;
}

/// Euclidean cross product: the vector part of u x v.
constexpr SpatialQuaternion vec_cross(const SpatialQuaternion& u, const SpatialQuaternion& v) {
    return mul(u.as_quaternion(), v.as_quaternion()).vector();
}

constexpr double norm2(const SpatialQuaternion& u) { return vec_dot(u, u); }
inline double norm(const SpatialQuaternion& u) { return std::sqrt(norm2(u)); }

/// u / |u|. The caller guarantees u is nonzero.
inline SpatialQuaternion normalized(const SpatialQuaternion& u) { return u / norm(u); }

inline double distance(const SpatialQuaternion& u, const SpatialQuaternion& v) { return norm(u - v); }

std::ostream& operator<<(std::ostream& os, const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const SpatialQuaternion& u);

} // namespace qcurve
