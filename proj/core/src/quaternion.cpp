#include "qcurve/quaternion.hpp"

#include <ostream>

#include "qcurve/errors.hpp"

namespace qcurve {

Quaternion inverse(const Quaternion& q) {
    const double n2 = norm2(q);
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw DomainError("inverse: quaternion has zero (or non-finite) norm");
    }
    return conj(q) * (1.0 / n2);
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.a1 << ", " << q.a2 << ", " << q.a3 << "; " << q.a4 << ')';
}

std::ostream& operator<<(std::ostream& os, const SpatialQuaternion& u) {
    return os << '(' << u.a1 << ", " << u.a2 << ", " << u.a3 << ')';
}

} // namespace qcurve
