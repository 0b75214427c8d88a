#include <cmath>
#include <cstdio>

#include <qcurve/qcurve.hpp>

int main() {
    const qcurve::Curve c = qcurve::circle(2.0);
    const qcurve::FrenetSample f = qcurve::frenet_at(c, 1.0);
    std::printf("k = %.6f\n", f.k);
    return std::abs(f.k - 0.5) < 1e-9 ? 0 : 1;
}
