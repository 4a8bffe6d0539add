#include "sympb/geodesic.hpp"

#include <cmath>

namespace sympb {

namespace {

CVec apply_diag(const std::vector<double>& d, const CVec& x, double power) {
    CVec out(x);
    for (size_t j = 0; j < out.size(); ++j) out[j] *= std::pow(d[j], power);
    return out;
}

CVec field(const std::vector<double>& A, const CVec& x) {
    CVec out(x);
    for (size_t j = 0; j < out.size(); ++j) out[j] *= std::complex<double>(0.0, A[j]);
    return out;
}

}  // namespace

GeodesicReport characteristic_to_geodesic(const std::vector<double>& A, const CVec& x0, double T,
                                          double step) {
    GeodesicReport rep;
    CVec x = x0;
    const long steps = static_cast<long>(std::llround(T / step));
    auto level = [&](const CVec& z) { return dot(apply_diag(A, z, 1.0), z); };
    const double level0 = level(x);

    auto record = [&](const CVec& z) {
        rep.max_level_drift = std::max(rep.max_level_drift, std::abs(level(z) - level0));
        CVec y = apply_diag(A, z, -0.5);
        CVec yp = apply_diag(A, field(A, z), -0.5);
        CVec ypp = -1.0 * apply_diag(A, z, 1.5);
        CVec a2y = apply_diag(A, y, 2.0);
        // Orthogonal component of y'' relative to span(y', A^2 y).
        CVec b1 = normalized(yp);
        CVec a2 = a2y - dot(a2y, b1) * b1;
        CVec b2 = normalized(a2);
        CVec r = ypp - dot(ypp, b1) * b1 - dot(ypp, b2) * b2;
        rep.max_geodesic_residual = std::max(rep.max_geodesic_residual, cnorm(r));
    };

    record(x);
    for (long k = 0; k < steps; ++k) {
        CVec k1 = field(A, x);
        CVec k2 = field(A, x + (0.5 * step) * k1);
        CVec k3 = field(A, x + (0.5 * step) * k2);
        CVec k4 = field(A, x + step * k3);
        x = x + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        record(x);
    }
    return rep;
}

}  // namespace sympb
