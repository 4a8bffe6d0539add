#pragma once

#include "sympb/sphere.hpp"

namespace sympb {

struct GeodesicReport {
    double max_geodesic_residual = 0.0;  // component of y'' outside span(y', A^2 y)
    double max_level_drift = 0.0;        // |<A x, x> - 1| along the flow
};

// Integrate the characteristic flow x' = J A x on {<A x, x> = 1} with the
// classical fixed-step 4th order scheme, project by y = A^{-1/2} x, and
// measure how far y fails the geodesic equation on {<A^2 y, y> = 1}.
// The residual is dominated by the integrator truncation, O(step^4).
GeodesicReport characteristic_to_geodesic(const std::vector<double>& A_diag, const CVec& x0,
                                          double T, double step);

}  // namespace sympb
