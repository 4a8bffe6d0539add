#pragma once

#include <stdexcept>
#include <vector>

#include "sympb/affine.hpp"
#include "sympb/curve.hpp"

namespace sympb {

struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InscribedPolygon {
    std::vector<double> params;  // strictly increasing, span < period
    double area = 0.0;           // (1/2) sum omega(g_i, g_{i+1})
    double closure_residual = 0.0;
};

// Maximal-area inscribed n-gon by cyclic coordinate ascent with a Newton
// polish on the closure system; the maximizer is an n-periodic orbit of the
// symplectic billiard map (tangent at each vertex parallel to the diagonal
// of its neighbors). Multi-start over rotated affine-equidistributed
// initializations.
InscribedPolygon max_inscribed_area(const SupportFunctionCurve& curve, int n, int starts = 8);
InscribedPolygon max_inscribed_area(const AffineTable& table, int n, int starts = 8);

struct SpectrumFit {
    std::vector<int> n;
    std::vector<double> area;     // A_n
    double a0 = 0.0, a1 = 0.0, a2 = 0.0;
    double residual = 0.0;        // rms of the fit residuals
};

// Least squares for A_n = a0 - a1/n^2 - a2/n^4 (- a3/n^6, a higher-order
// nuisance term kept out of the reported coefficients).
SpectrumFit fit_spectrum(const SupportFunctionCurve& curve, const std::vector<int>& n_list);

inline std::vector<int> default_spectrum_grid() { return {16, 24, 32, 48, 64, 96, 128}; }

// Slack of the ellipse-recognition inequality 3 a1 <= 2 pi^2 a0; zero
// exactly for ellipses.
double ellipse_test(const SpectrumFit& fit);

}  // namespace sympb
