#pragma once

#include <memory>

#include "sympb/curve.hpp"
#include "sympb/numerics.hpp"

namespace sympb {

// Reparameterizations of a positive-curvature support-function curve:
// Euclidean arc length s (ds = rho * da) and the affine parameter t
// (dt = kappa^{1/3} ds = rho^{2/3} da), in which [g'(t), g''(t)] = 1.
class AffineTable {
public:
    explicit AffineTable(std::shared_ptr<const SupportFunctionCurve> curve, int panels = 2048);

    double affine_length() const { return affine_.total(); }
    double arc_length() const { return arc_.total(); }

    double affine_at_alpha(double a) const { return affine_.value(a); }
    double alpha_at_affine(double t) const { return affine_.inverse(t); }
    double arc_at_alpha(double a) const { return arc_.value(a); }
    double alpha_at_arc(double s) const { return arc_.inverse(s); }

    // Affine curvature k(t), via k = kappa^{4/3} + (1/3) d/ds (kappa^{-5/3} kappa_s)
    // expressed through the curvature radius rho(alpha) and its derivatives:
    //   k = rho^{-4/3} - (1/3) rho'' rho^{-7/3} + (4/9) rho'^2 rho^{-10/3}.
    double affine_curvature_at_alpha(double a) const;
    double affine_curvature(double t) const { return affine_curvature_at_alpha(alpha_at_affine(t)); }

    // Integral of the affine curvature over one period, in dt.
    double total_affine_curvature() const;

    const SupportFunctionCurve& curve() const { return *curve_; }

private:
    std::shared_ptr<const SupportFunctionCurve> curve_;
    CumulativeTable arc_;
    CumulativeTable affine_;
};

// Total affine length of the curve, integral of kappa^{1/3} ds.
double affine_length(const SupportFunctionCurve& curve);

}  // namespace sympb
