#include "sympb/affine.hpp"

#include <cmath>

namespace sympb {

AffineTable::AffineTable(std::shared_ptr<const SupportFunctionCurve> curve, int panels)
    : curve_(std::move(curve)) {
    if (curve_->has_flat_point())
        throw FlatPointError("affine parameterization undefined: curvature vanishes");
    const SupportFunctionCurve* c = curve_.get();
    arc_ = CumulativeTable([c](double a) { return c->rho(a); }, c->period(), panels);
    affine_ = CumulativeTable([c](double a) { return std::pow(c->rho(a), 2.0 / 3.0); },
                              c->period(), panels);
}

double AffineTable::affine_curvature_at_alpha(double a) const {
    double r = curve_->rho(a), dr = curve_->drho(a), ddr = curve_->ddrho(a);
    return std::pow(r, -4.0 / 3.0) - ddr * std::pow(r, -7.0 / 3.0) / 3.0 +
           4.0 * dr * dr * std::pow(r, -10.0 / 3.0) / 9.0;
}

double AffineTable::total_affine_curvature() const {
    // Integrate k dt = k * rho^{2/3} da over one turn.
    return integrate_adaptive(
        [this](double a) {
            return affine_curvature_at_alpha(a) * std::pow(curve_->rho(a), 2.0 / 3.0);
        },
        0.0, curve_->period(), 1e-12);
}

double affine_length(const SupportFunctionCurve& curve) {
    if (curve.has_flat_point())
        throw FlatPointError("affine length undefined: curvature vanishes");
    return integrate_adaptive(
        [&curve](double a) { return std::pow(curve.rho(a), 2.0 / 3.0); }, 0.0, curve.period(),
        1e-12);
}

}  // namespace sympb
