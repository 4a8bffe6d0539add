#pragma once

#include <memory>
#include <vector>

#include "sympb/curve.hpp"

namespace sympb {

// Quarter of the l_e unit circle from (1,0) to (0,1) in the sectorial-area
// parameterization: C(t) = (cos^{2/e} th, sin^{2/e} th) with [C, C'] = 1.
// Then C'(t) = (-sin^{2/e*} th, cos^{2/e*} th) traces the l_{e*} quarter,
// e* the conjugate exponent, and C'' = -k(th) C.
class SectorialArc {
public:
    SectorialArc() = default;
    explicit SectorialArc(double exponent, int knots = 1024);

    double exponent() const { return e_; }
    double length() const { return total_; }

    Vec2 pos(double t) const;
    Vec2 vel(double t) const;
    Vec2 acc(double t) const;

    double sector_param(double theta) const;  // t(theta), exact quadrature
    double theta_of(double t) const;          // inverse via knot table

private:
    double rate(double theta) const;  // [c, c'] in the angle parameterization

    double e_ = 2.0;
    double total_ = 0.0;
    std::vector<double> theta_knots_, t_knots_;
};

// Centrally symmetric curve assembled from a first-quadrant arc, its
// rotation by 90 degrees in the second quadrant, and the reflections of
// both in the origin. Velocities of consecutive arcs match at the
// junctions, so the assembly is C^1 in the parameter.
class FourArcCurve : public PlaneCurve {
public:
    double period() const override { return 2.0 * (first_.length() + second_.length()); }
    Vec2 position(double t) const override;
    Vec2 velocity(double t) const override;
    Vec2 acceleration(double t) const override;

    double quarter_first() const { return first_.length(); }
    double quarter_second() const { return second_.length(); }

protected:
    FourArcCurve(SectorialArc first, SectorialArc second)
        : first_(std::move(first)), second_(std::move(second)) {}

    struct ArcRef {
        const SectorialArc* arc;
        bool rotate;  // compose with rotation by +90 degrees
        bool negate;  // reflect in the origin
    };
    ArcRef locate(double& t) const;

    SectorialArc first_, second_;
};

// Radon curve: the l_p quarter C1 in quadrant I and the conjugate l_q
// quarter in quadrant II (the trace of C1'). The chord pairing x -> y with
// T_y parallel to Ox makes every parallelogram x y x* y* a 4-periodic
// billiard orbit; for p = 2 the curve is the unit circle.
class RadonCurve : public FourArcCurve {
public:
    explicit RadonCurve(double p);

    double exponent() const { return p_; }
    double conjugate_exponent() const { return q_; }
    double quarter_p() const { return quarter_first(); }
    double quarter_q() const { return quarter_second(); }

    // Uniform samples of C1 and the quintic windowed least-squares fit of
    // C1' from them; the fitted derivative must trace the l_q circle.
    // Exposed as a cross-check of the construction.
    struct DerivativeFit {
        std::vector<double> t;
        std::vector<Vec2> c1, c1_deriv;
    };
    DerivativeFit fit_c1_derivative(int samples = 512) const;

private:
    double p_ = 2.0, q_ = 2.0;
};

// Unit circle of the l_p norm. For p > 2 the curvature vanishes at the
// four axis points, giving a smooth strictly convex table with flat
// points; the affine machinery refuses it.
class LpCircleCurve : public FourArcCurve {
public:
    explicit LpCircleCurve(double p);

    double exponent() const { return p_; }
    bool has_flat_point() const override { return p_ > 2.0; }

    // Parameters of the four zero-curvature points (p > 2).
    std::vector<double> flat_points() const;

private:
    double p_ = 2.0;
};

std::shared_ptr<RadonCurve> radon_curve(double p);

}  // namespace sympb
