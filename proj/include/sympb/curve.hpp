#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "sympb/vec2.hpp"

namespace sympb {

struct FlatPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CurvePoint {
    double alpha = 0.0;   // parameter at which the point was evaluated
    Vec2 position;
    Vec2 tangent;         // unit, along the positive orientation
    Vec2 normal;          // unit, outward
    double curvature = 0.0;
};

// Smooth closed strictly convex positively oriented plane curve. Parameters
// live on the circle of circumference period(); callers may pass any real.
class PlaneCurve {
public:
    virtual ~PlaneCurve() = default;

    virtual double period() const = 0;
    virtual Vec2 position(double t) const = 0;
    virtual Vec2 velocity(double t) const = 0;      // d(position)/dt, nonvanishing
    virtual Vec2 acceleration(double t) const = 0;  // d2(position)/dt2
    virtual double curvature(double t) const;

    virtual Vec2 tangent(double t) const { return normalized(velocity(t)); }
    Vec2 normal(double t) const { return rot270(tangent(t)); }

    // The unique parameter t* with parallel tangent lines at t and t*,
    // returned in (t, t + period). Default: root-finding on cross(nu, nu*).
    virtual double opposite(double t) const;

    CurvePoint eval(double t) const;

    // True when the curvature vanishes somewhere; the affine-parameter
    // machinery must refuse such tables.
    virtual bool has_flat_point() const { return false; }
};

// Curve given by a support function p(alpha): the boundary point with
// outward normal (cos a, sin a) is
//   x = p cos a - p' sin a,  y = p sin a + p' cos a.
// The parameter is the normal direction; period 2*pi. The curvature radius
// is rho = p + p''.
class SupportFunctionCurve : public PlaneCurve {
public:
    virtual double p(double a) const = 0;
    virtual double dp(double a) const = 0;
    virtual double ddp(double a) const = 0;

    // Curvature radius rho = p + p'' and its first two derivatives.
    virtual double rho(double a) const { return p(a) + ddp(a); }
    virtual double drho(double a) const = 0;
    virtual double ddrho(double a) const = 0;

    double period() const override { return 2.0 * M_PI; }
    Vec2 position(double a) const override;
    Vec2 velocity(double a) const override;
    Vec2 acceleration(double a) const override;
    double curvature(double a) const override;
    // The tangent direction is the parameter itself, independent of rho.
    Vec2 tangent(double a) const override { return {-std::sin(a), std::cos(a)}; }
    double opposite(double a) const override { return a + M_PI; }

    double min_curvature_radius() const { return min_rho_; }

    // Area enclosed by the curve: (1/2) * integral of (p + p'') p.
    double area() const;

protected:
    // Strict convexity validation over a dense grid with a safety margin.
    void validate();

    static constexpr double kConvexityMargin = 1e-9;
    double min_rho_ = 0.0;
};

// Truncated Fourier support function p(a) = c0 + sum_k (c_k cos ka + s_k sin ka).
class SupportFourierCurve : public SupportFunctionCurve {
public:
    SupportFourierCurve(double c0, std::vector<std::pair<double, double>> coeffs);

    double p(double a) const override;
    double dp(double a) const override;
    double ddp(double a) const override;
    double drho(double a) const override;
    double ddrho(double a) const override;

    double c0() const { return c0_; }
    const std::vector<std::pair<double, double>>& coeffs() const { return coeffs_; }

private:
    double fourier(double a, int deriv) const;
    double c0_;
    std::vector<std::pair<double, double>> coeffs_;
};

// Ellipse with semiaxes (a, b) centered at the origin,
// p(alpha) = sqrt(a^2 cos^2 + b^2 sin^2); rho = a^2 b^2 / p^3.
class EllipseCurve : public SupportFunctionCurve {
public:
    EllipseCurve(double a, double b);

    double p(double a) const override;
    double dp(double a) const override;
    double ddp(double a) const override;
    double rho(double a) const override;
    double drho(double a) const override;
    double ddrho(double a) const override;

    double semi_a() const { return a_; }
    double semi_b() const { return b_; }

    // Support parameter of a point on the ellipse (normal-angle formula).
    double param_of_position(Vec2 pos) const;

private:
    double a_, b_;
};

inline std::shared_ptr<SupportFourierCurve> make_circle(double radius = 1.0) {
    return std::make_shared<SupportFourierCurve>(radius, std::vector<std::pair<double, double>>{});
}

}  // namespace sympb
