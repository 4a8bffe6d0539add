#include "sympb/curve.hpp"

#include <cmath>

#include "sympb/numerics.hpp"

namespace sympb {

double PlaneCurve::curvature(double t) const {
    Vec2 v = velocity(t), a = acceleration(t);
    double n = norm(v);
    return cross(v, a) / (n * n * n);
}

CurvePoint PlaneCurve::eval(double t) const {
    CurvePoint cp;
    cp.alpha = t;
    cp.position = position(t);
    cp.tangent = tangent(t);
    cp.normal = rot270(cp.tangent);
    cp.curvature = curvature(t);
    return cp;
}

double PlaneCurve::opposite(double t) const {
    // Find s in (t, t + period) with cross(nu(t), nu(s)) = 0 and the normals
    // anti-parallel. The normal turns monotonically by 2*pi over one period,
    // so a coarse scan brackets the unique sign change on the far arc.
    const double P = period();
    Vec2 nu = normal(t);
    auto h = [&](double s) { return cross(nu, normal(s)); };
    const int M = 512;
    double prev_s = t + P / M;
    double prev_h = h(prev_s);
    for (int i = 2; i <= M; ++i) {
        double s = t + P * i / M;
        double hs = h(s);
        if ((prev_h > 0.0) != (hs > 0.0) && dot(nu, normal(0.5 * (prev_s + s))) < 0.0) {
            return solve_bracketed(h, prev_s, s, 1e-14 * P);
        }
        prev_s = s;
        prev_h = hs;
    }
    throw std::runtime_error("opposite: no anti-parallel normal found");
}

Vec2 SupportFunctionCurve::position(double a) const {
    double pa = p(a), dpa = dp(a);
    double c = std::cos(a), s = std::sin(a);
    return {pa * c - dpa * s, pa * s + dpa * c};
}

Vec2 SupportFunctionCurve::velocity(double a) const {
    double r = rho(a);
    return {-r * std::sin(a), r * std::cos(a)};
}

Vec2 SupportFunctionCurve::acceleration(double a) const {
    double r = rho(a), dr = drho(a);
    double c = std::cos(a), s = std::sin(a);
    return {-dr * s - r * c, dr * c - r * s};
}

double SupportFunctionCurve::curvature(double a) const { return 1.0 / rho(a); }

double SupportFunctionCurve::area() const {
    return 0.5 * integrate_adaptive([this](double a) { return rho(a) * p(a); }, 0.0, 2.0 * M_PI,
                                    1e-12);
}

void SupportFunctionCurve::validate() {
    const int N = 4096;
    double min_rho = rho(0.0), min_p = p(0.0);
    for (int i = 1; i < N; ++i) {
        double a = 2.0 * M_PI * i / N;
        min_rho = std::min(min_rho, rho(a));
        min_p = std::min(min_p, p(a));
    }
    min_rho_ = min_rho;
    if (min_rho < kConvexityMargin)
        throw std::invalid_argument("support curve is not convex: min curvature radius " +
                                    std::to_string(min_rho));
    if (min_p <= 0.0)
        throw std::invalid_argument("support curve does not enclose the origin");
}

SupportFourierCurve::SupportFourierCurve(double c0, std::vector<std::pair<double, double>> coeffs)
    : c0_(c0), coeffs_(std::move(coeffs)) {
    if (c0_ <= 0.0) throw std::invalid_argument("support curve needs c0 > 0");
    validate();
}

double SupportFourierCurve::fourier(double a, int deriv) const {
    double acc = (deriv == 0) ? c0_ : 0.0;
    for (size_t k = 1; k <= coeffs_.size(); ++k) {
        auto [c, s] = coeffs_[k - 1];
        double kk = static_cast<double>(k);
        double ka = kk * a;
        double pw = std::pow(kk, deriv);
        switch (deriv % 4) {
            case 0: acc += pw * (c * std::cos(ka) + s * std::sin(ka)); break;
            case 1: acc += pw * (-c * std::sin(ka) + s * std::cos(ka)); break;
            case 2: acc += pw * (-c * std::cos(ka) - s * std::sin(ka)); break;
            case 3: acc += pw * (c * std::sin(ka) - s * std::cos(ka)); break;
        }
    }
    return acc;
}

double SupportFourierCurve::p(double a) const { return fourier(a, 0); }
double SupportFourierCurve::dp(double a) const { return fourier(a, 1); }
double SupportFourierCurve::ddp(double a) const { return fourier(a, 2); }
double SupportFourierCurve::drho(double a) const { return fourier(a, 1) + fourier(a, 3); }
double SupportFourierCurve::ddrho(double a) const { return fourier(a, 2) + fourier(a, 4); }

EllipseCurve::EllipseCurve(double a, double b) : a_(a), b_(b) {
    if (a <= 0.0 || b <= 0.0) throw std::invalid_argument("ellipse needs positive semiaxes");
    validate();
}

double EllipseCurve::p(double a) const {
    double c = std::cos(a), s = std::sin(a);
    return std::sqrt(a_ * a_ * c * c + b_ * b_ * s * s);
}

double EllipseCurve::dp(double a) const {
    return -(a_ * a_ - b_ * b_) * std::sin(a) * std::cos(a) / p(a);
}

double EllipseCurve::ddp(double a) const {
    double pa = p(a), dpa = dp(a);
    return (-(a_ * a_ - b_ * b_) * std::cos(2.0 * a) - dpa * dpa) / pa;
}

double EllipseCurve::rho(double a) const {
    double pa = p(a);
    return a_ * a_ * b_ * b_ / (pa * pa * pa);
}

double EllipseCurve::drho(double a) const {
    double pa = p(a);
    return -3.0 * a_ * a_ * b_ * b_ * dp(a) / (pa * pa * pa * pa);
}

double EllipseCurve::ddrho(double a) const {
    double pa = p(a), dpa = dp(a), ddpa = ddp(a);
    double p4 = pa * pa * pa * pa;
    return -3.0 * a_ * a_ * b_ * b_ * (ddpa * pa - 4.0 * dpa * dpa) / (p4 * pa);
}

double EllipseCurve::param_of_position(Vec2 pos) const {
    return std::atan2(pos.y / (b_ * b_), pos.x / (a_ * a_));
}

}  // namespace sympb
