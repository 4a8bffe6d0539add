#include "sympb/radon.hpp"

#include <algorithm>
#include <cmath>

#include "sympb/numerics.hpp"

namespace sympb {

double SectorialArc::rate(double theta) const {
    return 2.0 / e_ * std::pow(std::sin(theta) * std::cos(theta), 2.0 / e_ - 1.0);
}

double SectorialArc::sector_param(double theta) const {
    // Substituting u = v^e removes the endpoint singularity of the rate:
    // the integrand becomes 2 v psi(v^e) with psi smooth.
    const double e = e_;
    auto from_zero = [&](double th) {
        double vmax = std::pow(th, 1.0 / e);
        return integrate_gl(
            [&](double v) {
                double u = std::pow(v, e);
                double base =
                    (u > 0.0) ? std::pow(std::sin(u) / u * std::cos(u), 2.0 / e - 1.0) : 1.0;
                return 2.0 * base * v;
            },
            0.0, vmax, 64);
    };
    // The rate is symmetric about pi/4, so t(pi/2 - x) = T - t(x).
    if (theta <= M_PI / 4.0) return from_zero(theta);
    return 2.0 * from_zero(M_PI / 4.0) - from_zero(M_PI / 2.0 - theta);
}

SectorialArc::SectorialArc(double exponent, int knots) : e_(exponent) {
    theta_knots_.resize(knots + 1);
    t_knots_.resize(knots + 1);
    for (int j = 0; j <= knots; ++j) {
        theta_knots_[j] = M_PI / 2.0 * j / knots;
        t_knots_[j] = sector_param(theta_knots_[j]);
    }
    total_ = t_knots_.back();
}

double SectorialArc::theta_of(double t) const {
    t = std::clamp(t, 0.0, total_);
    auto it = std::upper_bound(t_knots_.begin(), t_knots_.end(), t);
    int j = std::max<int>(0, static_cast<int>(it - t_knots_.begin()) - 1);
    j = std::min<int>(j, static_cast<int>(t_knots_.size()) - 2);
    double lo = theta_knots_[j], hi = theta_knots_[j + 1];
    const bool boundary = (j == 0) || (j + 2 == static_cast<int>(t_knots_.size()));
    for (int it2 = 0; it2 < 52; ++it2) {
        double mid = 0.5 * (lo + hi);
        double tm = boundary ? sector_param(mid)
                             : t_knots_[j] + integrate_gl([this](double u) { return rate(u); },
                                                          theta_knots_[j], mid, 1);
        if (tm < t)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

Vec2 SectorialArc::pos(double t) const {
    double th = theta_of(t);
    return {std::pow(std::cos(th), 2.0 / e_), std::pow(std::sin(th), 2.0 / e_)};
}

Vec2 SectorialArc::vel(double t) const {
    double th = theta_of(t);
    double ec = e_ / (e_ - 1.0);  // conjugate exponent
    return {-std::pow(std::sin(th), 2.0 / ec), std::pow(std::cos(th), 2.0 / ec)};
}

Vec2 SectorialArc::acc(double t) const {
    // C'' = -k(th) C with k = (e/e*) (sin th cos th)^{2/e* - 2/e}.
    double th = theta_of(t);
    double ec = e_ / (e_ - 1.0);
    double k = e_ / ec * std::pow(std::sin(th) * std::cos(th), 2.0 / ec - 2.0 / e_);
    return -k * pos(t);
}

FourArcCurve::ArcRef FourArcCurve::locate(double& t) const {
    const double P = period();
    t -= std::floor(t / P) * P;
    const double ta = first_.length(), tb = second_.length();
    if (t < ta) return {&first_, false, false};
    t -= ta;
    if (t < tb) return {&second_, true, false};
    t -= tb;
    if (t < ta) return {&first_, false, true};
    t -= ta;
    return {&second_, true, true};
}

namespace {
Vec2 transform(Vec2 v, bool rotate, bool negate) {
    if (rotate) v = rot90(v);
    return negate ? -v : v;
}
}  // namespace

Vec2 FourArcCurve::position(double t) const {
    ArcRef r = locate(t);
    return transform(r.arc->pos(t), r.rotate, r.negate);
}

Vec2 FourArcCurve::velocity(double t) const {
    ArcRef r = locate(t);
    return transform(r.arc->vel(t), r.rotate, r.negate);
}

Vec2 FourArcCurve::acceleration(double t) const {
    ArcRef r = locate(t);
    return transform(r.arc->acc(t), r.rotate, r.negate);
}

namespace {
double checked_exponent(double p) {
    if (p <= 1.0) throw std::invalid_argument("norm exponent must exceed 1");
    return p;
}
}  // namespace

RadonCurve::RadonCurve(double p)
    : FourArcCurve(SectorialArc(checked_exponent(p)), SectorialArc(p / (p - 1.0))), p_(p) {
    q_ = p / (p - 1.0);
}

RadonCurve::DerivativeFit RadonCurve::fit_c1_derivative(int samples) const {
    DerivativeFit out;
    const double T = first_.length();
    const double h = T / samples;
    out.t.resize(samples + 1);
    out.c1.resize(samples + 1);
    for (int i = 0; i <= samples; ++i) {
        out.t[i] = i * h;
        out.c1[i] = first_.pos(out.t[i]);
    }
    // Quintic least-squares window fit of C1'(t) on the uniform grid.
    out.c1_deriv.resize(samples + 1);
    const int half = 5;
    for (int i = 0; i <= samples; ++i) {
        int lo = std::max(0, i - half);
        int hi = std::min(samples, i + half);
        if (hi - lo < 2 * half) {
            if (lo == 0)
                hi = 2 * half;
            else
                lo = samples - 2 * half;
        }
        const int m = hi - lo + 1;
        std::vector<std::vector<double>> X(m, std::vector<double>(6));
        std::vector<double> yx(m), yy(m);
        for (int r = 0; r < m; ++r) {
            double xi = static_cast<double>(lo + r - i);
            double pw = 1.0;
            for (int d = 0; d < 6; ++d) {
                X[r][d] = pw;
                pw *= xi;
            }
            yx[r] = out.c1[lo + r].x;
            yy[r] = out.c1[lo + r].y;
        }
        auto bx = least_squares(X, yx);
        auto by = least_squares(X, yy);
        out.c1_deriv[i] = Vec2{bx[1], by[1]} / h;
    }
    return out;
}

LpCircleCurve::LpCircleCurve(double p)
    : FourArcCurve(SectorialArc(checked_exponent(p)), SectorialArc(p)), p_(p) {}

std::vector<double> LpCircleCurve::flat_points() const {
    double T = quarter_first();
    return {0.0, T, 2.0 * T, 3.0 * T};
}

std::shared_ptr<RadonCurve> radon_curve(double p) { return std::make_shared<RadonCurve>(p); }

}  // namespace sympb
