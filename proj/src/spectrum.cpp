#include "sympb/spectrum.hpp"

#include <cmath>

#include "sympb/numerics.hpp"

namespace sympb {

namespace {

double polygon_area(const SupportFunctionCurve& curve, const std::vector<double>& t) {
    const size_t n = t.size();
    double s = 0.0;
    for (size_t i = 0; i < n; ++i)
        s += cross(curve.position(t[i]), curve.position(t[(i + 1) % n]));
    return 0.5 * s;
}

double closure_residual(const SupportFunctionCurve& curve, const std::vector<double>& t) {
    const size_t n = t.size();
    double worst = 0.0;
    for (size_t i = 0; i < n; ++i) {
        Vec2 d = curve.position(t[(i + 1) % n]) - curve.position(t[(i + n - 1) % n]);
        worst = std::max(worst, std::abs(cross(normalized(d), curve.tangent(t[i]))));
    }
    return worst;
}

// Exact single-coordinate maximizer: the vertex parameter in (tm, tp) whose
// tangent is parallel to the neighbor diagonal with maximizing orientation,
// alpha = atan2(d) - pi/2 mod 2 pi.
bool ascent_update(const SupportFunctionCurve& curve, double tm, double tp, double& t) {
    Vec2 d = curve.position(tp) - curve.position(tm);
    double target = std::atan2(d.y, d.x) - M_PI / 2.0;
    double P = curve.period();
    double cand = target + P * std::ceil((tm - target) / P);
    if (cand <= tm || cand >= tp) return false;
    t = cand;
    return true;
}

// One Newton step on the cyclic closure system r_i = [d_i, g'(t_i)].
double newton_step(const SupportFunctionCurve& curve, std::vector<double>& t) {
    const int n = static_cast<int>(t.size());
    std::vector<std::vector<double>> J(n, std::vector<double>(n, 0.0));
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) {
        int im = (i + n - 1) % n, ip = (i + 1) % n;
        Vec2 d = curve.position(t[ip]) - curve.position(t[im]);
        Vec2 vi = curve.velocity(t[i]);
        r[i] = cross(d, vi);
        J[i][ip] += cross(curve.velocity(t[ip]), vi);
        J[i][im] -= cross(curve.velocity(t[im]), vi);
        J[i][i] += cross(d, curve.acceleration(t[i]));
    }
    std::vector<double> dt = solve_dense(std::move(J), r);
    double max_step = 0.0;
    for (double v : dt) max_step = std::max(max_step, std::abs(v));
    // Damp if the step would break the cyclic ordering.
    double damp = 1.0;
    for (int tries = 0; tries < 30; ++tries) {
        bool ok = true;
        for (int i = 0; i + 1 < n; ++i)
            if (t[i] - damp * dt[i] >= t[i + 1] - damp * dt[i + 1]) ok = false;
        if (t[n - 1] - damp * dt[n - 1] >= t[0] - damp * dt[0] + curve.period()) ok = false;
        if (ok) break;
        damp *= 0.5;
    }
    for (int i = 0; i < n; ++i) t[i] -= damp * dt[i];
    return damp * max_step;
}

double ascent_sweep(const SupportFunctionCurve& curve, std::vector<double>& t) {
    const int n = static_cast<int>(t.size());
    const double P = curve.period();
    double disp = 0.0;
    for (int i = 0; i < n; ++i) {
        double tm = (i == 0) ? t[n - 1] - P : t[i - 1];
        double tp = (i == n - 1) ? t[0] + P : t[i + 1];
        double ti = t[i];
        if (ascent_update(curve, tm, tp, ti)) {
            disp = std::max(disp, std::abs(ti - t[i]));
            t[i] = ti;
        }
    }
    return disp;
}

InscribedPolygon optimize_from(const SupportFunctionCurve& curve, std::vector<double> t) {
    const int max_sweeps = 10000;
    const double tol = 1e-12;
    double disp = 1.0;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        disp = ascent_sweep(curve, t);
        if (disp <= tol) break;
        // Newton on the closure system once the ascent has localized the
        // orbit; the following sweep certifies the displacement criterion.
        if (sweep >= 4 && disp < 1e-3)
            for (int k = 0; k < 40; ++k)
                if (newton_step(curve, t) < 1e-14) break;
    }
    if (disp > tol)
        throw ConvergenceFailure("inscribed polygon optimizer did not reach displacement 1e-12");
    InscribedPolygon poly;
    poly.params = std::move(t);
    poly.area = polygon_area(curve, poly.params);
    poly.closure_residual = closure_residual(curve, poly.params);
    return poly;
}

}  // namespace

InscribedPolygon max_inscribed_area(const AffineTable& table, int n, int starts) {
    if (n < 3) throw std::invalid_argument("inscribed polygon needs n >= 3");
    const auto& curve = table.curve();
    const double L = table.affine_length();
    InscribedPolygon best;
    best.area = -1.0;
    for (int s = 0; s < starts; ++s) {
        std::vector<double> t(n);
        double off = L * s / (starts * n);
        for (int i = 0; i < n; ++i) t[i] = table.alpha_at_affine(off + L * i / n);
        InscribedPolygon cand = optimize_from(curve, std::move(t));
        if (cand.area > best.area) best = std::move(cand);
    }
    return best;
}

InscribedPolygon max_inscribed_area(const SupportFunctionCurve& curve, int n, int starts) {
    // The affine table is only used for initialization; share the curve
    // non-owning through an aliasing pointer.
    auto alias = std::shared_ptr<const SupportFunctionCurve>(std::shared_ptr<void>(), &curve);
    AffineTable table(alias);
    return max_inscribed_area(table, n, starts);
}

SpectrumFit fit_spectrum(const SupportFunctionCurve& curve, const std::vector<int>& n_list) {
    if (n_list.size() < 4)
        throw std::invalid_argument("spectrum fit needs at least 4 polygon sizes");
    int max_n = 0;
    for (int n : n_list) max_n = std::max(max_n, n);
    if (max_n < 64) throw std::invalid_argument("spectrum fit needs max n >= 64");

    auto alias = std::shared_ptr<const SupportFunctionCurve>(std::shared_ptr<void>(), &curve);
    AffineTable table(alias);

    SpectrumFit fit;
    fit.n = n_list;
    std::vector<std::vector<double>> X;
    std::vector<double> y;
    for (int n : n_list) {
        double an = max_inscribed_area(table, n).area;
        fit.area.push_back(an);
        double inv2 = 1.0 / (static_cast<double>(n) * n);
        X.push_back({1.0, -inv2, -inv2 * inv2, -inv2 * inv2 * inv2});
        y.push_back(an);
    }
    auto beta = least_squares(X, y);
    fit.a0 = beta[0];
    fit.a1 = beta[1];
    fit.a2 = beta[2];
    double ss = 0.0;
    for (size_t r = 0; r < y.size(); ++r) {
        double pred = 0.0;
        for (size_t c = 0; c < 4; ++c) pred += X[r][c] * beta[c];
        ss += (y[r] - pred) * (y[r] - pred);
    }
    fit.residual = std::sqrt(ss / y.size());
    return fit;
}

double ellipse_test(const SpectrumFit& fit) {
    return 2.0 * M_PI * M_PI * fit.a0 - 3.0 * fit.a1;
}

}  // namespace sympb
