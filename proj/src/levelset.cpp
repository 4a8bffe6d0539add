#include "sympb/levelset.hpp"

#include <cmath>

#include "sympb/numerics.hpp"

namespace sympb {

namespace {
const std::complex<double> kI(0.0, 1.0);
}

CVec LevelSetBody::project(const CVec& z) const {
    double lo = 0.0, hi = 1.0;
    while (F(hi * z) < 1.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (F(mid * z) < 1.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-16 * hi) break;
    }
    return 0.5 * (lo + hi) * z;
}

double QuarticBody::F(const CVec& z) const {
    double s = 0.0;
    for (const auto& c : z) {
        double m2 = std::norm(c);
        s += m2 + eps_ * m2 * m2;
    }
    return s;
}

CVec QuarticBody::grad(const CVec& z) const {
    CVec g(z);
    for (auto& c : g) c *= 2.0 + 4.0 * eps_ * std::norm(c);
    return g;
}

CVec QuarticBody::hess_apply(const CVec& z, const CVec& v) const {
    CVec out(v);
    for (size_t j = 0; j < z.size(); ++j) {
        double m2 = std::norm(z[j]);
        out[j] = (2.0 + 4.0 * eps_ * m2) * v[j] +
                 8.0 * eps_ * std::real(std::conj(z[j]) * v[j]) * z[j];
    }
    return out;
}

double EllipsoidLevelSet::F(const CVec& z) const {
    double s = 0.0;
    for (size_t j = 0; j < z.size(); ++j) s += std::norm(z[j]) / a_[j];
    return s;
}

CVec EllipsoidLevelSet::grad(const CVec& z) const {
    CVec g(z);
    for (size_t j = 0; j < g.size(); ++j) g[j] *= 2.0 / a_[j];
    return g;
}

CVec EllipsoidLevelSet::hess_apply(const CVec&, const CVec& v) const {
    CVec out(v);
    for (size_t j = 0; j < out.size(); ++j) out[j] *= 2.0 / a_[j];
    return out;
}

BodyChord step_levelset(const LevelSetBody& body, const BodyChord& chord) {
    CVec nu1 = body.normal(chord.x0), nu2 = body.normal(chord.x1);
    // omega_0(nu1, nu2) = <J nu1, nu2>
    double w = dot(kI * nu1, nu2);
    if (w < 1e-12)
        throw DegenerateChordError("chord lies on the boundary of the phase space");
    CVec d = kI * nu2;
    auto g = [&](double t) { return body.F(chord.x0 + t * d) - 1.0; };
    double t = 1e-4;
    while (g(t) > 0.0 && t > 1e-15) t *= 0.5;
    if (t <= 1e-15) throw std::runtime_error("step_levelset: no inward bracket");
    double hi = t;
    while (g(hi) < 0.0 && hi < 1e6) hi *= 2.0;
    if (hi >= 1e6) throw std::runtime_error("step_levelset: root bracket failure");
    double root = solve_bracketed(g, t, hi, 1e-15,
                                  [&](double tt) { return dot(body.grad(chord.x0 + tt * d), d); });
    BodyChord next;
    next.x0 = chord.x1;
    next.x1 = chord.x0 + root * d;
    return next;
}

CVec support_point(const LevelSetBody& body, const CVec& u) {
    const int n = body.n();
    const int dim = 2 * n + 1;  // z (as R^{2n}) and lambda
    CVec z = body.project(normalized(u));
    double lambda = dot(body.grad(z), normalized(u));
    auto pack = [&](const CVec& g, std::vector<double>& out) {
        for (int j = 0; j < n; ++j) {
            out[2 * j] = g[j].real();
            out[2 * j + 1] = g[j].imag();
        }
    };
    CVec un = normalized(u);
    auto merit = [&](const CVec& zz, double lam) {
        CVec r = body.grad(zz) - lam * un;
        double f = body.F(zz) - 1.0;
        return dot(r, r) + f * f;
    };
    for (int it = 0; it < 80; ++it) {
        CVec res = body.grad(z) - lambda * un;
        double fres = body.F(z) - 1.0;
        double m0 = dot(res, res) + fres * fres;
        if (m0 < 1e-28) break;
        // Assemble the (2n+1) x (2n+1) Newton system in real coordinates.
        std::vector<std::vector<double>> Jm(dim, std::vector<double>(dim, 0.0));
        std::vector<double> rhs(dim, 0.0);
        for (int c = 0; c < 2 * n; ++c) {
            CVec e(n, {0.0, 0.0});
            if (c % 2 == 0)
                e[c / 2] = {1.0, 0.0};
            else
                e[c / 2] = {0.0, 1.0};
            CVec col = body.hess_apply(z, e);
            std::vector<double> colr(2 * n);
            pack(col, colr);
            for (int r = 0; r < 2 * n; ++r) Jm[r][c] = colr[r];
            Jm[2 * n][c] = (c % 2 == 0) ? body.grad(z)[c / 2].real() : body.grad(z)[c / 2].imag();
        }
        std::vector<double> unr(2 * n);
        pack(un, unr);
        for (int r = 0; r < 2 * n; ++r) Jm[r][2 * n] = -unr[r];
        std::vector<double> resr(2 * n);
        pack(res, resr);
        for (int r = 0; r < 2 * n; ++r) rhs[r] = -resr[r];
        rhs[2 * n] = -fres;
        std::vector<double> delta = solve_dense(std::move(Jm), std::move(rhs));
        double step = 1.0;
        for (int halve = 0; halve < 30; ++halve) {
            CVec zn(z);
            for (int j = 0; j < n; ++j)
                zn[j] += step * std::complex<double>(delta[2 * j], delta[2 * j + 1]);
            double ln = lambda + step * delta[2 * n];
            if (merit(zn, ln) < m0) {
                z = std::move(zn);
                lambda = ln;
                break;
            }
            step *= 0.5;
        }
    }
    return z;
}

CVec opposite_point(const LevelSetBody& body, const CVec& z) {
    return support_point(body, -1.0 * body.normal(z));
}

}  // namespace sympb
