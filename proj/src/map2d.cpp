#include "sympb/map2d.hpp"

#include <cmath>

#include "sympb/numerics.hpp"

namespace sympb {

PhaseChord make_chord(const PlaneCurve& curve, double t1, double t2) {
    PhaseChord c;
    c.t1 = t1;
    c.t2 = t2;
    c.x1 = curve.position(t1);
    c.x2 = curve.position(t2);
    double w = cross(curve.normal(t1), curve.normal(t2));
    if (w <= kBoundaryMargin)
        throw BoundaryChordError("chord lies on the boundary of the phase space");
    return c;
}

PhaseChord step(const PlaneCurve& curve, const PhaseChord& chord) {
    double w = cross(curve.normal(chord.t1), curve.normal(chord.t2));
    if (w <= kBoundaryMargin)
        throw BoundaryChordError("chord lies on the boundary of the phase space");
    const Vec2 dir2 = curve.tangent(chord.t2);
    const Vec2 x1 = chord.x1;
    auto g = [&](double s) { return cross(curve.position(s) - x1, dir2); };
    auto dg = [&](double s) { return cross(curve.velocity(s), dir2); };
    double hi = curve.opposite(chord.t2);
    if (hi <= chord.t2) hi += curve.period();
    double t3 = solve_bracketed(g, chord.t2, hi, 1e-13, dg);
    PhaseChord next;
    next.t1 = chord.t2;
    next.t2 = t3;
    next.x1 = chord.x2;
    next.x2 = curve.position(t3);
    return next;
}

double generating_function(const PlaneCurve& curve, double t1, double t2) {
    return cross(curve.position(t1), curve.position(t2));
}

double invariant_density(const PlaneCurve& curve, double t1, double t2) {
    return cross(curve.velocity(t1), curve.velocity(t2));
}

double generating_function_d2(const PlaneCurve& curve, double t1, double t2) {
    return cross(curve.position(t1), curve.velocity(t2));
}

double phase_area(const SupportFunctionCurve& curve, double rel_tol) {
    // S_12 = rho(a1) rho(a2) sin(a2 - a1) on {a1 < a2 < a1 + pi}.
    double scale = symmetrization_area(curve);
    auto inner = [&](double a1) {
        return curve.rho(a1) * integrate_adaptive(
                                   [&](double a2) {
                                       return curve.rho(a2) * std::sin(a2 - a1);
                                   },
                                   a1, a1 + M_PI, 0.1 * rel_tol * scale);
    };
    return integrate_adaptive(inner, 0.0, 2.0 * M_PI, rel_tol * scale);
}

double symmetrization_area(const SupportFunctionCurve& curve) {
    auto pbar = [&](double a) { return 0.5 * (curve.p(a) + curve.p(a + M_PI)); };
    auto rhobar = [&](double a) { return 0.5 * (curve.rho(a) + curve.rho(a + M_PI)); };
    return 0.5 * integrate_adaptive([&](double a) { return rhobar(a) * pbar(a); }, 0.0,
                                    2.0 * M_PI, 1e-12);
}

double mather_criterion(const PlaneCurve& curve, double t1, double t2, double t3) {
    Vec2 g1 = curve.position(t1), g3 = curve.position(t3);
    Vec2 itangent = rot90(curve.tangent(t2));
    return curve.curvature(t2) * cross(g1 - g3, itangent);
}

double lazutkin_defect(const AffineTable& table, double t, double eps) {
    const SupportFunctionCurve& curve = table.curve();
    double a1 = table.alpha_at_affine(t - eps);
    double a2 = table.alpha_at_affine(t);
    PhaseChord next = step(curve, make_chord(curve, a1, a2));
    double delta = table.affine_at_alpha(next.t2) - t;
    return delta - eps;
}

OrbitRecord iterate_orbit(const PlaneCurve& curve, PhaseChord seed, int iterations,
                          double period_tol) {
    OrbitRecord rec;
    rec.initial = seed;
    rec.params.push_back(seed.t1);
    rec.params.push_back(seed.t2);
    rec.S.push_back(generating_function(curve, seed.t1, seed.t2));
    const double P = curve.period();
    PhaseChord cur = seed;
    for (int i = 0; i < iterations; ++i) {
        try {
            cur = step(curve, cur);
        } catch (const BoundaryChordError&) {
            rec.hit_boundary = true;
            break;
        }
        rec.params.push_back(cur.t2);
        rec.S.push_back(generating_function(curve, cur.t1, cur.t2));
        if (!rec.period) {
            double d1 = std::remainder(cur.t1 - seed.t1, P);
            double d2 = std::remainder(cur.t2 - seed.t2, P);
            if (std::abs(d1) < period_tol && std::abs(d2) < period_tol)
                rec.period = i + 1;
        }
    }
    return rec;
}

std::vector<OrbitRecord> portrait(const PlaneCurve& curve, const std::vector<PhaseChord>& seeds,
                                  int iterations) {
    std::vector<OrbitRecord> out;
    out.reserve(seeds.size());
    for (const auto& s : seeds) out.push_back(iterate_orbit(curve, s, iterations));
    return out;
}

std::vector<PhaseChord> portrait_seeds(const PlaneCurve& curve, int count) {
    std::vector<PhaseChord> seeds;
    seeds.reserve(count);
    for (int i = 0; i < count; ++i) {
        double t1 = 0.0;
        double hi = curve.opposite(t1);
        double f = (i + 1.0) / (count + 1.0);
        seeds.push_back(make_chord(curve, t1, t1 + f * (hi - t1)));
    }
    return seeds;
}

double omega_max_partner(const PlaneCurve& curve, double t) {
    double hi = curve.opposite(t);
    if (hi <= t) hi += curve.period();
    Vec2 x = curve.position(t);
    // Stationarity of s -> omega(x, gamma(s)): the tangent at the partner
    // is parallel to x. Locate the maximum coarsely, then solve the
    // derivative to full precision.
    auto h = [&](double s) { return cross(x, curve.velocity(s)); };
    const int M = 64;
    double margin = 1e-6 * (hi - t);
    double best_s = t + margin, best = -1e300;
    for (int i = 0; i <= M; ++i) {
        double s = t + margin + (hi - t - 2 * margin) * i / M;
        double v = cross(x, curve.position(s));
        if (v > best) {
            best = v;
            best_s = s;
        }
    }
    double width = (hi - t - 2 * margin) / M;
    double lo = std::max(t + margin, best_s - width);
    double up = std::min(hi - margin, best_s + width);
    if ((h(lo) > 0.0) == (h(up) > 0.0)) return best_s;  // grazing fallback
    return solve_bracketed(h, lo, up, 1e-14);
}

}  // namespace sympb
