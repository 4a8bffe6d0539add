#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "sympb/affine.hpp"
#include "sympb/curve.hpp"

namespace sympb {

struct BoundaryChordError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered pair of boundary parameters with omega(nu1, nu2) > 0. Parameters
// are kept as a monotone lift (t1 < t2, unbounded); reduce mod period for
// output.
struct PhaseChord {
    double t1 = 0.0;
    double t2 = 0.0;
    Vec2 x1, x2;
};

// Margin below which a chord counts as lying on the boundary of the phase
// space (the map extends there as the 2-periodic flip; we report instead).
inline constexpr double kBoundaryMargin = 1e-9;

PhaseChord make_chord(const PlaneCurve& curve, double t1, double t2);

// One step of the symplectic billiard map: (t1,t2) -> (t2,t3) with
// gamma(t3) - gamma(t1) parallel to gamma'(t2). The root is bracketed on
// (t2, t2*), which contains exactly one zero of
// g(s) = [gamma(s) - gamma(t1), gamma'(t2)].
PhaseChord step(const PlaneCurve& curve, const PhaseChord& chord);

// Generating function S(t1,t2) = omega(gamma(t1), gamma(t2)).
double generating_function(const PlaneCurve& curve, double t1, double t2);

// S_12(t1,t2) = [gamma'(t1), gamma'(t2)], positive on the phase space;
// the invariant area form is S_12 dt1 ^ dt2.
double invariant_density(const PlaneCurve& curve, double t1, double t2);

// S_2(t1,t2) = [gamma(t1), gamma'(t2)]; primitive used to evaluate
// Omega-areas of regions as boundary line integrals.
double generating_function_d2(const PlaneCurve& curve, double t1, double t2);

// Total Omega-area of the phase space {t1 < t2 < t1 + pi} by double
// quadrature of S_12; equals four times the area of the symmetrization.
double phase_area(const SupportFunctionCurve& curve, double rel_tol = 1e-8);

// Area of the central symmetrization, the body with support function
// (p(a) + p(a + pi)) / 2.
double symmetrization_area(const SupportFunctionCurve& curve);

// Mather's expression S_22(t1,t2) + S_11(t2,t3) for a reflection triple, in
// the arc length convention where it equals kappa(t2) [gamma(t1)-gamma(t3),
// i gamma'(t2)]. Negative values are necessary for caustics; the value
// vanishes where the curvature does.
double mather_criterion(const PlaneCurve& curve, double t1, double t2, double t3);

// One map step in affine coordinates: (t - eps, eps) -> (t, delta).
// Returns delta - eps, which scales as eps^3.
double lazutkin_defect(const AffineTable& table, double t, double eps);

struct OrbitRecord {
    PhaseChord initial;
    std::vector<double> params;   // t0, t1, ..., monotone lift
    std::vector<double> S;        // generating function per chord
    bool hit_boundary = false;
    std::optional<int> period;    // detected approximate period
};

OrbitRecord iterate_orbit(const PlaneCurve& curve, PhaseChord seed, int iterations,
                          double period_tol = 1e-9);

std::vector<OrbitRecord> portrait(const PlaneCurve& curve, const std::vector<PhaseChord>& seeds,
                                  int iterations);

// Equispaced-fraction seed chords for portraits: t2 = t1 + f (t1* - t1).
std::vector<PhaseChord> portrait_seeds(const PlaneCurve& curve, int count);

// The chord partner maximizing omega(x(t), x(s)) over s in (t, t*). On a
// Radon curve the pair (t, partner) starts a 4-periodic parallelogram orbit.
double omega_max_partner(const PlaneCurve& curve, double t);

}  // namespace sympb
