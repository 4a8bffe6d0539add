#pragma once

#include <cstdint>
#include <memory>

#include "sympb/curve.hpp"
#include "sympb/report.hpp"

namespace sympb {

// Each driver returns one report per sub-check, tolerance pinned in code.

// Phase-space area equals four times the symmetrized area (1e-6 relative):
// circle, ellipse (2,1), three random Fourier tables.
std::vector<VerifyReport> verify_phase_area(const SupportFunctionCurve& curve,
                                            const std::string& label);
std::vector<VerifyReport> verify_phase_area_suite(std::uint64_t seed);

// Regular n-gon periods 2g/4g with g = n/gcd(n,2k); generic starts in the
// rounded-vertex model (closure 1e-9), exact rational square for n = 4.
std::vector<VerifyReport> verify_regular_ngon(int n, int k, int samples, std::uint64_t seed);
std::vector<VerifyReport> verify_regular_ngon_suite(int max_n, int samples, std::uint64_t seed);

// Trapezoid period set {16n-4, 16n+4, 16n+12}, every element realized.
std::vector<VerifyReport> verify_trapezoid(long modulus, int samples, std::uint64_t seed);
std::vector<VerifyReport> verify_trapezoid_suite(long max_modulus, int samples,
                                                 std::uint64_t seed);

// Circle area spectrum: A_n = (n/2) sin(2 pi / n) to 1e-9 over the default
// grid; a0 = pi (1e-8), a1 = 2 pi^3/3 (0.1%), |a2| = 2 pi^5/15 (1%, negative
// by the adopted convention A_n = a0 - a1/n^2 - a2/n^4).
std::vector<VerifyReport> verify_circle_spectrum();

// Spectrum sanity on an arbitrary table: a0 vs area, fitted a1 vs L^3/12.
std::vector<VerifyReport> verify_spectrum_generic(const SupportFunctionCurve& curve,
                                                  const std::string& label);

// Ellipse recognition: |2 pi^2 a0 - 3 a1| <= 1e-6 a0 for the circle and
// ellipse (2,1); slack >= 1e-3 a0 for the cubic-harmonic table.
std::vector<VerifyReport> verify_ellipse_recognition();

// Grazing-chord defect in affine coordinates; slope of log|delta-eps| vs
// log eps over {0.2, 0.1, 0.05, 0.025} checked against the stated window
// [2.8, 3.2]; identically zero (1e-9) on the circle.
std::vector<VerifyReport> verify_lazutkin();

// Caustic criterion S22 + S11: vanishes (1e-8) at a flat point, strictly
// below -1e-6 on 100 random circle triples.
std::vector<VerifyReport> verify_mather(std::uint64_t seed);

// Radon table: the parallelogram orbit x -> y -> x* -> y* closes within
// 1e-9 for sampled x.
std::vector<VerifyReport> verify_radon(double p, int samples);

// Weighted-sphere integrals I_k and the chord integral J: max drift over
// the run below 1e-9; consecutive-point distances constant to 1e-10.
std::vector<VerifyReport> verify_integrals(const std::vector<double>& weights, long iters,
                                           std::uint64_t seed);

// Hodograph correspondence with the Birkhoff billiard in the companion
// ellipsoid: reflection residual below 1e-9 over the run, and the lifted
// Birkhoff trajectory reproduces the sphere orbit to 1e-9.
std::vector<VerifyReport> verify_hodo(const std::vector<double>& weights, long iters,
                                      std::uint64_t seed);

// Round sphere: closed form matches iteration to 1e-11 over random chords;
// period 6 at alpha = 2 pi/6 and 10 at alpha = 2 pi/5, detected exactly.
std::vector<VerifyReport> verify_sphere_explicit(int chords, long steps, std::uint64_t seed);

// Coordinate-subspace confinement of low-period orbits on distinct-weight
// spheres (n = 2, 3): dimension at most k for even k, k-1 for odd.
std::vector<VerifyReport> verify_subspace(std::uint64_t seed);

// Periodic orbits on the quartic table in R^4: k = 2..8 with residual
// below 1e-8, and at least 4 distinct 4-periodic diameter orbits from 64
// starts.
std::vector<VerifyReport> verify_periodic_existence(std::uint64_t seed);

// Odd-period polygon orbits sit inside neighborhoods of 4n-periodic
// points: 100 neighbors of the 3-periodic quadrilateral orbit all have
// period 12.
std::vector<VerifyReport> verify_odd_neighborhood(int samples, std::uint64_t seed);

// Characteristic flow projects to ellipsoid geodesics: residual below
// 1e-10 for the round sphere and 1e-8 for distinct weights at step 1e-3;
// the level set is conserved to 1e-10.
std::vector<VerifyReport> verify_geodesic(const std::vector<double>& weights, double T,
                                          double step, std::uint64_t seed);

// The full acceptance battery in criterion order.
std::vector<VerifyReport> run_acceptance(std::uint64_t seed);

}  // namespace sympb
