#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sympb {

// Points of R^{2n} as complex n-vectors; J is multiplication by i.
using CVec = std::vector<std::complex<double>>;

struct DegenerateChordError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double dot(const CVec& u, const CVec& v);  // real inner product
double cnorm(const CVec& u);
CVec normalized(const CVec& u);
CVec operator+(const CVec& u, const CVec& v);
CVec operator-(const CVec& u, const CVec& v);
CVec operator*(double c, const CVec& u);
CVec operator*(std::complex<double> c, const CVec& u);

// Unit sphere S^{2n-1} with the form omega_a(u,v) = sum a_j (du^j ^ dv^j
// pairing); the characteristic direction at Z is R(Z), R = diag(i / a_j).
// This is the normalized model of an ellipsoidal table.
class WeightedSphere {
public:
    explicit WeightedSphere(std::vector<double> weights);

    int n() const { return static_cast<int>(a_.size()); }
    int dim() const { return 2 * n(); }
    const std::vector<double>& weights() const { return a_; }

    CVec R(const CVec& z) const;      // (i/a_j) z_j
    CVec R_inv(const CVec& z) const;  // -i a_j z_j

    // omega_a(u,v) = sum a_j Im(conj(u_j) v_j): the generating function.
    double omega(const CVec& u, const CVec& v) const;

    // <R(u), v> = sum (1/a_j) Im(conj(u_j) v_j): the conserved chord
    // integral J; positive on forward chords and the gate for stepping.
    double chord_integral(const CVec& u, const CVec& v) const;

private:
    std::vector<double> a_;
};

struct SphereChord {
    CVec z0, z1;
};

SphereChord make_sphere_chord(const WeightedSphere& table, CVec z0, CVec z1);

// Closed-form step: Z2 = Z0 + (2 <R Z0, Z1> / |R Z1|^2) R Z1; preserves
// |Z| = 1 exactly and all the chord integrals.
SphereChord step_sphere(const WeightedSphere& table, const SphereChord& chord);

struct SphereIntegrals {
    std::vector<double> I;  // I_k = Re(conj(z0_k) z1_k)
    double J = 0.0;         // <R(Z0), Z1>
};

SphereIntegrals integrals(const WeightedSphere& table, const SphereChord& chord);

// Explicit round-sphere solution (weights all 1):
// z_m = [(l1^{m-1} - l2^{m-1}) z0 + (l1^m - l2^m) z1] / (l1 - l2),
// l1 = e^{i alpha}, l2 = -e^{-i alpha}, omega(z0,z1) = sin alpha in (0,1).
CVec sphere_explicit(const CVec& z0, const CVec& z1, long n_steps);

// Period of the round-sphere orbit: alpha/(2 pi) ~ p/q by continued
// fractions (denominator cap); q for even q, 2q for odd; nullopt when no
// rational approximation within tolerance exists.
std::optional<long> round_sphere_period(double omega_value, long max_denominator = 1000000,
                                        double tol = 1e-9);

// The two invariant circles of a round-sphere orbit: c_pm(t) = e^{it} u
// +- e^{-it} v in the eigenbasis of the transfer map.
struct RoundOrbitCircles {
    CVec u, v;
    double alpha = 0.0;
    // Distance from z to the nearest point of either circle (coarse scan +
    // golden refinement).
    double distance(const CVec& z) const;
};
RoundOrbitCircles round_orbit_circles(const CVec& z0, const CVec& z1);

// Dimension (in R^{2n}) of the minimal coordinate subspace containing all
// the points: twice the number of complex coordinates that are not
// identically zero along the orbit.
int subspace_dimension(const std::vector<CVec>& points, double tol = 1e-10);

// ----- Hodograph correspondence with the Birkhoff billiard in E -----

// Companion ellipsoid E = R^{-1}(S^{2n-1}): sum |w_j|^2 / a_j^2 = 1, with
// the usual (length-generated) billiard inside it.
struct BirkhoffState {
    CVec w;  // point on E
    CVec v;  // unit direction of the outgoing chord
};

class EllipsoidE {
public:
    explicit EllipsoidE(std::vector<double> semi_axes) : a_(std::move(semi_axes)) {}
    const std::vector<double>& semi_axes() const { return a_; }

    CVec A(const CVec& w) const;  // A = diag(1/a_j^2); outward normal dir at w
    double level(const CVec& w) const;  // <A w, w>

    // One Birkhoff reflection: chord to the second intersection, then the
    // specular reflection in the gradient normal.
    BirkhoffState step(const BirkhoffState& s) const;

private:
    std::vector<double> a_;
};

// Conserved quantity <A w, v> of the Birkhoff billiard in E; equals
// <Rw, Rv> and corresponds to the sphere chord integral.
double birkhoff_integral(const EllipsoidE& E, const CVec& w, const CVec& v);

struct HodoReport {
    double max_angle = 0.0;          // worst Birkhoff reflection residual on E
    bool positive_multiplier = true; // normal/unit-sum alignment sign
};

// Project the even points of a sphere trajectory by R^{-1} and verify the
// Birkhoff reflection law on E at each interior even point.
HodoReport hodo_check(const WeightedSphere& table, const std::vector<CVec>& traj);

// Lift a Birkhoff trajectory (W_0, W_2, ...) in E to the sphere:
// Z_{2i} = R(W_{2i}), Z_{2i+1} = (W_{2i+2} - W_{2i}) / |...|.
std::vector<CVec> lift_birkhoff(const WeightedSphere& table, const std::vector<CVec>& even_points);

}  // namespace sympb
