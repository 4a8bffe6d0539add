#include "sympb/sphere.hpp"

#include <cmath>

#include "sympb/numerics.hpp"

namespace sympb {

double dot(const CVec& u, const CVec& v) {
    double s = 0.0;
    for (size_t j = 0; j < u.size(); ++j) s += std::real(std::conj(u[j]) * v[j]);
    return s;
}

double cnorm(const CVec& u) { return std::sqrt(dot(u, u)); }

CVec normalized(const CVec& u) {
    double n = cnorm(u);
    CVec out(u);
    for (auto& c : out) c /= n;
    return out;
}

CVec operator+(const CVec& u, const CVec& v) {
    CVec out(u);
    for (size_t j = 0; j < u.size(); ++j) out[j] += v[j];
    return out;
}

CVec operator-(const CVec& u, const CVec& v) {
    CVec out(u);
    for (size_t j = 0; j < u.size(); ++j) out[j] -= v[j];
    return out;
}

CVec operator*(double c, const CVec& u) {
    CVec out(u);
    for (auto& x : out) x *= c;
    return out;
}

CVec operator*(std::complex<double> c, const CVec& u) {
    CVec out(u);
    for (auto& x : out) x *= c;
    return out;
}

WeightedSphere::WeightedSphere(std::vector<double> weights) : a_(std::move(weights)) {
    if (a_.empty()) throw std::invalid_argument("weighted sphere needs at least one weight");
    for (double w : a_)
        if (!(w > 0.0)) throw std::invalid_argument("symplectic weights must be positive");
}

CVec WeightedSphere::R(const CVec& z) const {
    CVec out(z);
    for (size_t j = 0; j < out.size(); ++j) out[j] *= std::complex<double>(0.0, 1.0 / a_[j]);
    return out;
}

CVec WeightedSphere::R_inv(const CVec& z) const {
    CVec out(z);
    for (size_t j = 0; j < out.size(); ++j) out[j] *= std::complex<double>(0.0, -a_[j]);
    return out;
}

double WeightedSphere::omega(const CVec& u, const CVec& v) const {
    double s = 0.0;
    for (size_t j = 0; j < u.size(); ++j) s += a_[j] * std::imag(std::conj(u[j]) * v[j]);
    return s;
}

double WeightedSphere::chord_integral(const CVec& u, const CVec& v) const {
    double s = 0.0;
    for (size_t j = 0; j < u.size(); ++j) s += std::imag(std::conj(u[j]) * v[j]) / a_[j];
    return s;
}

SphereChord make_sphere_chord(const WeightedSphere& table, CVec z0, CVec z1) {
    if (static_cast<int>(z0.size()) != table.n() || static_cast<int>(z1.size()) != table.n())
        throw std::invalid_argument("chord dimension does not match the table");
    if (std::abs(cnorm(z0) - 1.0) > 1e-12 || std::abs(cnorm(z1) - 1.0) > 1e-12)
        throw std::invalid_argument("chord endpoints must lie on the unit sphere");
    if (table.chord_integral(z0, z1) < 1e-12)
        throw DegenerateChordError("chord lies on the boundary of the phase space");
    return SphereChord{std::move(z0), std::move(z1)};
}

SphereChord step_sphere(const WeightedSphere& table, const SphereChord& chord) {
    // Extended-precision internals keep the per-step rounding near one ulp,
    // so long runs stay within the closed-form solution.
    const auto& a = table.weights();
    long double num = 0.0L, den = 0.0L;
    for (size_t j = 0; j < a.size(); ++j) {
        long double x0 = chord.z0[j].real(), y0 = chord.z0[j].imag();
        long double x1 = chord.z1[j].real(), y1 = chord.z1[j].imag();
        num += (x0 * y1 - y0 * x1) / a[j];
        den += (x1 * x1 + y1 * y1) / (static_cast<long double>(a[j]) * a[j]);
    }
    if (num < 1e-12L)
        throw DegenerateChordError("chord lies on the boundary of the phase space");
    long double t = 2.0L * num / den;
    SphereChord next;
    next.z0 = chord.z1;
    next.z1.resize(a.size());
    for (size_t j = 0; j < a.size(); ++j) {
        // R z1 = (i/a_j) z1_j = (-y1 + i x1)/a_j
        long double x1 = chord.z1[j].real(), y1 = chord.z1[j].imag();
        long double xr = chord.z0[j].real() - t * y1 / a[j];
        long double yr = chord.z0[j].imag() + t * x1 / a[j];
        next.z1[j] = {static_cast<double>(xr), static_cast<double>(yr)};
    }
    return next;
}

SphereIntegrals integrals(const WeightedSphere& table, const SphereChord& chord) {
    SphereIntegrals out;
    out.I.resize(table.n());
    for (int k = 0; k < table.n(); ++k)
        out.I[k] = std::real(std::conj(chord.z0[k]) * chord.z1[k]);
    out.J = table.chord_integral(chord.z0, chord.z1);
    return out;
}

CVec sphere_explicit(const CVec& z0, const CVec& z1, long n_steps) {
    double w = 0.0;
    for (size_t j = 0; j < z0.size(); ++j) w += std::imag(std::conj(z0[j]) * z1[j]);
    if (!(w > 0.0 && w < 1.0))
        throw std::invalid_argument("round-sphere closed form needs omega in (0,1)");
    double alpha = std::asin(w);
    double c = std::cos(alpha);
    // (l1^k - l2^k)/(l1 - l2) with l1 = e^{i a}, l2 = -e^{-i a} and
    // l1 - l2 = 2 cos a reduces to i sin(k a)/cos a for even k and
    // cos(k a)/cos a for odd k.
    auto coeff = [&](long k) {
        double ph = k * alpha;
        return (k % 2 == 0) ? std::complex<double>(0.0, std::sin(ph) / c)
                            : std::complex<double>(std::cos(ph) / c, 0.0);
    };
    return coeff(n_steps - 1) * z0 + coeff(n_steps) * z1;
}

std::optional<long> round_sphere_period(double omega_value, long max_denominator, double tol) {
    if (!(omega_value > 0.0 && omega_value < 1.0)) return std::nullopt;
    double x = std::asin(omega_value) / (2.0 * M_PI);
    // Continued fraction convergents of x.
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = x;
    for (int it = 0; it < 64; ++it) {
        long a = static_cast<long>(std::floor(frac));
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_denominator) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (std::abs(x - static_cast<double>(p1) / q1) < tol / q1) {
            long q = q1;
            return (q % 2 == 0) ? q : 2 * q;
        }
        double rem = frac - a;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    return std::nullopt;
}

RoundOrbitCircles round_orbit_circles(const CVec& z0, const CVec& z1) {
    double w = 0.0;
    for (size_t j = 0; j < z0.size(); ++j) w += std::imag(std::conj(z0[j]) * z1[j]);
    double alpha = std::asin(w);
    std::complex<double> l1 = std::exp(std::complex<double>(0.0, alpha));
    std::complex<double> l2 = -std::exp(std::complex<double>(0.0, -alpha));
    RoundOrbitCircles c;
    c.alpha = alpha;
    std::complex<double> inv = 1.0 / (l1 - l2);
    c.u = inv * (z1 - l2 * z0);
    c.v = (-inv) * (z1 - l1 * z0);
    return c;
}

double RoundOrbitCircles::distance(const CVec& z) const {
    auto dist_at = [&](double t, double sign) {
        std::complex<double> e1 = std::exp(std::complex<double>(0.0, t));
        std::complex<double> e2 = sign * std::exp(std::complex<double>(0.0, -t));
        return cnorm(z - (e1 * u + e2 * v));
    };
    double best = 1e300;
    for (double sign : {1.0, -1.0}) {
        double coarse_t = 0.0, coarse = 1e300;
        for (int k = 0; k < 512; ++k) {
            double t = 2.0 * M_PI * k / 512;
            double d = dist_at(t, sign);
            if (d < coarse) {
                coarse = d;
                coarse_t = t;
            }
        }
        double lo = coarse_t - 2.0 * M_PI / 512, hi = coarse_t + 2.0 * M_PI / 512;
        double t = maximize_golden([&](double tt) { return -dist_at(tt, sign); }, lo, hi, 1e-13);
        best = std::min(best, dist_at(t, sign));
    }
    return best;
}

int subspace_dimension(const std::vector<CVec>& points, double tol) {
    if (points.empty()) return 0;
    int n = static_cast<int>(points[0].size());
    int active = 0;
    for (int j = 0; j < n; ++j) {
        double maxabs = 0.0;
        for (const auto& z : points) maxabs = std::max(maxabs, std::abs(z[j]));
        if (maxabs > tol) ++active;
    }
    return 2 * active;
}

CVec EllipsoidE::A(const CVec& w) const {
    CVec out(w);
    for (size_t j = 0; j < out.size(); ++j) out[j] /= a_[j] * a_[j];
    return out;
}

double EllipsoidE::level(const CVec& w) const { return dot(A(w), w); }

BirkhoffState EllipsoidE::step(const BirkhoffState& s) const {
    CVec aw = A(s.w), av = A(s.v);
    double t = -2.0 * dot(aw, s.v) / dot(av, s.v);
    if (!(t > 0.0)) throw std::runtime_error("birkhoff step: direction is not inward");
    BirkhoffState next;
    next.w = s.w + t * s.v;
    CVec nrm = normalized(A(next.w));
    next.v = s.v - 2.0 * dot(s.v, nrm) * nrm;
    return next;
}

double birkhoff_integral(const EllipsoidE& E, const CVec& w, const CVec& v) {
    return dot(E.A(w), v);
}

HodoReport hodo_check(const WeightedSphere& table, const std::vector<CVec>& traj) {
    HodoReport rep;
    std::vector<CVec> W;
    for (size_t k = 0; k < traj.size(); k += 2) W.push_back(table.R_inv(traj[k]));
    EllipsoidE E(table.weights());
    for (size_t i = 1; i + 1 < W.size(); ++i) {
        CVec u = normalized(W[i - 1] - W[i]) + normalized(W[i + 1] - W[i]);
        CVec inward = -1.0 * E.A(W[i]);  // parallel to R^2(W)
        if (dot(u, inward) <= 0.0) rep.positive_multiplier = false;
        // Small angles via the orthogonal component (asin form), which does
        // not lose precision the way acos of a near-unit dot product does.
        CVec un = normalized(u), nn = normalized(inward);
        CVec ortho = un - dot(un, nn) * nn;
        rep.max_angle = std::max(rep.max_angle, std::asin(std::min(1.0, cnorm(ortho))));
    }
    return rep;
}

std::vector<CVec> lift_birkhoff(const WeightedSphere& table, const std::vector<CVec>& even) {
    std::vector<CVec> traj;
    for (size_t i = 0; i + 1 < even.size(); ++i) {
        traj.push_back(table.R(even[i]));
        traj.push_back(normalized(even[i + 1] - even[i]));
    }
    if (!even.empty()) traj.push_back(table.R(even.back()));
    return traj;
}

}  // namespace sympb
