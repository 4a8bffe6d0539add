#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "sympb/rational.hpp"
#include "sympb/vec2.hpp"

namespace sympb {

// Scalar policy: exact zero tests for rationals, small tolerances for the
// floating-point mode used with irrational-vertex (regular) polygons.
template <class S>
struct ScalarOps {
    static bool is_zero(const S& x) { return x == 0; }
    static bool close(const S& a, const S& b) { return a == b; }
};

template <>
struct ScalarOps<double> {
    static constexpr double kZeroTol = 1e-12;
    static constexpr double kCloseTol = 1e-9;
    static bool is_zero(double x) { return std::abs(x) < kZeroTol; }
    static bool close(double a, double b) { return std::abs(a - b) < kCloseTol; }
};

template <class S>
struct PVec {
    S x{}, y{};
};

template <class S>
PVec<S> operator+(const PVec<S>& a, const PVec<S>& b) { return {a.x + b.x, a.y + b.y}; }
template <class S>
PVec<S> operator-(const PVec<S>& a, const PVec<S>& b) { return {a.x - b.x, a.y - b.y}; }
template <class S>
PVec<S> operator*(const S& c, const PVec<S>& a) { return {c * a.x, c * a.y}; }
template <class S>
S cross(const PVec<S>& a, const PVec<S>& b) { return a.x * b.y - a.y * b.x; }

using RVec2 = PVec<Rat>;

// Positively oriented strictly convex polygon over the scalar S.
template <class S>
class PolygonTable {
public:
    PolygonTable() = default;
    explicit PolygonTable(std::vector<PVec<S>> vertices) : v_(std::move(vertices)) {
        const int n = sides();
        if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
        e_.resize(n);
        for (int i = 0; i < n; ++i) e_[i] = v_[(i + 1) % n] - v_[i];
        for (int i = 0; i < n; ++i) {
            if (ScalarOps<S>::is_zero(e_[i].x) && ScalarOps<S>::is_zero(e_[i].y))
                throw std::invalid_argument("polygon has a repeated vertex");
            if (!(cross(e_[i], e_[(i + 1) % n]) > 0))
                throw std::invalid_argument("polygon is not strictly convex / positively oriented");
        }
    }

    int sides() const { return static_cast<int>(v_.size()); }
    const std::vector<PVec<S>>& vertices() const { return v_; }
    const PVec<S>& vertex(int i) const { return v_[i]; }
    const PVec<S>& edge(int i) const { return e_[i]; }

    PVec<S> point_at(int side, const S& offset) const { return v_[side] + offset * e_[side]; }

private:
    std::vector<PVec<S>> v_, e_;
};

using ConvexPolygon = PolygonTable<Rat>;

PolygonTable<double> to_double(const ConvexPolygon& poly);

// Phase point: ordered chord (side i, offset s) -> (side j, offset u);
// offsets strictly inside (0,1), sides not parallel, and the side normals
// omega-positive: cross(e_i, e_j) > 0.
template <class S>
struct PolyState {
    int i = 0;
    S s{};
    int j = 0;
    S u{};
};

template <class S>
bool states_equal(const PolyState<S>& a, const PolyState<S>& b) {
    return a.i == b.i && a.j == b.j && ScalarOps<S>::close(a.s, b.s) &&
           ScalarOps<S>::close(a.u, b.u);
}

enum class PolyStatus { Ok, VertexHit, ParallelSides };

template <class S>
struct PolyStepResult {
    PolyStatus status = PolyStatus::Ok;
    PolyState<S> next;
};

template <class S>
void validate_state(const PolygonTable<S>& poly, const PolyState<S>& st) {
    auto inside = [](const S& off) { return off > 0 && off < 1; };
    if (!inside(st.s) || !inside(st.u))
        throw std::invalid_argument("phase point offset outside (0,1)");
    if (ScalarOps<S>::is_zero(cross(poly.edge(st.i), poly.edge(st.j))))
        throw std::invalid_argument("phase point on parallel sides");
    if (!(cross(poly.edge(st.i), poly.edge(st.j)) > 0))
        throw std::invalid_argument("phase point violates omega-positivity");
}

// One step of the polygonal symplectic billiard: z is the second
// intersection of the line through x parallel to the side of y. The map is
// undefined (typed status) when z lands on a vertex or when that line
// contains a whole side.
template <class S>
PolyStepResult<S> poly_step(const PolygonTable<S>& poly, const PolyState<S>& st) {
    using Ops = ScalarOps<S>;
    const int n = poly.sides();
    const PVec<S>& d = poly.edge(st.j);
    PolyStepResult<S> out;
    if (Ops::is_zero(cross(poly.edge(st.i), d))) {
        out.status = PolyStatus::ParallelSides;
        return out;
    }
    PVec<S> x = poly.point_at(st.i, st.s);
    bool found = false;
    for (int m = 0; m < n; ++m) {
        if (m == st.i) continue;  // the line meets side i's line only at x
        PVec<S> r = poly.vertex(m) - x;
        S den = cross(d, poly.edge(m));
        if (Ops::is_zero(den)) {
            if (Ops::is_zero(cross(r, d))) {
                out.status = PolyStatus::ParallelSides;  // line contains side m
                return out;
            }
            continue;
        }
        S w = cross(r, d) / den;
        if (w < 0 || w > 1) continue;
        if (Ops::is_zero(w) || Ops::is_zero(w - 1)) {
            out.status = PolyStatus::VertexHit;
            return out;
        }
        out.next = PolyState<S>{st.j, st.u, m, w};
        found = true;
    }
    if (!found) {
        out.status = PolyStatus::VertexHit;  // grazing configuration
        return out;
    }
    out.status = PolyStatus::Ok;
    return out;
}

struct PeriodResult {
    std::optional<long> period;
    PolyStatus termination = PolyStatus::Ok;  // meaningful when !period
    long steps = 0;
};

// Iterate until the initial state recurs (exactly for rationals, within
// 1e-9 for doubles) or an undefined configuration is reached.
template <class S>
PeriodResult detect_period(const PolygonTable<S>& poly, const PolyState<S>& start,
                           long max_iters) {
    PeriodResult res;
    PolyState<S> cur = start;
    for (long k = 1; k <= max_iters; ++k) {
        PolyStepResult<S> r = poly_step(poly, cur);
        res.steps = k;
        if (r.status != PolyStatus::Ok) {
            res.termination = r.status;
            return res;
        }
        cur = r.next;
        if (states_equal(cur, start)) {
            res.period = k;
            return res;
        }
    }
    return res;
}

// Reconstruct the impact points x_0 .. x_{count-1} of an orbit (double
// precision, for output and diagnostics).
template <class S>
std::vector<Vec2> orbit_points(const PolygonTable<S>& poly, PolyState<S> st, long count) {
    std::vector<Vec2> pts;
    auto push = [&](const PVec<S>& p) {
        if constexpr (std::is_same_v<S, double>)
            pts.push_back({p.x, p.y});
        else
            pts.push_back({to_double(p.x), to_double(p.y)});
    };
    if (count > 0) push(poly.point_at(st.i, st.s));
    if (count > 1) push(poly.point_at(st.j, st.u));
    for (long k = 2; k < count; ++k) {
        PolyStepResult<S> r = poly_step(poly, st);
        if (r.status != PolyStatus::Ok) break;
        st = r.next;
        push(poly.point_at(st.j, st.u));
    }
    return pts;
}

// Predicted period of an orbit with rotation number k in the regular n-gon:
// 2g for even g, 4g for odd, with g = n / gcd(n, 2k).
long regular_polygon_period(int n, int k);

// Regular n-gon with vertices rounded to rationals with denominator 10^12;
// exact for n = 4.
ConvexPolygon regular_ngon(int n);

// Isosceles trapezoid with |AB|/(|AB| - |CD|) equal to the given ratio > 1.
ConvexPolygon trapezoid(const Rat& ratio);
long trapezoid_modulus(const Rat& ratio);
bool trapezoid_is_generic(const Rat& ratio);
std::array<long, 3> trapezoid_periods(long n);

// A convex quadrilateral without parallel sides carrying an exact
// 3-periodic orbit, together with its phase point. Nearby orbits are all
// 12-periodic.
ConvexPolygon quad_with_three_periodic_orbit();
PolyState<Rat> quad_three_periodic_start();

// Uniform random phase point with offsets of the given denominator and
// omega-positive non-parallel sides.
template <class S>
PolyState<S> random_start(const PolygonTable<S>& poly, std::mt19937_64& rng, int denom = 10000) {
    std::uniform_int_distribution<int> side(0, poly.sides() - 1);
    std::uniform_int_distribution<int> off(1, denom - 1);
    for (;;) {
        int i = side(rng), j = side(rng);
        if (i == j) continue;
        if (!(cross(poly.edge(i), poly.edge(j)) > 0)) continue;
        PolyState<S> st;
        st.i = i;
        st.j = j;
        if constexpr (std::is_same_v<S, double>) {
            st.s = static_cast<double>(off(rng)) / denom;
            st.u = static_cast<double>(off(rng)) / denom;
        } else {
            st.s = S(off(rng), denom);
            st.u = S(off(rng), denom);
        }
        return st;
    }
}

struct CensusResult {
    std::map<long, long> period_counts;
    long undefined = 0;  // samples terminating in VertexHit/ParallelSides
    long open_ended = 0; // samples exceeding max_iters
};

// Sample starts in an offset-ball around a periodic point and report the
// distribution of their periods (exact arithmetic).
CensusResult neighborhood_census(const ConvexPolygon& poly, const PolyState<Rat>& center,
                                 const Rat& radius, int samples, long max_iters,
                                 std::uint64_t seed);

// Product of the per-projection length distortions sin a_{i-1/2}/sin a_{i+1/2}
// around a closed orbit; equals 1 for closed cycles.
double transport_distortion_product(const std::vector<Vec2>& cycle_points);

}  // namespace sympb
