#include "sympb/polygon.hpp"

#include <cmath>
#include <numeric>

namespace sympb {

PolygonTable<double> to_double(const ConvexPolygon& poly) {
    std::vector<PVec<double>> v;
    v.reserve(poly.sides());
    for (const auto& p : poly.vertices()) v.push_back({to_double(p.x), to_double(p.y)});
    return PolygonTable<double>(std::move(v));
}

long regular_polygon_period(int n, int k) {
    if (n < 3 || k < 1 || k > (n - 1) / 2)
        throw std::invalid_argument("regular_polygon_period: need n >= 3, 1 <= k <= (n-1)/2");
    long g = n / std::gcd(static_cast<long>(n), 2L * k);
    return (g % 2 == 0) ? 2 * g : 4 * g;
}

ConvexPolygon regular_ngon(int n) {
    if (n < 3) throw std::invalid_argument("regular polygon needs n >= 3");
    const long long denom = 1000000000000LL;  // 10^12
    std::vector<RVec2> v;
    v.reserve(n);
    for (int m = 0; m < n; ++m) {
        double ang = 2.0 * M_PI * m / n;
        auto round_rat = [&](double x) {
            return Rat(static_cast<long long>(std::llround(x * denom)), denom);
        };
        v.push_back({round_rat(std::cos(ang)), round_rat(std::sin(ang))});
    }
    return ConvexPolygon(std::move(v));
}

long trapezoid_modulus(const Rat& ratio) {
    Rat fl = numerator(ratio) / denominator(ratio);  // integer division -> floor for positive
    return fl.convert_to<long>();
}

bool trapezoid_is_generic(const Rat& ratio) { return denominator(ratio) != 1; }

ConvexPolygon trapezoid(const Rat& ratio) {
    if (!(ratio > 1)) throw std::invalid_argument("trapezoid ratio must exceed 1");
    Rat a = Rat(numerator(ratio));
    Rat c = a - Rat(denominator(ratio));
    // Vertices A(-a,0) B(a,0) C(c,1) D(-c,1); |AB|/(|AB|-|CD|) = ratio.
    std::vector<RVec2> v = {{-a, Rat(0)}, {a, Rat(0)}, {c, Rat(1)}, {-c, Rat(1)}};
    return ConvexPolygon(std::move(v));
}

std::array<long, 3> trapezoid_periods(long n) { return {16 * n - 4, 16 * n + 4, 16 * n + 12}; }

ConvexPolygon quad_with_three_periodic_orbit() {
    // Sides through (0,-1), (1,0), (-1,0) parallel to the opposite triangle
    // sides; the fourth side cuts the top corner without creating parallel
    // pairs.
    std::vector<RVec2> v = {{Rat(-2), Rat(-1)},
                            {Rat(2), Rat(-1)},
                            {Rat(7, 32), Rat(25, 32)},
                            {Rat(-7, 24), Rat(17, 24)}};
    return ConvexPolygon(std::move(v));
}

PolyState<Rat> quad_three_periodic_start() {
    return PolyState<Rat>{0, Rat(1, 2), 1, Rat(32, 57)};
}

CensusResult neighborhood_census(const ConvexPolygon& poly, const PolyState<Rat>& center,
                                 const Rat& radius, int samples, long max_iters,
                                 std::uint64_t seed) {
    CensusResult res;
    std::mt19937_64 rng(seed);
    const int denom = 10000;
    std::uniform_int_distribution<int> pick(-denom, denom);
    int taken = 0;
    while (taken < samples) {
        Rat ds = radius * Rat(pick(rng), denom);
        Rat du = radius * Rat(pick(rng), denom);
        PolyState<Rat> st = center;
        st.s += ds;
        st.u += du;
        if (!(st.s > 0 && st.s < 1 && st.u > 0 && st.u < 1)) continue;
        ++taken;
        PeriodResult pr = detect_period(poly, st, max_iters);
        if (pr.period)
            ++res.period_counts[*pr.period];
        else if (pr.termination == PolyStatus::Ok)
            ++res.open_ended;
        else
            ++res.undefined;
    }
    return res;
}

double transport_distortion_product(const std::vector<Vec2>& cycle) {
    const size_t n = cycle.size();
    // Line l_i passes through x_i parallel to x_{i+1} - x_{i-1}; the factor
    // of the projection along l_i is sin(angle(l_{i-1}, l_i)) /
    // sin(angle(l_i, l_{i+1})).
    std::vector<Vec2> dir(n);
    for (size_t i = 0; i < n; ++i) {
        Vec2 d = cycle[(i + 1) % n] - cycle[(i + n - 1) % n];
        dir[i] = normalized(d);
    }
    double prod = 1.0;
    for (size_t i = 0; i < n; ++i) {
        double num = std::abs(cross(dir[(i + n - 1) % n], dir[i]));
        double den = std::abs(cross(dir[i], dir[(i + 1) % n]));
        prod *= num / den;
    }
    return prod;
}

}  // namespace sympb
