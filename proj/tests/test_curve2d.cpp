#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sympb/affine.hpp"
#include "sympb/curve.hpp"
#include "sympb/numerics.hpp"
#include "sympb/radon.hpp"

using namespace sympb;

namespace {
double wrap_dist(double a, double b, double period) {
    return std::abs(std::remainder(a - b, period));
}
}  // namespace

TEST_CASE("circle evaluation is the identity case") {
    auto circ = make_circle();
    CurvePoint pt = circ->eval(0.0);
    CHECK(pt.position.x == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pt.position.y == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(pt.normal.x == doctest::Approx(1.0));
    CHECK(pt.normal.y == doctest::Approx(0.0));
    CHECK(pt.curvature == doctest::Approx(1.0));
}

TEST_CASE("ellipse evaluation and the tangent-line distance oracle") {
    EllipseCurve ell(2.0, 1.0);
    CurvePoint pt = ell.eval(0.0);
    CHECK(pt.position.x == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(pt.position.y == doctest::Approx(0.0).epsilon(1e-14));
    // Distance from the origin to the tangent line equals p(alpha).
    for (double a : {0.0, 0.4, 1.1, 2.0, 3.3, 5.1}) {
        CurvePoint q = ell.eval(a);
        double dist = std::abs(cross(q.position, q.tangent));
        CHECK(dist == doctest::Approx(ell.p(a)).epsilon(1e-12));
    }
}

TEST_CASE("support identity <gamma, nu> = p on a fine grid") {
    SupportFourierCurve curve(1.0, {{0.03, -0.02}, {0.0, 0.04}, {0.1, 0.0}});
    for (int i = 0; i < 2048; ++i) {
        double a = 2.0 * M_PI * i / 2048;
        CurvePoint pt = curve.eval(a);
        REQUIRE(std::abs(dot(pt.position, pt.normal) - curve.p(a)) < 1e-12);
    }
}

TEST_CASE("convexity and origin validation") {
    // rho = 1 - 1.6 cos(3a) changes sign: not a convex support function.
    CHECK_THROWS_AS(SupportFourierCurve(1.0, {{0, 0}, {0, 0}, {0.2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SupportFourierCurve(-1.0, {}), std::invalid_argument);
    CHECK_THROWS_AS(EllipseCurve(2.0, 0.0), std::invalid_argument);
}

TEST_CASE("opposite point: symmetry, involution, defining residual") {
    auto circ = make_circle();
    CHECK(circ->opposite(0.0) == doctest::Approx(M_PI));

    SupportFourierCurve pert(1.0, {{0, 0}, {0, 0}, {0.05, 0}});
    double a = 0.3, as = pert.opposite(a);
    CHECK(as == doctest::Approx(0.3 + M_PI));
    CHECK(std::abs(cross(pert.normal(a), pert.normal(as))) < 1e-12);

    // Central symmetry: even-harmonic support curves have gamma(a*) = -gamma(a).
    SupportFourierCurve even(1.0, {{0, 0}, {0.08, -0.05}, {0, 0}, {0.01, 0.02}});
    for (double t : {0.1, 1.2, 2.9, 4.4}) {
        Vec2 sum = even.position(t) + even.position(even.opposite(t));
        CHECK(norm(sum) < 1e-12);
    }

    // Radon curves resolve the opposite point by root-finding on the
    // normals; central symmetry makes the answer exact.
    RadonCurve radon(3.0);
    for (double t : {0.2, 1.0, 2.8, 4.9}) {
        double ts = radon.opposite(t);
        CHECK(norm(radon.position(t) + radon.position(ts)) < 1e-10);
        CHECK(wrap_dist(radon.opposite(ts), t, radon.period()) < 1e-10);
    }
}

TEST_CASE("affine length: circle, ellipse, rotation invariance") {
    auto circ = make_circle();
    CHECK(affine_length(*circ) == doctest::Approx(2.0 * M_PI).epsilon(1e-12));

    // Unimodular-invariance oracle: diag(a,b)/sqrt(ab) maps the unit circle
    // to the rescaled ellipse, so L(ellipse) = (ab)^{1/3} L(circle).
    EllipseCurve ell(2.0, 1.0);
    CHECK(affine_length(ell) == doctest::Approx(2.0 * M_PI * std::cbrt(2.0)).epsilon(1e-12));
    EllipseCurve ell2(3.0, 0.7);
    CHECK(affine_length(ell2) == doctest::Approx(2.0 * M_PI * std::cbrt(2.1)).epsilon(1e-12));

    // Rotating the curve permutes the support harmonics.
    double theta = 0.77;
    auto rotate_coeffs = [&](std::vector<std::pair<double, double>> cs) {
        for (size_t k = 1; k <= cs.size(); ++k) {
            auto [c, s] = cs[k - 1];
            double ck = std::cos(k * theta), sk = std::sin(k * theta);
            cs[k - 1] = {c * ck - s * sk, c * sk + s * ck};
        }
        return cs;
    };
    std::vector<std::pair<double, double>> base = {{0, 0}, {0.1, 0.0}};
    SupportFourierCurve c1(1.0, base);
    SupportFourierCurve c2(1.0, rotate_coeffs(base));
    CHECK(affine_length(c1) == doctest::Approx(affine_length(c2)).epsilon(1e-10));
}

TEST_CASE("affine length is invariant under the unimodular ellipse family") {
    // diag(s, 1/s) is area preserving and maps ellipse (a,b) to (sa, b/s).
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (int trial = 0; trial < 6; ++trial) {
        double a = u(rng), b = u(rng), s = u(rng);
        double l1 = affine_length(EllipseCurve(a, b));
        double l2 = affine_length(EllipseCurve(s * a, b / s));
        CHECK(l1 == doctest::Approx(l2).epsilon(1e-8));
    }
}

TEST_CASE("affine curvature: circle scaling and ellipse constancy") {
    auto unit = make_circle();
    AffineTable t1(unit);
    for (double a : {0.0, 1.0, 2.5})
        CHECK(t1.affine_curvature_at_alpha(a) == doctest::Approx(1.0).epsilon(1e-12));

    auto big = make_circle(2.5);
    AffineTable t2(big);
    CHECK(t2.affine_curvature_at_alpha(0.7) ==
          doctest::Approx(std::pow(2.5, -4.0 / 3.0)).epsilon(1e-12));

    auto ell = std::make_shared<EllipseCurve>(2.0, 1.0);
    AffineTable t3(ell);
    double expect = std::pow(2.0, -2.0 / 3.0);
    for (double a : {0.0, 0.9, 2.2, 4.0})
        CHECK(t3.affine_curvature_at_alpha(a) == doctest::Approx(expect).epsilon(1e-10));
    // total curvature integral: 2 pi (ab)^{-1/3}
    CHECK(t3.total_affine_curvature() ==
          doctest::Approx(2.0 * M_PI * std::pow(2.0, -1.0 / 3.0)).epsilon(1e-10));
}

TEST_CASE("affine isoperimetric inequality over the corpus") {
    std::vector<std::shared_ptr<SupportFunctionCurve>> corpus;
    corpus.push_back(make_circle());
    corpus.push_back(std::make_shared<EllipseCurve>(2.0, 1.0));
    corpus.push_back(std::make_shared<SupportFourierCurve>(
        1.0, std::vector<std::pair<double, double>>{{0, 0}, {0.05, 0.02}, {0.02, -0.03}}));
    corpus.push_back(std::make_shared<SupportFourierCurve>(
        1.0, std::vector<std::pair<double, double>>{{0, 0}, {0, 0}, {0.1, 0}}));
    for (const auto& c : corpus) {
        double L = affine_length(*c), A = c->area();
        CHECK(L * L * L <= 8.0 * M_PI * M_PI * A * (1.0 + 1e-12));
    }
    // equality exactly for ellipses
    for (double ab : {1.0, 2.0, 3.5}) {
        EllipseCurve e(ab, 1.0);
        double L = affine_length(e), A = e.area();
        CHECK(L * L * L == doctest::Approx(8.0 * M_PI * M_PI * A).epsilon(1e-8));
    }
}

TEST_CASE("radon curve p=2 is the unit circle") {
    RadonCurve circ(2.0);
    CHECK(circ.period() == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
    for (double t : {0.0, 0.9, 2.2, 4.7}) {
        Vec2 p = circ.position(t);
        CHECK(p.x == doctest::Approx(std::cos(t)).epsilon(1e-12));
        CHECK(p.y == doctest::Approx(std::sin(t)).epsilon(1e-12));
    }
}

TEST_CASE("radon curve p=3: normalization, endpoints, junctions, symmetry") {
    RadonCurve radon(3.0);
    double Tp = radon.quarter_p();

    // [C1, C1'] = 1 in the sectorial parameterization.
    for (int i = 1; i < 200; ++i) {
        double t = Tp * i / 200;
        REQUIRE(std::abs(cross(radon.position(t), radon.velocity(t)) - 1.0) < 1e-9);
    }

    // Endpoint identities C1'(0) = b, C1'(T) = -a.
    CHECK(norm(radon.velocity(0.0) - Vec2{0.0, 1.0}) < 1e-10);
    CHECK(norm(radon.velocity(Tp - 1e-13) - Vec2{-1.0, 0.0}) < 1e-8);

    // C^1 joins: one-sided tangents agree at all four junctions.
    double Tq = radon.quarter_q();
    double junctions[4] = {0.0, Tp, Tp + Tq, 2 * Tp + Tq};
    Vec2 expected_dir[4] = {{0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}, {1.0, 0.0}};
    for (int j = 0; j < 4; ++j) {
        Vec2 right = radon.tangent(junctions[j] + 1e-13);
        Vec2 left = radon.tangent(junctions[j] - 1e-13 + radon.period());
        CHECK(norm(right - expected_dir[j]) < 1e-8);
        CHECK(norm(left - expected_dir[j]) < 1e-8);
    }

    // Central symmetry is exact by construction.
    for (double t : {0.3, 1.5, 2.9}) {
        Vec2 s = radon.position(t) + radon.position(t + radon.period() / 2);
        CHECK(norm(s) < 1e-12);
    }

    CHECK_THROWS_AS(RadonCurve(1.0), std::invalid_argument);
}

TEST_CASE("radon derivative fit: C2 = C1' traces the conjugate norm circle") {
    RadonCurve radon(3.0);
    auto fit = radon.fit_c1_derivative();
    double q = radon.conjugate_exponent();
    CHECK(q == doctest::Approx(1.5));
    for (size_t i = 0; i < fit.t.size(); ++i) {
        Vec2 d = fit.c1_deriv[i];
        double lq = std::pow(std::abs(d.x), q) + std::pow(std::abs(d.y), q);
        REQUIRE(std::abs(lq - 1.0) < 1e-7);
        REQUIRE(norm(d - radon.velocity(fit.t[i])) < 1e-7);
    }
}

TEST_CASE("l_p circle has flat points at the axes for p > 2") {
    LpCircleCurve lp4(4.0);
    CHECK(lp4.has_flat_point());
    for (double t : lp4.flat_points()) CHECK(std::abs(lp4.curvature(t)) < 1e-12);
    // curvature positive away from the flat points
    CHECK(lp4.curvature(0.5 * lp4.quarter_first()) > 0.1);
    // circle case is not flat
    CHECK(!LpCircleCurve(2.0).has_flat_point());
}
