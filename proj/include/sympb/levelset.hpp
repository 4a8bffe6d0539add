#pragma once

#include <memory>

#include "sympb/sphere.hpp"

namespace sympb {

// Table {F = 1} for a smooth strictly convex F with F(0) < 1, carrying the
// standard form; the characteristic direction at x is J grad F(x).
class LevelSetBody {
public:
    virtual ~LevelSetBody() = default;

    virtual int n() const = 0;  // complex dimension
    virtual double F(const CVec& z) const = 0;
    virtual CVec grad(const CVec& z) const = 0;
    virtual CVec hess_apply(const CVec& z, const CVec& v) const = 0;

    CVec normal(const CVec& z) const { return normalized(grad(z)); }

    // Radial projection onto {F = 1}.
    CVec project(const CVec& z) const;
};

// F = |z|^2 + eps sum_j |z_j|^4.
class QuarticBody : public LevelSetBody {
public:
    QuarticBody(double eps, int n) : eps_(eps), n_(n) {}
    int n() const override { return n_; }
    double F(const CVec& z) const override;
    CVec grad(const CVec& z) const override;
    CVec hess_apply(const CVec& z, const CVec& v) const override;
    double eps() const { return eps_; }

private:
    double eps_;
    int n_;
};

// F = sum_j |z_j|^2 / a_j: the normalized-ellipsoid table as a level set.
class EllipsoidLevelSet : public LevelSetBody {
public:
    explicit EllipsoidLevelSet(std::vector<double> a) : a_(std::move(a)) {}
    int n() const override { return static_cast<int>(a_.size()); }
    double F(const CVec& z) const override;
    CVec grad(const CVec& z) const override;
    CVec hess_apply(const CVec& z, const CVec& v) const override;
    const std::vector<double>& weights() const { return a_; }

private:
    std::vector<double> a_;
};

struct BodyChord {
    CVec x0, x1;
};

// Second intersection x3 of the ray x1 + t J nu(x2), t > 0, with the body;
// bracketed root-finding on F - 1.
BodyChord step_levelset(const LevelSetBody& body, const BodyChord& chord);

// Support point: the unique z on {F = 1} with outward normal along u.
// Damped Newton on (grad F = lambda u, F = 1).
CVec support_point(const LevelSetBody& body, const CVec& u);

// Opposite point z*: tangent hyperplanes at z and z* parallel.
CVec opposite_point(const LevelSetBody& body, const CVec& z);

}  // namespace sympb
