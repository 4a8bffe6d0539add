#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace sympb {

// Adaptive composite Simpson quadrature with absolute tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-12, int max_depth = 48);

// Composite 7-point Gauss-Legendre over n equal panels.
double integrate_gl(const std::function<double(double)>& f, double a, double b, int panels);

// Bisection on a bracket [lo,hi] with f(lo), f(hi) of opposite sign, followed
// by a few Newton steps when a derivative is supplied. Returns the root.
double solve_bracketed(const std::function<double(double)>& f, double lo, double hi,
                       double param_tol = 1e-13,
                       const std::function<double(double)>& df = nullptr);

// Golden-section maximization of f on [a,b].
double maximize_golden(const std::function<double(double)>& f, double a, double b,
                       double param_tol = 1e-12);

// Dense in-place Gaussian elimination with partial pivoting; solves A x = b.
std::vector<double> solve_dense(std::vector<std::vector<double>> A, std::vector<double> b);

// Ordinary least squares for a small design matrix (rows x cols, rows >= cols).
std::vector<double> least_squares(const std::vector<std::vector<double>>& X,
                                  const std::vector<double>& y);

// Slope of the least-squares line through (x_i, y_i).
double regression_slope(const std::vector<double>& x, const std::vector<double>& y);

// Worker count for sample-parallel loops: min(hardware, SYMPB_THREADS).
int thread_budget();

// Runs fn(0..n-1) across the thread budget. Work items must be independent
// and deterministic in their index so results do not depend on the budget.
void parallel_for(int n, const std::function<void(int)>& fn);

// Cumulative integral table of a smooth positive weight w over [0, period],
// with machine-accurate evaluation and monotone inversion. Used for the arc
// length and affine length reparameterizations of closed curves.
class CumulativeTable {
public:
    CumulativeTable() = default;
    CumulativeTable(std::function<double(double)> w, double period, int panels = 2048);

    double total() const { return total_; }
    double period() const { return period_; }

    // T(x) = integral of w over [0, x]; x may be any real (extends linearly
    // by periods).
    double value(double x) const;

    // Inverse of value(): the x with value(x) = t.
    double inverse(double t) const;

private:
    std::function<double(double)> w_;
    double period_ = 0.0;
    double total_ = 0.0;
    double h_ = 0.0;
    std::vector<double> cum_;  // cumulative values at grid points
};

}  // namespace sympb
