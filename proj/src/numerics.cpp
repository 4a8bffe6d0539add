#include "sympb/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace sympb {

int thread_budget() {
    int hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SYMPB_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    int workers = std::min(thread_budget(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next(0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(fa, flm, fm, m - a);
    double right = simpson(fm, frm, fb, b - m);
    double err = left + right - whole;
    if (depth <= 0 || std::abs(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// 7-point Gauss-Legendre nodes/weights on [-1,1].
constexpr double kGlX[7] = {-0.9491079123427585, -0.7415311855993945, -0.4058451513773972,
                            0.0,                 0.4058451513773972,  0.7415311855993945,
                            0.9491079123427585};
constexpr double kGlW[7] = {0.1294849661688697, 0.2797053914892766, 0.3818300505051189,
                            0.4179591836734694, 0.3818300505051189, 0.2797053914892766,
                            0.1294849661688697};

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = simpson(fa, fm, fb, b - a);
    return adapt(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int panels) {
    double h = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        double c = lo + 0.5 * h, r = 0.5 * h;
        double s = 0.0;
        for (int k = 0; k < 7; ++k) s += kGlW[k] * f(c + r * kGlX[k]);
        sum += s * r;
    }
    return sum;
}

double solve_bracketed(const std::function<double(double)>& f, double lo, double hi,
                       double param_tol, const std::function<double(double)>& df) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::runtime_error("solve_bracketed: endpoints do not bracket a root");
    for (int it = 0; it < 200 && (hi - lo) > param_tol; ++it) {
        double mid = 0.5 * (lo + hi);
        double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    if (df) {
        for (int it = 0; it < 4; ++it) {
            double fx = f(x), dfx = df(x);
            if (dfx == 0.0) break;
            double step = fx / dfx;
            double xn = x - step;
            if (xn < lo || xn > hi) break;
            x = xn;
            if (std::abs(step) < 0.25 * param_tol) break;
        }
    }
    return x;
}

double maximize_golden(const std::function<double(double)>& f, double a, double b,
                       double param_tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > param_tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

std::vector<double> solve_dense(std::vector<std::vector<double>> A, std::vector<double> b) {
    const size_t n = A.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        if (A[piv][col] == 0.0) throw std::runtime_error("solve_dense: singular matrix");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = col + 1; r < n; ++r) {
            double fac = A[r][col] / A[col][col];
            if (fac == 0.0) continue;
            for (size_t c = col; c < n; ++c) A[r][c] -= fac * A[col][c];
            b[r] -= fac * b[col];
        }
    }
    std::vector<double> x(n);
    for (size_t i = n; i-- > 0;) {
        double s = b[i];
        for (size_t c = i + 1; c < n; ++c) s -= A[i][c] * x[c];
        x[i] = s / A[i][i];
    }
    return x;
}

std::vector<double> least_squares(const std::vector<std::vector<double>>& X,
                                  const std::vector<double>& y) {
    const size_t rows = X.size(), cols = X[0].size();
    std::vector<std::vector<double>> N(cols, std::vector<double>(cols, 0.0));
    std::vector<double> rhs(cols, 0.0);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t i = 0; i < cols; ++i) {
            rhs[i] += X[r][i] * y[r];
            for (size_t j = 0; j < cols; ++j) N[i][j] += X[r][i] * X[r][j];
        }
    }
    return solve_dense(std::move(N), std::move(rhs));
}

double regression_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CumulativeTable::CumulativeTable(std::function<double(double)> w, double period, int panels)
    : w_(std::move(w)), period_(period) {
    h_ = period_ / panels;
    cum_.resize(panels + 1);
    cum_[0] = 0.0;
    for (int i = 0; i < panels; ++i)
        cum_[i + 1] = cum_[i] + integrate_gl(w_, i * h_, (i + 1) * h_, 1);
    total_ = cum_.back();
}

double CumulativeTable::value(double x) const {
    double wraps = std::floor(x / period_);
    double xr = x - wraps * period_;
    int i = std::min<int>(static_cast<int>(xr / h_), static_cast<int>(cum_.size()) - 2);
    return wraps * total_ + cum_[i] + integrate_gl(w_, i * h_, xr, 1);
}

double CumulativeTable::inverse(double t) const {
    double wraps = std::floor(t / total_);
    double tr = t - wraps * total_;
    auto it = std::upper_bound(cum_.begin(), cum_.end(), tr);
    int i = std::max<int>(0, static_cast<int>(it - cum_.begin()) - 1);
    double lo = i * h_, hi = std::min(period_, lo + h_);
    // Newton from the panel midpoint, bisection fallback on stall.
    double x = 0.5 * (lo + hi);
    for (int k = 0; k < 80; ++k) {
        double err = (cum_[i] + integrate_gl(w_, i * h_, x, 1)) - tr;
        if (std::abs(err) < 1e-15 * std::max(1.0, total_)) break;
        double d = w_(x);
        double xn = (d > 0.0) ? x - err / d : x;
        if (xn <= lo || xn >= hi) {
            if (err > 0.0)
                hi = x;
            else
                lo = x;
            xn = 0.5 * (lo + hi);
        } else {
            if (err > 0.0)
                hi = x;
            else
                lo = x;
        }
        if (std::abs(xn - x) < 1e-16 * period_) {
            x = xn;
            break;
        }
        x = xn;
    }
    return wraps * period_ + x;
}

}  // namespace sympb
