#include "stefanlab/numerics.hpp"

#include <cmath>

namespace stefanlab::num {

void solve_tridiagonal(std::vector<double> lower, std::vector<double> diag,
                       std::vector<double> upper, std::vector<double>& rhs) {
    const std::size_t n = diag.size();
    if (n == 0 || lower.size() != n || upper.size() != n || rhs.size() != n)
        throw precondition_error("tridiagonal: inconsistent band sizes");
    for (std::size_t i = 1; i < n; ++i) {
        if (diag[i - 1] == 0.0) throw numerical_error("tridiagonal: zero pivot");
        const double w = lower[i] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    if (diag[n - 1] == 0.0) throw numerical_error("tridiagonal: zero pivot");
    rhs[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
    }
}

namespace {
double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double fa,
                double b, double fb, double fm, double whole, double tol,
                int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, flm);
    const double right = simpson(f, m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0) throw numerical_error("quadrature: max depth exceeded");
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
           adaptive(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}
}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = simpson(f, a, fa, b, fb, fm);
    const double tol = std::max(abs_tol, rel_tol * std::abs(whole));
    return adaptive(f, a, fa, b, fb, fm, whole, tol, 60);
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol, int max_iter) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw numerical_error("bisect: endpoints do not bracket a root");
    for (int i = 0; i < max_iter && (hi - lo) > xtol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double trapezoid(const std::vector<double>& values, double dx) {
    if (values.size() < 2) return 0.0;
    double s = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) s += values[i];
    return s * dx;
}

double slope_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw precondition_error("slope_fit: need >= 2 matching samples");
    const double n = double(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw numerical_error("slope_fit: degenerate abscissae");
    return (n * sxy - sx * sy) / denom;
}

}  // namespace stefanlab::num
