#ifndef STEFANLAB_NUMERICS_HPP
#define STEFANLAB_NUMERICS_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "stefanlab/params.hpp"

namespace stefanlab::num {

/// Thomas algorithm for a diagonally dominant tridiagonal system.
/// lower[0] and upper[n-1] are unused. Overwrites rhs with the solution.
void solve_tridiagonal(std::vector<double> lower, std::vector<double> diag,
                       std::vector<double> upper, std::vector<double>& rhs);

/// Adaptive Simpson quadrature of f on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, double abs_tol = 1e-14);

/// Bisection for a root of f in [lo, hi]; f(lo) and f(hi) must bracket.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol, int max_iter = 200);

/// Composite trapezoid over uniformly spaced samples.
double trapezoid(const std::vector<double>& values, double dx);

/// Least-squares slope of y against x.
double slope_fit(const std::vector<double>& x, const std::vector<double>& y);

/// Embedded Cash-Karp 4(5) step for a planar autonomous system.
/// On success advances y and z by the accepted step and updates dz with the
/// suggested next step size. Returns false when the trial step was rejected
/// (dz is shrunk; call again).
template <class F>
bool rk45_step(const F& f, std::array<double, 2>& y, double& z, double& dz,
               double rel_tol = 1e-12, double abs_tol = 1e-14) {
    static constexpr double a2 = 1.0 / 5, a3 = 3.0 / 10, a4 = 3.0 / 5, a5 = 1.0,
                            a6 = 7.0 / 8;
    static constexpr double b21 = 1.0 / 5;
    static constexpr double b31 = 3.0 / 40, b32 = 9.0 / 40;
    static constexpr double b41 = 3.0 / 10, b42 = -9.0 / 10, b43 = 6.0 / 5;
    static constexpr double b51 = -11.0 / 54, b52 = 5.0 / 2, b53 = -70.0 / 27,
                            b54 = 35.0 / 27;
    static constexpr double b61 = 1631.0 / 55296, b62 = 175.0 / 512,
                            b63 = 575.0 / 13824, b64 = 44275.0 / 110592,
                            b65 = 253.0 / 4096;
    static constexpr double c1 = 37.0 / 378, c3 = 250.0 / 621, c4 = 125.0 / 594,
                            c6 = 512.0 / 1771;
    static constexpr double d1 = c1 - 2825.0 / 27648, d3 = c3 - 18575.0 / 48384,
                            d4 = c4 - 13525.0 / 55296, d5 = -277.0 / 14336,
                            d6 = c6 - 1.0 / 4;
    (void)a2; (void)a3; (void)a4; (void)a5; (void)a6;

    using V = std::array<double, 2>;
    auto axpy = [](const V& y0, double h, auto&&... terms) {
        V r = y0;
        auto add = [&](double w, const V& k) {
            r[0] += h * w * k[0];
            r[1] += h * w * k[1];
        };
        (add(terms.first, terms.second), ...);
        return r;
    };
    const V k1 = f(y);
    const V k2 = f(axpy(y, dz, std::pair{b21, k1}));
    const V k3 = f(axpy(y, dz, std::pair{b31, k1}, std::pair{b32, k2}));
    const V k4 = f(axpy(y, dz, std::pair{b41, k1}, std::pair{b42, k2},
                        std::pair{b43, k3}));
    const V k5 = f(axpy(y, dz, std::pair{b51, k1}, std::pair{b52, k2},
                        std::pair{b53, k3}, std::pair{b54, k4}));
    const V k6 = f(axpy(y, dz, std::pair{b61, k1}, std::pair{b62, k2},
                        std::pair{b63, k3}, std::pair{b64, k4},
                        std::pair{b65, k5}));
    const V y5 = axpy(y, dz, std::pair{c1, k1}, std::pair{c3, k3},
                      std::pair{c4, k4}, std::pair{c6, k6});
    const V err = {dz * (d1 * k1[0] + d3 * k3[0] + d4 * k4[0] + d5 * k5[0] +
                         d6 * k6[0]),
                   dz * (d1 * k1[1] + d3 * k3[1] + d4 * k4[1] + d5 * k5[1] +
                         d6 * k6[1])};
    double scale = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double tol =
            abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
        scale = std::max(scale, std::abs(err[i]) / tol);
    }
    if (scale <= 1.0) {
        y = y5;
        z += dz;
        dz *= std::min(5.0, 0.9 * std::pow(std::max(scale, 1e-16), -0.2));
        return true;
    }
    dz *= std::max(0.1, 0.9 * std::pow(scale, -0.25));
    return false;
}

}  // namespace stefanlab::num

#endif
