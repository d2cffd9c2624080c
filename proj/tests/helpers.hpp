#ifndef STEFANLAB_TESTS_HELPERS_HPP
#define STEFANLAB_TESTS_HELPERS_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "stefanlab/params.hpp"
#include "stefanlab/solver.hpp"

namespace testutil {

/// The parameter set used throughout the tests.
inline stefanlab::ModelParams reference_params() {
    stefanlab::ModelParams p;
    p.lambda = 1.0;
    p.b = 0.5;
    p.m = 1.0;
    p.d = 1.0;
    p.nu = 1.0;
    p.c = 0.5;
    p.mu = 1.0;
    p.rho = 1.0;
    p.h0 = 1.0;
    return p;
}

/// Independent single-species free-boundary solver used as a reference for
/// decoupled runs. Same discretization as the production solver (front-fixed
/// grid, lagged front update, implicit diffusion, explicit advection and
/// logistic reaction), but written from scratch with its own elimination.
struct SingleSpeciesResult {
    double t;
    double h;
    std::vector<double> w;  ///< n+2 values on the normalized grid
};

inline SingleSpeciesResult reference_single_species(
    double growth, double diffusivity, double expansion, double h0,
    const std::vector<double>& init_samples, std::size_t n, double dt_base,
    double t_end, double dt_safety) {
    const double dy = 1.0 / double(n + 1);
    const std::size_t m = init_samples.size();
    const double dx = h0 / double(m - 1);
    auto init_at = [&](double x) {
        if (x <= 0.0) return init_samples.front();
        if (x >= h0) return init_samples.back();
        const double s = x / dx;
        const std::size_t i = std::size_t(s);
        const double frac = s - double(i);
        return init_samples[i] * (1.0 - frac) + init_samples[i + 1] * frac;
    };

    std::vector<double> w(n + 2);
    for (std::size_t i = 0; i <= n + 1; ++i) w[i] = init_at(dy * double(i) * h0);
    w[n + 1] = 0.0;

    double t = 0.0, h = h0;
    auto gradient = [&]() {
        return (-4.0 * w[n] + w[n - 1]) / (2.0 * dy * h);
    };
    double h_prime = -expansion * gradient();

    while (t < t_end - 1e-14) {
        double dt = std::min(dt_base, t_end - t);
        while (std::abs(h_prime) * dt > dt_safety * h * dy) dt *= 0.5;

        h_prime = -expansion * gradient();
        const double h_new = h + dt * h_prime;
        const double r = dt * diffusivity / (h_new * h_new * dy * dy);

        std::vector<double> lower(n + 1, -r), diag(n + 1, 1.0 + 2.0 * r),
            upper(n + 1, -r), rhs(n + 1);
        upper[0] = -2.0 * r;
        for (std::size_t i = 0; i <= n; ++i) {
            const double y = dy * double(i);
            const double w_right = (i == n) ? 0.0 : w[i + 1];
            const double w_left = (i == 0) ? w[1] : w[i - 1];
            const double advect =
                y * h_prime / h_new * (w_right - w_left) / (2.0 * dy);
            const double react = growth * w[i] - w[i] * w[i];
            rhs[i] = w[i] + dt * (advect + react);
        }
        // Forward elimination / back substitution, written out longhand.
        for (std::size_t i = 1; i <= n; ++i) {
            const double factor = lower[i] / diag[i - 1];
            diag[i] -= factor * upper[i - 1];
            rhs[i] -= factor * rhs[i - 1];
        }
        rhs[n] /= diag[n];
        for (std::size_t i = n; i-- > 0;)
            rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];

        for (std::size_t i = 0; i <= n; ++i) w[i] = std::max(rhs[i], 0.0);
        w[n + 1] = 0.0;
        h = h_new;
        t += dt;
    }
    return {t, h, std::move(w)};
}

}  // namespace testutil

#endif
