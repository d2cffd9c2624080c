#include "stefanlab/model.hpp"

#include <cmath>
#include <numbers>

#include "stefanlab/numerics.hpp"

namespace stefanlab {

using std::numbers::pi;

double reaction_u(double u, double v, const ModelParams& p) {
    if (u < 0.0 || v < 0.0)
        throw precondition_error("reaction_u: densities must be nonnegative");
    const double interaction =
        (u == 0.0 && v == 0.0) ? 0.0 : p.b * u * v / (u + p.m * v);
    return p.lambda * u - u * u - interaction;
}

double reaction_v(double u, double v, const ModelParams& p) {
    if (u < 0.0 || v < 0.0)
        throw precondition_error("reaction_v: densities must be nonnegative");
    const double interaction =
        (u == 0.0 && v == 0.0) ? 0.0 : p.c * u * v / (u + p.m * v);
    return p.nu * v - v * v + interaction;
}

CoexistenceState coexistence_state(const ModelParams& p) {
    if (!p.coexistence_regime())
        throw precondition_error(
            "coexistence_state: requires 0 < m*lambda - b < b*nu/c");
    CoexistenceState s;
    s.a = p.lambda * (2.0 * p.c * p.m * p.m + p.b) -
          p.m * p.b * (p.nu + 2.0 * p.c);
    s.delta1 = s.a * s.a + 4.0 * (p.b + p.c * p.m * p.m) *
                               (p.b * (p.nu + p.c) - p.m * p.c * p.lambda) *
                               (p.m * p.lambda - p.b);
    if (s.delta1 < 0.0)
        throw numerical_error("coexistence_state: negative discriminant");
    s.u_star = (s.a + std::sqrt(s.delta1)) / (2.0 * (p.b + p.c * p.m * p.m));
    s.v_star = s.u_star * (p.lambda - s.u_star) /
               (p.b - p.m * (p.lambda - s.u_star));
    if (!(s.u_star > 0.0) || !(s.v_star > 0.0))
        throw numerical_error("coexistence_state: nonpositive root");
    return s;
}

BoundQuadruple bound_quadruple(const ModelParams& p) {
    if (!p.prey_viable())
        throw precondition_error("bound_quadruple: requires m*lambda > b");
    // Each update is a monotone 1-D root solve on a bracketed interval.
    auto v_from_u = [&](double u) {
        return num::bisect(
            [&](double v) { return p.nu - v + p.c * u / (u + p.m * v); },
            1e-14, p.nu + p.c + 1e-12, 1e-14);
    };
    auto u_from_v = [&](double v) {
        return num::bisect(
            [&](double u) { return p.lambda - u - p.b * v / (u + p.m * v); },
            1e-14, p.lambda, 1e-14);
    };
    BoundQuadruple q{p.lambda, 0.0, p.nu + p.c, 0.0};
    const int budget = 500;
    for (int it = 0; it < budget; ++it) {
        BoundQuadruple next;
        next.v_upper = v_from_u(q.u_upper);
        next.u_lower = u_from_v(next.v_upper);
        next.v_lower = v_from_u(next.u_lower);
        next.u_upper = u_from_v(next.v_lower);
        const double diff = std::max(
            {std::abs(next.u_upper - q.u_upper),
             std::abs(next.u_lower - q.u_lower),
             std::abs(next.v_upper - q.v_upper),
             std::abs(next.v_lower - q.v_lower)});
        q = next;
        if (diff < 1e-10) return q;
    }
    throw numerical_error("bound_quadruple: no convergence after 500 sweeps");
}

Thresholds thresholds(const ModelParams& p, const InitialData& init) {
    if (!p.prey_viable())
        throw precondition_error("thresholds: requires m*lambda > b");
    Thresholds t;
    const double len_prey = 0.5 * pi * std::sqrt(p.m / (p.m * p.lambda - p.b));
    const double len_pred = 0.5 * pi * std::sqrt(p.d / (p.nu + p.c));
    t.capital_lambda = std::min(len_prey, len_pred);
    t.z_star = len_pred;
    t.speed_upper =
        2.0 * std::max(std::sqrt(p.lambda), std::sqrt(p.d * (p.nu + p.c)));
    if (p.h0 < len_prey && init.integral_u0() > 0.0) {
        t.mu_star = std::max(1.0, p.m * init.sup_u0() / (p.m * p.lambda - p.b)) *
                    (len_prey - p.h0) / init.integral_u0();
    }
    if (p.h0 < len_pred && init.integral_v0() > 0.0) {
        t.mu_star_star = std::max(1.0, init.sup_v0() / p.nu) * (p.d / p.nu) *
                         (len_pred - p.h0) / init.integral_v0();
    }
    if (t.mu_star && t.mu_star_star)
        t.mu_zero = std::min(*t.mu_star, *t.mu_star_star);
    else if (t.mu_star)
        t.mu_zero = t.mu_star;
    else if (t.mu_star_star)
        t.mu_zero = t.mu_star_star;
    return t;
}

double UpperSolution::sigma(double t) const {
    return h0 * (1.0 + delta - 0.5 * delta * std::exp(-beta * t));
}

double UpperSolution::bar(double t, double x) const {
    return big_m * std::exp(-beta * t) * std::cos(0.5 * pi * x / sigma(t));
}

UpperSolution upper_solution_construct(const ModelParams& p,
                                       const InitialData& init, double delta) {
    if (!(delta > 0.0))
        throw precondition_error("upper_solution_construct: delta must be > 0");
    UpperSolution s;
    s.delta = delta;
    s.h0 = p.h0;
    s.beta = 0.5 * (0.5 * pi) * (0.5 * pi) /
                 (p.h0 * p.h0 * (1.0 + delta) * (1.0 + delta)) -
             0.5 * std::max(p.lambda, p.nu + p.c);
    if (!(s.beta > 0.0))
        throw precondition_error(
            "upper_solution_construct: beta <= 0 for this (p, delta); "
            "try a smaller delta or the construct is unavailable");
    // Smallest M with M cos(pi x / (2 sigma(0))) >= max(u0, v0), then +1%.
    const double sigma0 = p.h0 * (1.0 + 0.5 * delta);
    double m_min = 0.0;
    for (std::size_t i = 0; i < init.n_samples(); ++i) {
        const double x = init.dx() * double(i);
        const double denom = std::cos(0.5 * pi * x / sigma0);
        const double need = std::max(init.u0[i], init.v0[i]);
        if (need > 0.0) m_min = std::max(m_min, need / denom);
    }
    if (m_min == 0.0) m_min = 1.0;  // zero initial data: any envelope works
    s.big_m = 1.01 * m_min;
    s.mu0 = delta * s.beta * p.h0 * p.h0 / (2.0 * pi * s.big_m * (1.0 + p.rho));
    return s;
}

}  // namespace stefanlab
