#ifndef STEFANLAB_MODEL_HPP
#define STEFANLAB_MODEL_HPP

#include <optional>

#include "stefanlab/params.hpp"

namespace stefanlab {

/**
 * The positive constant steady state (u*, v*) together with the two scalars
 * of its closed form:
 *   A      = lambda (2 c m^2 + b) - m b (nu + 2 c)
 *   delta1 = A^2 + 4 (b + c m^2) (b (nu + c) - m c lambda) (m lambda - b)
 *   u*     = (A + sqrt(delta1)) / (2 (b + c m^2))
 *   v*     = u* (lambda - u*) / (b - m (lambda - u*))
 * Only defined in the coexistence regime.
 */
struct CoexistenceState {
    double u_star;
    double v_star;
    double a;
    double delta1;
};

/// The quadruple (u_upper, u_lower, v_upper, v_lower) determined by the
/// coupled system
///   lambda - u_lower - b v_upper / (u_lower + m v_upper) = 0
///   lambda - u_upper - b v_lower / (u_upper + m v_lower) = 0
///   nu - v_upper + c u_upper / (u_upper + m v_upper) = 0
///   nu - v_lower + c u_lower / (u_lower + m v_lower) = 0
struct BoundQuadruple {
    double u_upper;
    double u_lower;
    double v_upper;
    double v_lower;
};

/**
 * Closed-form critical quantities. The mu_star / mu_star_star branches are
 * absent when h0 already meets or exceeds the corresponding critical length
 * (their parenthesized factor would be nonpositive); mu_zero is the minimum
 * of the applicable branches.
 */
struct Thresholds {
    double capital_lambda;                  ///< critical habitat length
    double z_star;                          ///< (pi/2) sqrt(d/(nu+c))
    std::optional<double> mu_star;          ///< prey-route spreading criterion
    std::optional<double> mu_star_star;     ///< predator-route criterion
    std::optional<double> mu_zero;          ///< min of applicable branches
    double speed_upper;                     ///< 2 max{sqrt(lambda), sqrt(d(nu+c))}
};

/**
 * The decaying cosine upper solution:
 *   sigma(t)  = h0 (1 + delta - (delta/2) e^{-beta t})
 *   bar(t, x) = M e^{-beta t} cos(pi x / (2 sigma(t)))
 * with mu0 = delta beta h0^2 / (2 pi M (1 + rho)). Any run with mu <= mu0
 * stays below this envelope, so its front is trapped under h0 (1 + delta).
 */
struct UpperSolution {
    double delta;
    double beta;
    double big_m;
    double mu0;
    double h0;

    double sigma(double t) const;
    /// The common envelope for both species at (t, x), x in [0, sigma(t)].
    double bar(double t, double x) const;
};

/// Prey reaction lambda u - u^2 - b u v / (u + m v); the ratio term is 0 at
/// (0, 0) by continuous extension. Throws on negative input.
double reaction_u(double u, double v, const ModelParams& p);

/// Predator reaction nu v - v^2 + c u v / (u + m v), same conventions.
double reaction_v(double u, double v, const ModelParams& p);

/// Closed-form coexistence state; requires the coexistence regime.
CoexistenceState coexistence_state(const ModelParams& p);

/// Monotone iteration for the bound quadruple; requires m lambda > b.
/// Alternates the four one-dimensional solves until successive iterates
/// differ by less than 1e-10.
BoundQuadruple bound_quadruple(const ModelParams& p);

/// All closed-form thresholds for the given parameters and initial data.
/// Requires m lambda > b.
Thresholds thresholds(const ModelParams& p, const InitialData& init);

/// Builds the cosine upper solution for the given delta. M is the smallest
/// admissible envelope amplitude inflated by 1%. Throws precondition_error
/// when beta <= 0 for this (p, delta).
UpperSolution upper_solution_construct(const ModelParams& p,
                                       const InitialData& init, double delta);

}  // namespace stefanlab

#endif
