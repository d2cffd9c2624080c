#ifndef STEFANLAB_PARAMS_HPP
#define STEFANLAB_PARAMS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace stefanlab {

/// Thrown when an operation's precondition is violated (bad regime, bad input).
class precondition_error : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an iteration fails to converge or a scheme goes unstable.
class numerical_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * The nine positive constants of the model.
 *
 * lambda  prey growth rate            [1/time]
 * b       predation coefficient       [1/time]
 * m       ratio-dependence saturation [-]
 * d       predator diffusivity        [length^2/time]
 * nu      predator intrinsic rate     [1/time]
 * c       conversion coefficient      [1/time]
 * mu      front expansion coefficient [length^2/(time*density)]
 * rho     predator weight in the front law [-]
 * h0      initial habitat length      [length]
 */
struct ModelParams {
    double lambda = 1.0;
    double b = 0.5;
    double m = 1.0;
    double d = 1.0;
    double nu = 1.0;
    double c = 0.5;
    double mu = 1.0;
    double rho = 1.0;
    double h0 = 1.0;

    /// m*lambda > b: the prey persists under maximal predation pressure.
    bool prey_viable() const { return m * lambda > b; }

    /// 0 < m*lambda - b < b*nu/c: the positive constant steady state exists.
    bool coexistence_regime() const {
        const double g = m * lambda - b;
        return g > 0.0 && g < b * nu / c;
    }

    /// Throws precondition_error naming the first non-positive field.
    void validate() const;
};

/**
 * Initial profiles sampled on a uniform grid over [0, h0].
 * Both profiles are positive on the open interval and vanish at x = h0;
 * the discrete slope at x = 0 vanishes (Neumann compatibility).
 */
struct InitialData {
    std::vector<double> u0;
    std::vector<double> v0;
    double h0 = 1.0;

    std::size_t n_samples() const { return u0.size(); }
    double dx() const { return h0 / double(u0.size() - 1); }

    double sup_u0() const;
    double sup_v0() const;
    /// Composite trapezoid over the samples.
    double integral_u0() const;
    double integral_v0() const;

    /// Linear interpolation at x in [0, h0].
    double u0_at(double x) const;
    double v0_at(double x) const;

    /// Throws precondition_error if the compatibility conditions fail.
    void validate() const;
};

/// Default family: amp * cos(pi x / (2 h0)). Satisfies all compatibility
/// conditions exactly. An amplitude of zero gives an identically-zero profile.
InitialData make_cosine_init(const ModelParams& p, double amp_u, double amp_v,
                             std::size_t n_samples);

}  // namespace stefanlab

#endif
