#ifndef STEFANLAB_PHASE_PLANE_HPP
#define STEFANLAB_PHASE_PLANE_HPP

#include <optional>
#include <vector>

#include "stefanlab/model.hpp"
#include "stefanlab/params.hpp"

namespace stefanlab {

/**
 * The wave nonlinearity f(q) = nu q - q^2 + c u q / (u + m q) with the prey
 * value frozen at u = u_fixed. With u_fixed = u* the positive zero theta of f
 * equals v*, and f'(0) = nu + c for any u_fixed > 0.
 */
struct WaveNonlinearity {
    double u_fixed;
    double nu;
    double c;
    double m;
    double d;
    double theta;

    double operator()(double q) const;
    double slope_at_zero() const { return nu + c; }
};

/// Builds the nonlinearity from model parameters, freezing u at the
/// coexistence value so that theta = v*. Requires the coexistence regime.
WaveNonlinearity make_wave_nonlinearity(const ModelParams& p);

/// A phase-plane trajectory of q' = p, d p' = s p - f(q) from (0, eta) to the
/// first p = 0 crossing at (q_end, z_end).
struct WaveProfile {
    std::vector<double> z;
    std::vector<double> q;
    std::vector<double> p;
    double q_end;
    double z_end;
    double s;
    double eta;
};

/// One decoupled monotone front of the traveling-wave pair.
struct WaveSamples {
    std::vector<double> z;
    std::vector<double> q;
    std::vector<double> p;
};

struct TravelingWavePair {
    WaveSamples phi;  ///< prey front, limit lambda
    WaveSamples psi;  ///< predator front, limit nu + c
    double s;
};

/// A positive solution of d v'' + f(v) = 0 on (0, Z) with v'(0) = v(Z) = 0.
struct BvpSolution {
    std::vector<double> x;
    std::vector<double> v;
    double q0;  ///< shooting height v(0)
};

/// eta* = sqrt((2/d) integral of f over [0, theta]).
double eta_star(const WaveNonlinearity& w);

/// The unique q^eta in (0, theta) with eta^2 = (2/d) integral of f over
/// [0, q^eta]. Requires 0 < eta < eta*.
double q_eta(const WaveNonlinearity& w, double eta);

/// The wave length z^eta, evaluated with the sin^2 substitution that removes
/// the inverse-square-root endpoint singularity. Requires 0 < eta < eta*.
double z_eta(const WaveNonlinearity& w, double eta);

/// Integrates the phase-plane system until p crosses zero, refining the
/// crossing by secant iteration. Requires 0 < eta < eta* and small s >= 0.
WaveProfile finite_wave(const WaveNonlinearity& w, double s, double eta);

/// Shooting solve of the critical elliptic problem. Absence of a solution
/// (every landing position exceeds Z) is a legitimate nullopt.
std::optional<BvpSolution> solve_bvp_critical(const WaveNonlinearity& w,
                                              double big_z);

/// The decoupled monotone front pair of the comparison system, built by
/// backward integration from the unstable manifold of the saturated state.
/// Requires s > 2 max{sqrt(lambda), sqrt(d (nu + c))}.
TravelingWavePair traveling_wave(const ModelParams& p, double s);

}  // namespace stefanlab

#endif
