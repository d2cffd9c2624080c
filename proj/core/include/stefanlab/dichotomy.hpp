#ifndef STEFANLAB_DICHOTOMY_HPP
#define STEFANLAB_DICHOTOMY_HPP

#include <optional>
#include <string>
#include <vector>

#include "stefanlab/model.hpp"
#include "stefanlab/solver.hpp"

namespace stefanlab {

/// Finite-time proxies for the asymptotic dichotomy. All configurable;
/// the resolved values are logged with every verdict.
struct ClassifierSettings {
    double vanish_tol = 1e-3;      ///< sup-norm threshold for vanishing
    double spread_factor = 2.0;    ///< h must exceed spread_factor * Lambda
    double stall_scale = 1e-4;     ///< front-speed floor: stall_scale * Lambda / t_final
    double tail_fraction = 0.5;    ///< portion of the run used for speed fits
    double min_speed_duration = 1.0;  ///< shortest run estimate_speed accepts
};

enum class VerdictKind { Spreading, Vanishing, Undecided };

std::string to_string(VerdictKind k);

struct Verdict {
    VerdictKind kind = VerdictKind::Undecided;
    double h_final = 0.0;
    double sup_final = 0.0;  ///< max of the two final sup norms
    std::optional<double> speed_estimate;
    std::string evidence;
};

/// Tail speeds of the four bracketing single-species systems; a branch is
/// absent when its auxiliary run vanished.
struct SpeedBracket {
    std::optional<double> s_upper_sys;  ///< growth lambda
    std::optional<double> s_lower_sys;  ///< growth lambda - b/m
    std::optional<double> k_upper_sys;  ///< growth nu + c, diffusivity d
    std::optional<double> k_lower_sys;  ///< growth nu, diffusivity d
};

struct MuProbe {
    double mu;
    Verdict verdict;
    Trajectory trajectory;
};

struct MuBracket {
    double mu_lo;  ///< largest probe classified Vanishing
    double mu_hi;  ///< smallest probe classified Spreading
    std::vector<MuProbe> probes;
};

struct SpreadingLimitsReport {
    bool applicable = false;
    double residual_u = 0.0;  ///< sup over the window of |u - u*| at the end
    double residual_v = 0.0;
};

struct ComparisonReport {
    bool pass = false;
    double worst_violation = 0.0;
};

/// Classifies a completed trajectory against the finite-time proxies.
Verdict classify(const Trajectory& tr, const Thresholds& th,
                 const ClassifierSettings& cfg = {});

/// Measures the distance of the final profiles from the coexistence state
/// over x in [0, window]. Requires a Spreading verdict.
SpreadingLimitsReport check_spreading_limits(const Trajectory& tr,
                                             const ModelParams& p,
                                             const CoexistenceState& eq,
                                             double window);

/// Bisection on mu between a known-vanishing and a known-spreading seed.
/// An Undecided probe doubles t_end once; a second Undecided aborts.
MuBracket bracket_mu(const ModelParams& p, const InitialData& init,
                     const GridSpec& g, int iters,
                     const ClassifierSettings& cfg = {});

/// Least-squares slope of h against t over the tail of a spreading run.
double estimate_speed(const Trajectory& tr, const ClassifierSettings& cfg = {});

/// Expansion coefficients of the four auxiliary systems. The lower systems
/// use the coupled law's own coefficients; the upper systems use mu (1 + rho),
/// the smallest constant whose single-gradient law can dominate the coupled
/// front, which is driven by the sum of both gradients.
struct SpeedBracketCoeffs {
    double kappa_upper;
    double kappa_lower;
    double tau_upper;
    double tau_lower;

    static SpeedBracketCoeffs defaults(const ModelParams& p) {
        return {p.mu * (1.0 + p.rho), p.mu, p.mu * (1.0 + p.rho),
                p.mu * p.rho};
    }
};

/// Runs the four single-species free-boundary systems and collects their
/// tail speeds.
SpeedBracket speed_bracket(const ModelParams& p, const InitialData& init,
                           const GridSpec& g,
                           const ClassifierSettings& cfg = {},
                           std::optional<SpeedBracketCoeffs> coeffs = {});

/// Checks the trajectory's snapshots against the cosine upper solution:
/// u, v below the envelope and h below sigma, within 1e-3 * M. Requires
/// mu <= mu0 of the construct.
ComparisonReport verify_comparison(const Trajectory& tr, const ModelParams& p,
                                   const GridSpec& g,
                                   const UpperSolution& construct);

/// Runs a simulation with the classifier's early-exit callbacks installed
/// and returns trajectory plus verdict.
std::pair<Trajectory, Verdict> classified_run(const ModelParams& p,
                                              const InitialData& init,
                                              const GridSpec& g,
                                              const Thresholds& th,
                                              const ClassifierSettings& cfg = {},
                                              const RunOptions& base = {});

}  // namespace stefanlab

#endif
