#ifndef STEFANLAB_SOLVER_HPP
#define STEFANLAB_SOLVER_HPP

#include <functional>
#include <vector>

#include "stefanlab/params.hpp"

namespace stefanlab {

/**
 * Discretization of the front-fixed system. The moving domain [0, h(t)] is
 * mapped to y in [0, 1]; the fields live on n interior nodes plus the two
 * boundary nodes (Neumann at y = 0, Dirichlet at y = 1), dy = 1/(n+1).
 */
struct GridSpec {
    std::size_t n = 200;      ///< interior grid points
    double dt = 1e-3;         ///< base time step
    double t_end = 50.0;      ///< final time
    double dt_safety = 0.5;   ///< front CFL factor: h' dt <= dt_safety * h * dy

    double dy() const { return 1.0 / double(n + 1); }
    void validate() const;
};

/// Fields on the normalized grid at one instant. u, v have n+2 entries,
/// index 0 at y = 0 and index n+1 at y = 1 (always exactly zero).
struct SolutionState {
    double t = 0.0;
    double h = 0.0;
    double h_prime = 0.0;
    std::vector<double> u;
    std::vector<double> v;

    double u_max() const;
    double v_max() const;
};

/// Output record at one cadence point.
struct TrajectoryRecord {
    double t;
    double h;
    double h_prime;
    double u_max;
    double v_max;
};

struct Trajectory {
    std::vector<TrajectoryRecord> records;
    std::vector<SolutionState> snapshots;  ///< full profiles at requested times
    SolutionState final_state;
    std::size_t n = 0;  ///< interior points used

    double t_final() const { return records.empty() ? 0.0 : records.back().t; }
    double h_final() const { return records.empty() ? 0.0 : records.back().h; }
};

struct RunOptions {
    double record_dt = 0.05;                ///< trajectory cadence
    std::vector<double> snapshot_times;     ///< full-profile snapshot times
    /// Return true to stop the run early (classification shortcuts).
    std::function<bool(const SolutionState&)> stop;
};

/// One-sided three-point x-derivatives of u and v at the front:
/// g = (3*0 - 4 w_n + w_{n-1}) / (2 dy h). Exact for quadratics in y.
std::pair<double, double> boundary_gradient(const SolutionState& state,
                                            const GridSpec& g);

/// Advances the state by dt: lagged explicit front update, implicit diffusion
/// per species (tridiagonal solves), explicit advection and reaction, then
/// boundary re-imposition and the roundoff clamp. Values below -1e-8 abort.
SolutionState step(const SolutionState& state, const ModelParams& p,
                   const GridSpec& g, double dt);

/// Interpolates the initial data onto the grid and iterates step() until
/// t_end or until opts.stop fires, halving dt per step whenever the front
/// CFL constraint would be violated.
Trajectory run(const ModelParams& p, const InitialData& init, const GridSpec& g,
               const RunOptions& opts = {});

}  // namespace stefanlab

#endif
