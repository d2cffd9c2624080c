#include "stefanlab/solver.hpp"

#include <algorithm>
#include <cmath>

#include "stefanlab/model.hpp"
#include "stefanlab/numerics.hpp"

namespace stefanlab {

void GridSpec::validate() const {
    if (n < 16) throw precondition_error("grid: n must be >= 16");
    if (!(dt > 0.0)) throw precondition_error("grid: dt must be positive");
    if (!(t_end > 0.0)) throw precondition_error("grid: t_end must be positive");
    if (!(dt_safety > 0.0) || dt_safety > 1.0)
        throw precondition_error("grid: dt_safety must be in (0, 1]");
}

double SolutionState::u_max() const {
    return *std::max_element(u.begin(), u.end());
}
double SolutionState::v_max() const {
    return *std::max_element(v.begin(), v.end());
}

std::pair<double, double> boundary_gradient(const SolutionState& state,
                                            const GridSpec& g) {
    const std::size_t last = g.n + 1;  // Dirichlet node, value 0
    const double dy = g.dy();
    const double gu =
        (-4.0 * state.u[last - 1] + state.u[last - 2]) / (2.0 * dy * state.h);
    const double gv =
        (-4.0 * state.v[last - 1] + state.v[last - 2]) / (2.0 * dy * state.h);
    return {gu, gv};
}

namespace {

void advance_species(const std::vector<double>& u_old,
                     const std::vector<double>& v_old, bool prey,
                     const ModelParams& p, const GridSpec& g, double dt,
                     double h_new, double h_prime, std::vector<double>& out) {
    const std::size_t n = g.n;
    const double dy = g.dy();
    const double diffusivity = prey ? 1.0 : p.d;
    const double r = dt * diffusivity / (h_new * h_new * dy * dy);
    const std::vector<double>& w = prey ? u_old : v_old;

    // Unknowns at nodes 0..n; node n+1 stays pinned at zero.
    std::vector<double> lower(n + 1, -r), diag(n + 1, 1.0 + 2.0 * r),
        upper(n + 1, -r), rhs(n + 1);
    upper[0] = -2.0 * r;  // Neumann ghost at y = 0

    for (std::size_t i = 0; i <= n; ++i) {
        const double y = dy * double(i);
        const double w_right = (i == n) ? 0.0 : w[i + 1];
        const double w_left = (i == 0) ? w[1] : w[i - 1];
        const double advect =
            y * h_prime / h_new * (w_right - w_left) / (2.0 * dy);
        const double react = prey ? reaction_u(u_old[i], v_old[i], p)
                                  : reaction_v(u_old[i], v_old[i], p);
        rhs[i] = w[i] + dt * (advect + react);
    }
    num::solve_tridiagonal(std::move(lower), std::move(diag), std::move(upper),
                           rhs);
    out.assign(rhs.begin(), rhs.end());
    out.push_back(0.0);
}

void clamp_or_fail(std::vector<double>& w, double t) {
    for (double& x : w) {
        if (x < 0.0) {
            if (x < -1e-8)
                throw numerical_error(
                    "solver: positivity violation (" + std::to_string(x) +
                    ") at t = " + std::to_string(t) +
                    "; the scheme is unstable, reduce dt");
            x = 0.0;
        }
    }
}

}  // namespace

SolutionState step(const SolutionState& state, const ModelParams& p,
                   const GridSpec& g, double dt) {
    const auto [gu, gv] = boundary_gradient(state, g);
    const double h_prime = -p.mu * (gu + p.rho * gv);

    SolutionState next;
    next.t = state.t + dt;
    next.h_prime = h_prime;
    next.h = state.h + dt * h_prime;
    advance_species(state.u, state.v, true, p, g, dt, next.h, h_prime, next.u);
    advance_species(state.u, state.v, false, p, g, dt, next.h, h_prime, next.v);
    clamp_or_fail(next.u, next.t);
    clamp_or_fail(next.v, next.t);
    return next;
}

Trajectory run(const ModelParams& p, const InitialData& init, const GridSpec& g,
               const RunOptions& opts) {
    g.validate();
    if (std::abs(init.h0 - p.h0) > 1e-12 * std::max(1.0, p.h0))
        throw precondition_error("run: initial data is not sampled on [0, h0]");

    const std::size_t n = g.n;
    const double dy = g.dy();

    SolutionState state;
    state.t = 0.0;
    state.h = p.h0;
    state.u.resize(n + 2);
    state.v.resize(n + 2);
    for (std::size_t i = 0; i <= n + 1; ++i) {
        const double x = dy * double(i) * p.h0;
        state.u[i] = init.u0_at(x);
        state.v[i] = init.v0_at(x);
    }
    state.u[n + 1] = 0.0;
    state.v[n + 1] = 0.0;
    const auto [gu0, gv0] = boundary_gradient(state, g);
    state.h_prime = -p.mu * (gu0 + p.rho * gv0);

    std::vector<double> snaps = opts.snapshot_times;
    std::sort(snaps.begin(), snaps.end());
    std::size_t next_snap = 0;

    Trajectory tr;
    tr.n = n;
    auto record = [&](const SolutionState& s) {
        tr.records.push_back({s.t, s.h, s.h_prime, s.u_max(), s.v_max()});
    };
    record(state);
    while (next_snap < snaps.size() && snaps[next_snap] <= 0.0) {
        tr.snapshots.push_back(state);
        ++next_snap;
    }

    double next_record = opts.record_dt;
    try {
        while (state.t < g.t_end - 1e-14) {
            double dt = std::min(g.dt, g.t_end - state.t);
            if (next_snap < snaps.size())
                dt = std::min(dt, std::max(snaps[next_snap] - state.t, 1e-12));
            // Front CFL: never let the front cross more than a safety
            // fraction of a cell per step.
            while (std::abs(state.h_prime) * dt > g.dt_safety * state.h * dy)
                dt *= 0.5;
            state = step(state, p, g, dt);
            if (next_snap < snaps.size() &&
                state.t >= snaps[next_snap] - 1e-12) {
                tr.snapshots.push_back(state);
                ++next_snap;
            }
            if (state.t >= next_record - 1e-12 || state.t >= g.t_end - 1e-14) {
                record(state);
                next_record += opts.record_dt;
            }
            if (opts.stop && opts.stop(state)) {
                if (tr.records.back().t != state.t) record(state);
                break;
            }
        }
    } catch (const numerical_error& e) {
        throw numerical_error(std::string(e.what()) +
                              " [run failed at t = " +
                              std::to_string(state.t) + "]");
    }
    if (tr.records.back().t != state.t) record(state);
    tr.final_state = std::move(state);
    return tr;
}

}  // namespace stefanlab
