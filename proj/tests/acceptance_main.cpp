// Acceptance suite: each numbered check exercises one end-to-end contract of
// the library and prints a single [PASS]/[FAIL] line. Run with the check
// number as the only argument, or with no argument to run all of them.

#include <array>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stefanlab/dichotomy.hpp"
#include "stefanlab/model.hpp"
#include "stefanlab/numerics.hpp"
#include "stefanlab/phase_plane.hpp"
#include "stefanlab/solver.hpp"

#include "helpers.hpp"

using namespace stefanlab;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using testutil::reference_params;

// ---------------------------------------------------------------------------
// 1. The closed-form steady state solves its algebraic system, and an
//    independent nested-bisection root-find lands on the same point.
Outcome criterion_1() {
    const ModelParams p = reference_params();
    const CoexistenceState eq = coexistence_state(p);

    const double denom = eq.u_star + p.m * eq.v_star;
    const double res1 = p.lambda - eq.u_star - p.b * eq.v_star / denom;
    const double res2 = p.nu - eq.v_star + p.c * eq.u_star / denom;

    // Independent root-find: for each u solve the predator equation for v by
    // bisection, then bisect the prey equation in u.
    auto v_of_u = [&](double u) {
        return num::bisect(
            [&](double v) { return p.nu - v + p.c * u / (u + p.m * v); },
            1e-12, p.nu + p.c + 1.0, 1e-14);
    };
    const double u_root = num::bisect(
        [&](double u) {
            const double v = v_of_u(u);
            return p.lambda - u - p.b * v / (u + p.m * v);
        },
        1e-9, p.lambda - 1e-12, 1e-14);
    const double v_root = v_of_u(u_root);

    const double gap =
        std::max(std::abs(u_root - eq.u_star), std::abs(v_root - eq.v_star));
    std::ostringstream d;
    d << "residuals " << std::abs(res1) << ", " << std::abs(res2)
      << " (tol 1e-10); root-find gap " << gap << " (tol 1e-8)";
    return {std::abs(res1) <= 1e-10 && std::abs(res2) <= 1e-10 && gap <= 1e-8,
            d.str()};
}

// ---------------------------------------------------------------------------
// 2. The three closed-form length/speed scales match an independent
//    re-evaluation to 1e-12.
Outcome criterion_2() {
    const ModelParams p = reference_params();
    const InitialData init = make_cosine_init(p, 0.5, 0.5, 401);
    const Thresholds th = thresholds(p, init);

    const double len_prey = pi * std::sqrt(p.m / (p.m * p.lambda - p.b)) / 2.0;
    const double len_pred = pi * std::sqrt(p.d / (p.nu + p.c)) / 2.0;
    const double lambda_ref = std::min(len_prey, len_pred);
    const double speed_ref =
        2.0 * std::sqrt(std::max(p.lambda, p.d * (p.nu + p.c)));

    const double e1 = std::abs(th.capital_lambda - lambda_ref);
    const double e2 = std::abs(th.z_star - len_pred);
    const double e3 = std::abs(th.speed_upper - speed_ref);
    std::ostringstream d;
    d << "Lambda=" << th.capital_lambda << " Z*=" << th.z_star
      << " speed_upper=" << th.speed_upper << "; deviations " << e1 << ", "
      << e2 << ", " << e3 << " (tol 1e-12)";
    return {e1 <= 1e-12 && e2 <= 1e-12 && e3 <= 1e-12, d.str()};
}

// ---------------------------------------------------------------------------
// 3. The finite-wave length decreases monotonically to the critical length
//    as the entry slope shrinks, landing within 1% at eta* / 256.
Outcome criterion_3() {
    const ModelParams p = reference_params();
    const WaveNonlinearity w = make_wave_nonlinearity(p);
    const InitialData init = make_cosine_init(p, 0.5, 0.5, 401);
    const double zs = thresholds(p, init).z_star;
    const double es = eta_star(w);

    bool monotone = true;
    double prev_gap = 1e18, last_z = 0.0;
    for (int k = 2; k <= 8; ++k) {
        const double z = z_eta(w, es * std::pow(2.0, -k));
        const double gap = std::abs(z - zs);
        if (gap >= prev_gap) monotone = false;
        prev_gap = gap;
        last_z = z;
    }
    const double rel = std::abs(last_z - zs) / zs;
    std::ostringstream d;
    d << "z(eta*/256)=" << last_z << " vs Z*=" << zs << ", rel gap " << rel
      << " (tol 0.01), gaps " << (monotone ? "monotone" : "NOT monotone");
    return {monotone && rel <= 0.01, d.str()};
}

// ---------------------------------------------------------------------------
// 4. The critical elliptic problem has a positive solution above Z* and none
//    below, for the reference set and ten random coexistence-regime sets.
Outcome criterion_4() {
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> draw(0.2, 2.5);

    std::vector<ModelParams> sets = {reference_params()};
    while (sets.size() < 11) {
        ModelParams p = reference_params();
        p.lambda = draw(rng);
        p.b = draw(rng);
        p.m = draw(rng);
        p.d = draw(rng);
        p.nu = draw(rng);
        p.c = draw(rng);
        if (p.coexistence_regime()) sets.push_back(p);
    }

    int idx = 0;
    for (const ModelParams& p : sets) {
        const WaveNonlinearity w = make_wave_nonlinearity(p);
        const double zs = pi * std::sqrt(p.d / (p.nu + p.c)) / 2.0;
        const auto above = solve_bvp_critical(w, 1.2 * zs);
        const auto below = solve_bvp_critical(w, 0.8 * zs);
        std::ostringstream d;
        if (!above.has_value() || below.has_value()) {
            d << "set " << idx << ": above=" << above.has_value()
              << " below=" << below.has_value() << " (want 1 / 0)";
            return {false, d.str()};
        }
        bool positive = above->q0 > 0.0 && above->q0 < w.theta;
        for (std::size_t i = 0; i + 1 < above->v.size(); ++i)
            positive = positive && above->v[i] >= -1e-12;
        if (!positive) {
            d << "set " << idx << ": solution not positive in (0, Z)";
            return {false, d.str()};
        }
        ++idx;
    }
    return {true, "existence at 1.2 Z* and non-existence at 0.8 Z* on all 11 sets"};
}

// ---------------------------------------------------------------------------
// 5. The spreading-vanishing dichotomy at the two canonical habitat sizes.
Outcome criterion_5() {
    GridSpec g;
    g.n = 200;
    g.t_end = 50.0;

    ModelParams base = reference_params();
    {
        const InitialData probe = make_cosine_init(base, 0.5, 0.5, 401);
        base.h0 = 0.5 * thresholds(base, probe).capital_lambda;
    }
    const InitialData init = make_cosine_init(base, 0.5, 0.5, 401);
    const Thresholds th = thresholds(base, init);
    const double lam = th.capital_lambda;
    std::ostringstream d;

    // small habitat, slow expansion -> vanishing
    {
        ModelParams p = base;
        p.mu = upper_solution_construct(p, init, 0.1).mu0 / 2.0;
        const auto [tr, v] = classified_run(p, init, g, th);
        d << "mu0/2: " << to_string(v.kind) << " h_final=" << v.h_final
          << " sup=" << v.sup_final;
        if (v.kind != VerdictKind::Vanishing || v.h_final > 1.02 * lam ||
            !(v.sup_final < 1e-3))
            return {false, d.str()};
    }
    // small habitat, fast expansion -> spreading
    {
        ModelParams p = base;
        p.mu = 2.0 * th.mu_zero.value();
        const auto [tr, v] = classified_run(p, init, g, th);
        d << "; 2 mu_0: " << to_string(v.kind);
        if (v.kind != VerdictKind::Spreading) return {false, d.str()};
    }
    // habitat beyond the critical length -> spreading for every mu
    {
        ModelParams p = reference_params();
        p.h0 = 1.5 * lam;
        const InitialData wide = make_cosine_init(p, 0.5, 0.5, 401);
        // the mu = 0.01 front creeps at ~5e-3 until the prey recovers from
        // the initial predation dip, so this leg gets a long horizon; the
        // early-exit callback ends each run as soon as it clears the bar
        GridSpec gw = g;
        gw.t_end = 400.0;
        for (double mu : {0.01, 0.1, 1.0}) {
            p.mu = mu;
            const auto [tr, v] = classified_run(p, wide, gw, th);
            d << "; mu=" << mu << ": " << to_string(v.kind);
            if (v.kind != VerdictKind::Spreading) return {false, d.str()};
        }
    }
    return {true, d.str()};
}

// ---------------------------------------------------------------------------
// 6. The mu bisection stays inside the guaranteed vanishing/spreading bounds.
Outcome criterion_6() {
    const ModelParams p = reference_params();
    const InitialData init = make_cosine_init(p, 0.5, 0.5, 401);
    GridSpec g;
    g.n = 200;
    g.t_end = 50.0;

    // Probes near the true threshold linger in a long metastable transient
    // before taking off, so the horizon is generous; decided probes exit
    // early and cost almost nothing.
    g.t_end = 1600.0;

    const double mu_vanish = upper_solution_construct(p, init, 0.1).mu0;
    const double mu_spread = thresholds(p, init).mu_zero.value();
    const MuBracket br = bracket_mu(p, init, g, 6);

    std::ostringstream d;
    d << "mu_lo=" << br.mu_lo << " (>= " << mu_vanish << "), mu_hi="
      << br.mu_hi << " (<= " << mu_spread << "), " << br.probes.size()
      << " probes";
    const bool ok = br.mu_lo >= mu_vanish * (1.0 - 1e-9) &&
                    br.mu_hi <= mu_spread * (1.0 + 1e-9) &&
                    br.mu_lo < br.mu_hi;
    return {ok, d.str()};
}

// ---------------------------------------------------------------------------
// 7. Front-speed estimate against the closed-form ceiling and the
//    single-species bracket (finite-time stand-ins for asymptotic bounds).
Outcome criterion_7() {
    ModelParams p = reference_params();
    p.mu = 6.0;
    p.h0 = 2.0;
    const InitialData init = make_cosine_init(p, 0.5, 0.5, 401);
    const Thresholds th = thresholds(p, init);

    GridSpec g;
    g.n = 200;
    g.t_end = std::max(18.0, 40.0 / th.speed_upper);

    const Trajectory tr = run(p, init, g);
    const Verdict v = classify(tr, th);
    if (v.kind != VerdictKind::Spreading)
        return {false, "main run did not classify Spreading"};
    const double est = estimate_speed(tr);

    const SpeedBracket br = speed_bracket(p, init, g);
    if (!br.s_upper_sys || !br.s_lower_sys || !br.k_upper_sys ||
        !br.k_lower_sys)
        return {false, "an auxiliary system failed to spread"};
    const double lo =
        std::max(br.s_lower_sys.value(), br.k_lower_sys.value()) * 0.9;
    const double hi =
        std::min(br.s_upper_sys.value(), br.k_upper_sys.value()) * 1.1;

    std::ostringstream d;
    d << "estimate=" << est << " ceiling=" << 1.05 * th.speed_upper
      << " bracket=[" << lo << ", " << hi << "] t_end=" << g.t_end;
    const bool ok = est <= 1.05 * th.speed_upper && est >= lo && est <= hi;
    return {ok, d.str()};
}

// ---------------------------------------------------------------------------
// 8. The decoupled traveling fronts are strictly monotone with the right
//    saturation values.
Outcome criterion_8() {
    const ModelParams p = reference_params();
    const InitialData init = make_cosine_init(p, 0.5, 0.5, 401);
    const double s = 1.1 * thresholds(p, init).speed_upper;
    const TravelingWavePair pair = traveling_wave(p, s);

    auto check = [&](const WaveSamples& w, double limit, const char* name,
                     std::ostringstream& d) {
        for (std::size_t i = 0; i + 1 < w.q.size(); ++i) {
            if (!(w.q[i + 1] > w.q[i])) {
                d << name << " not strictly monotone at sample " << i;
                return false;
            }
        }
        const double rel = std::abs(w.q.back() - limit) / limit;
        d << name << " terminal rel gap " << rel << "; ";
        return rel <= 1e-3;
    };
    std::ostringstream d;
    d << "s=" << s << "; ";
    const bool ok_phi = check(pair.phi, p.lambda, "phi", d);
    const bool ok_psi = check(pair.psi, p.nu + p.c, "psi", d);
    return {ok_phi && ok_psi, d.str()};
}

// ---------------------------------------------------------------------------
// 9. Solver quality: spatial self-convergence on nested grids, agreement with
//    an independent single-species solver, positivity and front monotonicity.
Outcome criterion_9() {
    std::ostringstream d;

    // Spatial order on a smooth decoupled problem; grids share nodes
    // (52 | 104 | 208 intervals), identical time step.
    ModelParams p = reference_params();
    p.b = 0.0;
    p.c = 0.0;
    const InitialData init = make_cosine_init(p, 0.5, 0.0, 401);
    const std::size_t levels[3] = {51, 103, 207};
    std::vector<std::vector<double>> profiles;
    std::vector<double> fronts;
    for (std::size_t n : levels) {
        GridSpec g;
        g.n = n;
        g.dt = 2.5e-4;
        g.t_end = 0.5;
        const Trajectory tr = run(p, init, g);
        profiles.push_back(tr.final_state.u);
        fronts.push_back(tr.h_final());
    }
    auto grid_gap = [&](int a, int b, int stride) {
        double worst = std::abs(fronts[a] - fronts[b]);
        for (std::size_t i = 0; i < profiles[a].size(); ++i)
            worst = std::max(worst,
                             std::abs(profiles[a][i] - profiles[b][i * stride]));
        return worst;
    };
    const double e1 = grid_gap(0, 1, 2);
    const double e2 = grid_gap(1, 2, 2);
    const double order = std::log2(e1 / e2);
    d << "spatial order " << order << " (e1=" << e1 << ", e2=" << e2 << ")";
    if (!(order >= 1.8)) return {false, d.str()};

    // Decoupled runs against the independent reference implementation.
    GridSpec g;
    g.n = 100;
    g.dt = 1e-3;
    g.t_end = 1.0;
    {
        const Trajectory tr = run(p, init, g);
        const auto ref = testutil::reference_single_species(
            p.lambda, 1.0, p.mu, p.h0, init.u0, g.n, g.dt, g.t_end,
            g.dt_safety);
        double worst = std::abs(tr.h_final() - ref.h);
        for (std::size_t i = 0; i < ref.w.size(); ++i)
            worst = std::max(worst, std::abs(tr.final_state.u[i] - ref.w[i]));
        d << "; decoupled gap " << worst;
        if (!(worst <= 1e-8)) return {false, d.str()};
    }

    // Positivity and front monotonicity over a small parameter sweep.
    for (double mu : {0.1, 1.0, 6.0}) {
        for (double h0 : {0.6, 1.5}) {
            ModelParams q = reference_params();
            q.mu = mu;
            q.h0 = h0;
            const InitialData sweep_init = make_cosine_init(q, 0.5, 0.5, 401);
            GridSpec gs;
            gs.n = 100;
            gs.t_end = 4.0;
            const Trajectory tr = run(q, sweep_init, gs);
            double prev_h = 0.0;
            for (const auto& r : tr.records) {
                if (r.h < prev_h - 1e-14 || r.u_max < 0.0 || r.v_max < 0.0) {
                    d << "; invariant violated at mu=" << mu << " h0=" << h0
                      << " t=" << r.t;
                    return {false, d.str()};
                }
                prev_h = r.h;
            }
            for (double x : tr.final_state.u)
                if (x < 0.0) return {false, "negative final prey density"};
            for (double x : tr.final_state.v)
                if (x < 0.0) return {false, "negative final predator density"};
        }
    }
    d << "; invariants hold over the sweep";
    return {true, d.str()};
}

// ---------------------------------------------------------------------------
// 10. The decaying-cosine envelope dominates a slow run at ten checkpoints.
Outcome criterion_10() {
    ModelParams p = reference_params();
    const InitialData init = make_cosine_init(p, 0.5, 0.5, 401);
    const UpperSolution up = upper_solution_construct(p, init, 0.1);
    p.mu = up.mu0 / 2.0;

    GridSpec g;
    g.n = 200;
    g.t_end = 5.0;
    RunOptions opts;
    for (int i = 1; i <= 10; ++i) opts.snapshot_times.push_back(0.5 * i);

    const Trajectory tr = run(p, init, g, opts);
    const ComparisonReport rep = verify_comparison(tr, p, g, up);

    std::ostringstream d;
    d << tr.snapshots.size() << " checkpoints, worst violation "
      << rep.worst_violation << " (tol " << 1e-3 * up.big_m << ")";
    return {rep.pass && tr.snapshots.size() == 10, d.str()};
}

using Criterion = Outcome (*)();

}  // namespace

int main(int argc, char** argv) {
    const Criterion criteria[10] = {
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
        criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};

    int first = 1, last = 10;
    if (argc > 1) {
        const int k = std::atoi(argv[1]);
        if (k < 1 || k > 10) {
            std::cerr << "usage: " << argv[0] << " [1-10]\n";
            return 2;
        }
        first = last = k;
    }

    bool all_pass = true;
    for (int k = first; k <= last; ++k) {
        Outcome out;
        try {
            out = criteria[k - 1]();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << k
                  << ": " << out.detail << '\n';
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
