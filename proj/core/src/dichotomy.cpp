#include "stefanlab/dichotomy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "stefanlab/numerics.hpp"

namespace stefanlab {

using std::numbers::pi;

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Spreading: return "Spreading";
        case VerdictKind::Vanishing: return "Vanishing";
        default: return "Undecided";
    }
}

Verdict classify(const Trajectory& tr, const Thresholds& th,
                 const ClassifierSettings& cfg) {
    if (tr.records.size() < 2)
        throw precondition_error("classify: trajectory is not complete");
    const auto& last = tr.records.back();
    const double t_final = last.t;
    const double stall = cfg.stall_scale * th.capital_lambda / t_final;

    Verdict v;
    v.h_final = last.h;
    v.sup_final = std::max(last.u_max, last.v_max);

    double tail_min_speed = std::numeric_limits<double>::infinity();
    for (const auto& r : tr.records) {
        if (r.t >= 0.9 * t_final) tail_min_speed = std::min(tail_min_speed, r.h_prime);
    }

    std::ostringstream ev;
    ev << "t_final=" << t_final << " h_final=" << v.h_final
       << " sup_final=" << v.sup_final << " h_prime_final=" << last.h_prime
       << " tail_min_speed=" << tail_min_speed << " stall_floor=" << stall;
    v.evidence = ev.str();

    if (v.sup_final < cfg.vanish_tol && std::abs(last.h_prime) < stall) {
        v.kind = VerdictKind::Vanishing;
    } else if (v.h_final > cfg.spread_factor * th.capital_lambda &&
               tail_min_speed > stall) {
        v.kind = VerdictKind::Spreading;
    } else {
        v.kind = VerdictKind::Undecided;
    }
    return v;
}

std::pair<Trajectory, Verdict> classified_run(const ModelParams& p,
                                              const InitialData& init,
                                              const GridSpec& g,
                                              const Thresholds& th,
                                              const ClassifierSettings& cfg,
                                              const RunOptions& base) {
    RunOptions opts = base;
    const double spread_cut = cfg.spread_factor * th.capital_lambda * 1.02;
    const double vanish_sup = 0.25 * cfg.vanish_tol;
    const double vanish_speed = 0.1 * cfg.stall_scale * th.capital_lambda / g.t_end;
    auto user_stop = base.stop;
    opts.stop = [=](const SolutionState& s) {
        if (user_stop && user_stop(s)) return true;
        if (s.h > spread_cut) return true;
        return std::max(s.u_max(), s.v_max()) < vanish_sup &&
               std::abs(s.h_prime) < vanish_speed;
    };
    Trajectory tr = run(p, init, g, opts);
    Verdict v = classify(tr, th, cfg);
    return {std::move(tr), std::move(v)};
}

SpreadingLimitsReport check_spreading_limits(const Trajectory& tr,
                                             const ModelParams& p,
                                             const CoexistenceState& eq,
                                             double window) {
    SpreadingLimitsReport rep;
    if (!p.coexistence_regime()) return rep;  // not applicable
    if (window > tr.h_final())
        throw precondition_error("check_spreading_limits: window exceeds h_final");
    rep.applicable = true;
    const auto& s = tr.final_state;
    const double dy = 1.0 / double(tr.n + 1);
    for (std::size_t i = 0; i < s.u.size(); ++i) {
        const double x = dy * double(i) * s.h;
        if (x > window) break;
        rep.residual_u = std::max(rep.residual_u, std::abs(s.u[i] - eq.u_star));
        rep.residual_v = std::max(rep.residual_v, std::abs(s.v[i] - eq.v_star));
    }
    return rep;
}

namespace {

std::pair<Trajectory, Verdict> probe_mu(const ModelParams& p,
                                        const InitialData& init, GridSpec g,
                                        const Thresholds& th,
                                        const ClassifierSettings& cfg) {
    auto result = classified_run(p, init, g, th, cfg);
    if (result.second.kind == VerdictKind::Undecided) {
        g.t_end *= 2.0;  // one extension, then give up
        result = classified_run(p, init, g, th, cfg);
        if (result.second.kind == VerdictKind::Undecided)
            throw numerical_error(
                "bracket_mu: probe undecided twice at mu = " +
                std::to_string(p.mu) + "; " + result.second.evidence);
    }
    return result;
}

}  // namespace

MuBracket bracket_mu(const ModelParams& p, const InitialData& init,
                     const GridSpec& g, int iters,
                     const ClassifierSettings& cfg) {
    if (iters < 4) throw precondition_error("bracket_mu: iters must be >= 4");
    const Thresholds th = thresholds(p, init);
    if (!(p.h0 < th.capital_lambda))
        throw precondition_error("bracket_mu: requires h0 < Lambda");

    MuBracket out;
    auto probe = [&](double mu) {
        ModelParams q = p;
        q.mu = mu;
        auto [tr, v] = probe_mu(q, init, g, th, cfg);
        out.probes.push_back({mu, v, std::move(tr)});
        return v.kind;
    };

    // Vanishing seed: the cosine construct's mu0, halved as needed.
    double lo;
    try {
        lo = upper_solution_construct(p, init, 0.1).mu0;
    } catch (const precondition_error&) {
        lo = th.mu_zero.value_or(1.0) / 1024.0;
    }
    for (int k = 0; probe(lo) != VerdictKind::Vanishing; ++k) {
        if (k >= 40)
            throw numerical_error("bracket_mu: no vanishing seed found");
        lo *= 0.5;
    }
    // Spreading seed: mu0 of the criteria, doubled as needed.
    double hi = th.mu_zero.value_or(lo * 1024.0);
    for (int k = 0; probe(hi) != VerdictKind::Spreading; ++k) {
        if (k >= 40)
            throw numerical_error("bracket_mu: no spreading seed found");
        hi *= 2.0;
    }

    for (int it = 0; it < iters; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (probe(mid) == VerdictKind::Spreading)
            hi = mid;
        else
            lo = mid;
    }
    out.mu_lo = lo;
    out.mu_hi = hi;
    return out;
}

double estimate_speed(const Trajectory& tr, const ClassifierSettings& cfg) {
    if (tr.records.size() < 4)
        throw precondition_error("estimate_speed: trajectory too short");
    const double t_final = tr.records.back().t;
    if (t_final < cfg.min_speed_duration)
        throw precondition_error("estimate_speed: insufficient duration");
    const double t_cut = (1.0 - cfg.tail_fraction) * t_final;
    std::vector<double> ts, hs;
    for (const auto& r : tr.records) {
        if (r.t >= t_cut) {
            ts.push_back(r.t);
            hs.push_back(r.h);
        }
    }
    return num::slope_fit(ts, hs);
}

SpeedBracket speed_bracket(const ModelParams& p, const InitialData& init,
                           const GridSpec& g, const ClassifierSettings& cfg,
                           std::optional<SpeedBracketCoeffs> coeffs) {
    if (!p.prey_viable())
        throw precondition_error("speed_bracket: requires m*lambda > b");
    const SpeedBracketCoeffs co =
        coeffs ? *coeffs : SpeedBracketCoeffs::defaults(p);

    struct Aux {
        double growth;
        double diffusivity;
        double expansion;
        bool prey_slot;
    };
    const Aux systems[4] = {{p.lambda, 1.0, co.kappa_upper, true},
                            {p.lambda - p.b / p.m, 1.0, co.kappa_lower, true},
                            {p.nu + p.c, p.d, co.tau_upper, false},
                            {p.nu, p.d, co.tau_lower, false}};
    std::optional<double> speeds[4];
    for (int i = 0; i < 4; ++i) {
        const Aux& a = systems[i];
        ModelParams q = p;
        InitialData single = init;
        if (a.prey_slot) {
            q.lambda = a.growth;
            q.mu = a.expansion;  // with v = 0 the front law is -mu u_x
            std::fill(single.v0.begin(), single.v0.end(), 0.0);
        } else {
            // with u = 0 the interaction vanishes, so nu is the full growth
            // and the front law reduces to -mu rho v_x
            q.nu = a.growth;
            q.mu = a.expansion;
            q.rho = 1.0;
            std::fill(single.u0.begin(), single.u0.end(), 0.0);
        }
        Thresholds th_aux;
        th_aux.capital_lambda = 0.5 * pi * std::sqrt(a.diffusivity / a.growth);
        th_aux.z_star = th_aux.capital_lambda;
        th_aux.speed_upper = 2.0 * std::sqrt(a.growth * a.diffusivity);
        // No early exit here; the tail fit needs the whole run.
        Trajectory tr = run(q, single, g);
        Verdict v = classify(tr, th_aux, cfg);
        if (v.kind == VerdictKind::Spreading)
            speeds[i] = estimate_speed(tr, cfg);
    }
    return SpeedBracket{speeds[0], speeds[1], speeds[2], speeds[3]};
}

ComparisonReport verify_comparison(const Trajectory& tr, const ModelParams& p,
                                   const GridSpec& g,
                                   const UpperSolution& construct) {
    if (!(p.mu <= construct.mu0))
        throw precondition_error(
            "verify_comparison: requires mu <= mu0 of the construct");
    if (tr.snapshots.empty())
        throw precondition_error("verify_comparison: no snapshots recorded");

    ComparisonReport rep;
    const double dy = 1.0 / double(tr.n + 1);
    for (const auto& s : tr.snapshots) {
        rep.worst_violation =
            std::max(rep.worst_violation, s.h - construct.sigma(s.t));
        for (std::size_t i = 0; i < s.u.size(); ++i) {
            const double x = dy * double(i) * s.h;
            const double bound = construct.bar(s.t, x);
            rep.worst_violation = std::max(rep.worst_violation, s.u[i] - bound);
            rep.worst_violation = std::max(rep.worst_violation, s.v[i] - bound);
        }
    }
    rep.worst_violation = std::max(rep.worst_violation, 0.0);
    rep.pass = rep.worst_violation <= 1e-3 * construct.big_m;
    return rep;
}

}  // namespace stefanlab
