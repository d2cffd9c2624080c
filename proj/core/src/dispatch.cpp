#include <cmath>
#include <filesystem>
#include <iostream>

#include "stefanlab/config.hpp"
#include "stefanlab/dichotomy.hpp"
#include "stefanlab/io.hpp"
#include "stefanlab/phase_plane.hpp"

namespace stefanlab {

namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "stefan-lab 1.0.0";

void write_metadata(const ExperimentConfig& cfg, const fs::path& out) {
    io::JsonObject meta;
    meta.field("version", std::string(kVersion));
    // Two corrections relative to the published auxiliary systems: the front
    // law uses the boundary gradient (not the boundary value), and the
    // predator auxiliary equations carry the diffusivity d.
    meta.field_raw("erratum_flags",
                   io::json_string_array({"aux-stefan-gradient-form",
                                          "aux-predator-diffusivity"}));
    meta.field_raw("defaulted_keys", io::json_string_array(cfg.defaulted));
    meta.field("resolved_config", emit_config(cfg));
    io::write_text(out / "metadata.json", meta.str());
}

std::string verdict_json(const Verdict& v) {
    io::JsonObject o;
    o.field("kind", to_string(v.kind));
    o.field("h_final", v.h_final);
    o.field("sup_final", v.sup_final);
    if (v.speed_estimate)
        o.field("speed_estimate", *v.speed_estimate);
    else
        o.field_null("speed_estimate");
    return o.str();
}

void opt_field(io::JsonObject& o, const std::string& key,
               const std::optional<double>& v) {
    if (v)
        o.field(key, *v);
    else
        o.field_null(key);
}

int run_thresholds(const ExperimentConfig& cfg, const fs::path& out) {
    const Thresholds th = thresholds(cfg.model, cfg.make_init());
    io::JsonObject o;
    o.field("capital_lambda", th.capital_lambda);
    o.field("z_star", th.z_star);
    opt_field(o, "mu_star", th.mu_star);
    opt_field(o, "mu_star_star", th.mu_star_star);
    opt_field(o, "mu_zero", th.mu_zero);
    o.field("speed_upper", th.speed_upper);
    io::write_text(out / "thresholds.json", o.str());
    std::cout << "thresholds: Lambda=" << th.capital_lambda
              << " Z*=" << th.z_star << " speed_upper=" << th.speed_upper
              << " -> " << (out / "thresholds.json").string() << '\n';
    return 0;
}

int run_simulate(const ExperimentConfig& cfg, const fs::path& out) {
    const InitialData init = cfg.make_init();
    const Thresholds th = thresholds(cfg.model, init);
    RunOptions opts;
    opts.record_dt = cfg.record_dt;
    opts.snapshot_times = cfg.snapshot_times;
    Trajectory tr = run(cfg.model, init, cfg.grid, opts);
    Verdict v = classify(tr, th, cfg.classify);
    if (v.kind == VerdictKind::Spreading) {
        try {
            v.speed_estimate = estimate_speed(tr, cfg.classify);
        } catch (const precondition_error&) {
        }
    }
    io::write_text(out / "trajectory.csv", io::trajectory_csv(tr));
    io::write_text(out / "final_profile.csv",
                   io::profile_csv(tr.final_state, tr.n));
    for (std::size_t i = 0; i < tr.snapshots.size(); ++i) {
        io::write_text(out / ("snapshot_" + std::to_string(i) + ".csv"),
                       io::profile_csv(tr.snapshots[i], tr.n));
    }
    io::write_text(out / "verdict.json", verdict_json(v));
    std::cout << "simulate: " << to_string(v.kind) << " h_final=" << v.h_final
              << " sup_final=" << v.sup_final << " -> " << out.string() << '\n';
    return 0;
}

int run_phaseplane(const ExperimentConfig& cfg, const fs::path& out) {
    const WaveNonlinearity w = make_wave_nonlinearity(cfg.model);
    const double es = eta_star(w);
    std::string csv = "eta,q_eta,z_eta\n";
    for (int k = 1; k <= cfg.eta_points; ++k) {
        const double eta = es * std::pow(2.0, -k);
        csv += io::format_double(eta) + "," + io::format_double(q_eta(w, eta)) +
               "," + io::format_double(z_eta(w, eta)) + "\n";
    }
    io::write_text(out / "phaseplane.csv", csv);
    const double z_star = 0.5 * std::acos(-1.0) *
                          std::sqrt(w.d / w.slope_at_zero());
    std::cout << "phaseplane: eta*=" << es << " Z*=" << z_star << " ("
              << cfg.eta_points << " rows) -> "
              << (out / "phaseplane.csv").string() << '\n';
    return 0;
}

int run_wave(const ExperimentConfig& cfg, const fs::path& out) {
    const Thresholds th = thresholds(cfg.model, cfg.make_init());
    const double s =
        cfg.wave_speed > 0.0 ? cfg.wave_speed : 1.1 * th.speed_upper;
    const TravelingWavePair pair = traveling_wave(cfg.model, s);
    io::write_text(out / "wave_phi.csv",
                   io::wave_csv(pair.phi.z, pair.phi.q, pair.phi.p));
    io::write_text(out / "wave_psi.csv",
                   io::wave_csv(pair.psi.z, pair.psi.q, pair.psi.p));
    std::cout << "wave: s=" << s << " phi_end=" << pair.phi.q.back()
              << " psi_end=" << pair.psi.q.back() << " -> " << out.string()
              << '\n';
    return 0;
}

int run_sweep_mu(const ExperimentConfig& cfg, const fs::path& out) {
    const InitialData init = cfg.make_init();
    const MuBracket br =
        bracket_mu(cfg.model, init, cfg.grid, cfg.mu_iters, cfg.classify);
    std::vector<std::string> probes;
    for (std::size_t i = 0; i < br.probes.size(); ++i) {
        const MuProbe& pr = br.probes[i];
        io::JsonObject o;
        o.field("mu", pr.mu);
        o.field("kind", to_string(pr.verdict.kind));
        o.field("h_final", pr.verdict.h_final);
        o.field("sup_final", pr.verdict.sup_final);
        probes.push_back(o.str());
        io::write_text(out / ("probe_" + std::to_string(i) + ".csv"),
                       io::trajectory_csv(pr.trajectory));
    }
    io::JsonObject o;
    o.field("mu_lo", br.mu_lo);
    o.field("mu_hi", br.mu_hi);
    o.field_raw("probes", io::json_array(probes));
    io::write_text(out / "bracket.json", o.str());
    std::cout << "sweep-mu: mu_lo=" << br.mu_lo << " mu_hi=" << br.mu_hi
              << " (" << br.probes.size() << " probes) -> " << out.string()
              << '\n';
    return 0;
}

int run_speed(const ExperimentConfig& cfg, const fs::path& out) {
    const InitialData init = cfg.make_init();
    const Thresholds th = thresholds(cfg.model, init);
    RunOptions opts;
    opts.record_dt = cfg.record_dt;
    Trajectory tr = run(cfg.model, init, cfg.grid, opts);
    const Verdict v = classify(tr, th, cfg.classify);
    if (v.kind != VerdictKind::Spreading)
        throw numerical_error("speed: run did not spread (" + v.evidence + ")");
    const double estimate = estimate_speed(tr, cfg.classify);
    const SpeedBracket sb = speed_bracket(cfg.model, init, cfg.grid, cfg.classify);
    io::write_text(out / "trajectory.csv", io::trajectory_csv(tr));
    io::JsonObject o;
    o.field("speed_estimate", estimate);
    o.field("speed_upper", th.speed_upper);
    opt_field(o, "s_upper_sys", sb.s_upper_sys);
    opt_field(o, "s_lower_sys", sb.s_lower_sys);
    opt_field(o, "k_upper_sys", sb.k_upper_sys);
    opt_field(o, "k_lower_sys", sb.k_lower_sys);
    io::write_text(out / "speed.json", o.str());
    std::cout << "speed: estimate=" << estimate << " upper=" << th.speed_upper
              << " -> " << (out / "speed.json").string() << '\n';
    return 0;
}

}  // namespace

int dispatch(const ExperimentConfig& cfg) {
    const fs::path out(cfg.out_dir);
    fs::create_directories(out);
    try {
        write_metadata(cfg, out);
        if (cfg.kind == "thresholds") return run_thresholds(cfg, out);
        if (cfg.kind == "simulate") return run_simulate(cfg, out);
        if (cfg.kind == "phaseplane") return run_phaseplane(cfg, out);
        if (cfg.kind == "wave") return run_wave(cfg, out);
        if (cfg.kind == "sweep-mu") return run_sweep_mu(cfg, out);
        if (cfg.kind == "speed") return run_speed(cfg, out);
        throw config_error("config: key 'run.kind' unknown: " + cfg.kind);
    } catch (const std::exception& e) {
        // machine-readable error record next to whatever was written
        io::JsonObject err;
        err.field("error", std::string(e.what()));
        io::write_text(out / "error.json", err.str());
        throw;
    }
}

}  // namespace stefanlab
