#include "stefanlab/config.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "stefanlab/io.hpp"

namespace stefanlab {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing text");
        return x;
    } catch (const std::exception&) {
        throw config_error("config: key '" + key + "' has a malformed number '" +
                           value + "'");
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing text");
        return x;
    } catch (const std::exception&) {
        throw config_error("config: key '" + key + "' has a malformed integer '" +
                           value + "'");
    }
}

std::vector<double> parse_double_list(const std::string& key,
                                      const std::string& value) {
    std::vector<double> out;
    if (trim(value).empty()) return out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
    return out;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::set<std::string> seen;
    std::string section;

    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = trim(raw);
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw config_error("config: malformed section header '" + line + "'");
            section = line.substr(1, line.size() - 2);
            static const std::set<std::string> sections = {"model", "init", "grid",
                                                           "classify", "run"};
            if (!sections.count(section))
                throw config_error("config: unknown section '" + section + "'");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config: expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string full = section + "." + key;
        if (section.empty())
            throw config_error("config: key '" + key + "' appears before any section");
        if (seen.count(full))
            throw config_error("config: duplicate key '" + full + "'");
        seen.insert(full);

        if (section == "model") {
            double* slot = nullptr;
            if (key == "lambda") slot = &cfg.model.lambda;
            else if (key == "b") slot = &cfg.model.b;
            else if (key == "m") slot = &cfg.model.m;
            else if (key == "d") slot = &cfg.model.d;
            else if (key == "nu") slot = &cfg.model.nu;
            else if (key == "c") slot = &cfg.model.c;
            else if (key == "mu") slot = &cfg.model.mu;
            else if (key == "rho") slot = &cfg.model.rho;
            else if (key == "h0") slot = &cfg.model.h0;
            else throw config_error("config: unknown key '" + full + "'");
            *slot = parse_double(full, value);
        } else if (section == "init") {
            if (key == "family") cfg.init_family = value;
            else if (key == "amp_u") cfg.amp_u = parse_double(full, value);
            else if (key == "amp_v") cfg.amp_v = parse_double(full, value);
            else if (key == "n_samples") cfg.n_samples = std::size_t(parse_int(full, value));
            else throw config_error("config: unknown key '" + full + "'");
        } else if (section == "grid") {
            if (key == "n") cfg.grid.n = std::size_t(parse_int(full, value));
            else if (key == "dt") cfg.grid.dt = parse_double(full, value);
            else if (key == "t_end") cfg.grid.t_end = parse_double(full, value);
            else if (key == "dt_safety") cfg.grid.dt_safety = parse_double(full, value);
            else throw config_error("config: unknown key '" + full + "'");
        } else if (section == "classify") {
            if (key == "vanish_tol") cfg.classify.vanish_tol = parse_double(full, value);
            else if (key == "spread_factor") cfg.classify.spread_factor = parse_double(full, value);
            else if (key == "stall_scale") cfg.classify.stall_scale = parse_double(full, value);
            else if (key == "tail_fraction") cfg.classify.tail_fraction = parse_double(full, value);
            else if (key == "min_speed_duration") cfg.classify.min_speed_duration = parse_double(full, value);
            else throw config_error("config: unknown key '" + full + "'");
        } else {  // run
            if (key == "kind") cfg.kind = value;
            else if (key == "out_dir") cfg.out_dir = value;
            else if (key == "seed") cfg.seed = (unsigned long)parse_int(full, value);
            else if (key == "delta") cfg.delta = parse_double(full, value);
            else if (key == "eta_points") cfg.eta_points = int(parse_int(full, value));
            else if (key == "wave_speed") cfg.wave_speed = parse_double(full, value);
            else if (key == "mu_iters") cfg.mu_iters = int(parse_int(full, value));
            else if (key == "record_dt") cfg.record_dt = parse_double(full, value);
            else if (key == "snapshot_times") cfg.snapshot_times = parse_double_list(full, value);
            else throw config_error("config: unknown key '" + full + "'");
        }
    }

    static const char* required[] = {"model.lambda", "model.b", "model.m",
                                     "model.d", "model.nu", "model.c",
                                     "model.mu", "model.rho", "model.h0",
                                     "run.kind"};
    for (const char* r : required) {
        if (!seen.count(r))
            throw config_error(std::string("config: missing required key '") + r + "'");
    }
    static const char* optional[] = {
        "init.family", "init.amp_u", "init.amp_v", "init.n_samples",
        "grid.n", "grid.dt", "grid.t_end", "grid.dt_safety",
        "classify.vanish_tol", "classify.spread_factor", "classify.stall_scale",
        "classify.tail_fraction", "classify.min_speed_duration",
        "run.out_dir", "run.seed", "run.delta", "run.eta_points",
        "run.wave_speed", "run.mu_iters", "run.record_dt", "run.snapshot_times"};
    for (const char* o : optional) {
        if (!seen.count(o)) cfg.defaulted.push_back(o);
    }

    try {
        cfg.model.validate();
        cfg.grid.validate();
    } catch (const precondition_error& e) {
        throw config_error(std::string("config: ") + e.what());
    }
    if (cfg.init_family != "cosine")
        throw config_error("config: key 'init.family' must be 'cosine'");
    if (cfg.amp_u < 0.0 || cfg.amp_v < 0.0)
        throw config_error("config: keys 'init.amp_u'/'init.amp_v' must be >= 0");
    if (cfg.n_samples < 3)
        throw config_error("config: key 'init.n_samples' must be >= 3");
    static const std::set<std::string> kinds = {"simulate", "thresholds",
                                               "phaseplane", "wave",
                                               "sweep-mu", "speed"};
    if (!kinds.count(cfg.kind))
        throw config_error("config: key 'run.kind' must be one of simulate, "
                           "thresholds, phaseplane, wave, sweep-mu, speed");
    if (!(cfg.delta > 0.0)) throw config_error("config: key 'run.delta' must be > 0");
    if (cfg.eta_points < 2) throw config_error("config: key 'run.eta_points' must be >= 2");
    if (cfg.mu_iters < 4) throw config_error("config: key 'run.mu_iters' must be >= 4");
    if (!(cfg.record_dt > 0.0))
        throw config_error("config: key 'run.record_dt' must be > 0");
    if (cfg.wave_speed < 0.0)
        throw config_error("config: key 'run.wave_speed' must be >= 0");
    if (!(cfg.classify.vanish_tol > 0.0) || !(cfg.classify.spread_factor > 0.0) ||
        !(cfg.classify.stall_scale > 0.0) ||
        !(cfg.classify.tail_fraction > 0.0) || cfg.classify.tail_fraction > 1.0 ||
        !(cfg.classify.min_speed_duration > 0.0))
        throw config_error("config: section 'classify' values out of range");
    for (double t : cfg.snapshot_times) {
        if (t < 0.0)
            throw config_error("config: key 'run.snapshot_times' must be nonnegative");
    }
    return cfg;
}

std::string emit_config(const ExperimentConfig& cfg) {
    using io::format_double;
    std::ostringstream os;
    os << "[model]\n";
    os << "lambda = " << format_double(cfg.model.lambda) << '\n';
    os << "b = " << format_double(cfg.model.b) << '\n';
    os << "m = " << format_double(cfg.model.m) << '\n';
    os << "d = " << format_double(cfg.model.d) << '\n';
    os << "nu = " << format_double(cfg.model.nu) << '\n';
    os << "c = " << format_double(cfg.model.c) << '\n';
    os << "mu = " << format_double(cfg.model.mu) << '\n';
    os << "rho = " << format_double(cfg.model.rho) << '\n';
    os << "h0 = " << format_double(cfg.model.h0) << '\n';
    os << "\n[init]\n";
    os << "family = " << cfg.init_family << '\n';
    os << "amp_u = " << format_double(cfg.amp_u) << '\n';
    os << "amp_v = " << format_double(cfg.amp_v) << '\n';
    os << "n_samples = " << cfg.n_samples << '\n';
    os << "\n[grid]\n";
    os << "n = " << cfg.grid.n << '\n';
    os << "dt = " << format_double(cfg.grid.dt) << '\n';
    os << "t_end = " << format_double(cfg.grid.t_end) << '\n';
    os << "dt_safety = " << format_double(cfg.grid.dt_safety) << '\n';
    os << "\n[classify]\n";
    os << "vanish_tol = " << format_double(cfg.classify.vanish_tol) << '\n';
    os << "spread_factor = " << format_double(cfg.classify.spread_factor) << '\n';
    os << "stall_scale = " << format_double(cfg.classify.stall_scale) << '\n';
    os << "tail_fraction = " << format_double(cfg.classify.tail_fraction) << '\n';
    os << "min_speed_duration = " << format_double(cfg.classify.min_speed_duration) << '\n';
    os << "\n[run]\n";
    os << "kind = " << cfg.kind << '\n';
    os << "out_dir = " << cfg.out_dir << '\n';
    os << "seed = " << cfg.seed << '\n';
    os << "delta = " << format_double(cfg.delta) << '\n';
    os << "eta_points = " << cfg.eta_points << '\n';
    os << "wave_speed = " << format_double(cfg.wave_speed) << '\n';
    os << "mu_iters = " << cfg.mu_iters << '\n';
    os << "record_dt = " << format_double(cfg.record_dt) << '\n';
    os << "snapshot_times = ";
    for (std::size_t i = 0; i < cfg.snapshot_times.size(); ++i) {
        if (i) os << ',';
        os << format_double(cfg.snapshot_times[i]);
    }
    os << '\n';
    return os.str();
}

InitialData ExperimentConfig::make_init() const {
    return make_cosine_init(model, amp_u, amp_v, n_samples);
}

bool ExperimentConfig::same_values(const ExperimentConfig& o) const {
    return model.lambda == o.model.lambda && model.b == o.model.b &&
           model.m == o.model.m && model.d == o.model.d &&
           model.nu == o.model.nu && model.c == o.model.c &&
           model.mu == o.model.mu && model.rho == o.model.rho &&
           model.h0 == o.model.h0 && init_family == o.init_family &&
           amp_u == o.amp_u && amp_v == o.amp_v && n_samples == o.n_samples &&
           grid.n == o.grid.n && grid.dt == o.grid.dt &&
           grid.t_end == o.grid.t_end && grid.dt_safety == o.grid.dt_safety &&
           classify.vanish_tol == o.classify.vanish_tol &&
           classify.spread_factor == o.classify.spread_factor &&
           classify.stall_scale == o.classify.stall_scale &&
           classify.tail_fraction == o.classify.tail_fraction &&
           classify.min_speed_duration == o.classify.min_speed_duration &&
           kind == o.kind && out_dir == o.out_dir && seed == o.seed &&
           delta == o.delta && eta_points == o.eta_points &&
           wave_speed == o.wave_speed && mu_iters == o.mu_iters &&
           record_dt == o.record_dt && snapshot_times == o.snapshot_times;
}

}  // namespace stefanlab
