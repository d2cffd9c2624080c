#ifndef STEFANLAB_CONFIG_HPP
#define STEFANLAB_CONFIG_HPP

#include <string>
#include <vector>

#include "stefanlab/dichotomy.hpp"
#include "stefanlab/params.hpp"
#include "stefanlab/solver.hpp"

namespace stefanlab {

/// Thrown on malformed or invalid configuration text; the message names the
/// offending key.
class config_error : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/**
 * Fully resolved experiment description. The on-disk format is a flat
 * sectioned key-value document ([model], [init], [grid], [classify], [run])
 * with strict keys; every defaulted value is echoed in output metadata.
 */
struct ExperimentConfig {
    ModelParams model;

    std::string init_family = "cosine";
    double amp_u = 0.5;
    double amp_v = 0.5;
    std::size_t n_samples = 401;

    GridSpec grid;
    ClassifierSettings classify;

    std::string kind;                 ///< simulate|thresholds|phaseplane|wave|sweep-mu|speed
    std::string out_dir = "out";
    unsigned long seed = 0;
    double delta = 0.1;               ///< upper-solution construct parameter
    int eta_points = 8;               ///< phaseplane: eta ladder length
    double wave_speed = 0.0;          ///< wave: 0 selects 1.1 * speed_upper
    int mu_iters = 6;                 ///< sweep-mu bisection iterations
    double record_dt = 0.05;
    std::vector<double> snapshot_times;

    std::vector<std::string> defaulted;  ///< keys filled from defaults

    InitialData make_init() const;
    bool same_values(const ExperimentConfig& other) const;
};

/// Parses and validates a configuration document. Unknown keys, missing
/// required keys, and constraint violations raise config_error naming the key.
ExperimentConfig parse_config(const std::string& text);

/// Serializes every key with 17 significant digits; parse_config(emit_config(c))
/// reproduces c exactly.
std::string emit_config(const ExperimentConfig& cfg);

/// Runs the requested experiment, writes result files into cfg.out_dir and a
/// one-line summary to stdout. Returns the process exit status (0 on success).
int dispatch(const ExperimentConfig& cfg);

}  // namespace stefanlab

#endif
