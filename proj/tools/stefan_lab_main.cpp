#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "stefanlab/config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"stefan-lab: free-boundary predator-prey laboratory"};
    std::string config_path;
    std::string kind_override, out_override;
    long long seed_override = -1;
    app.add_option("config", config_path, "experiment configuration file")
        ->required();
    app.add_option("--kind", kind_override, "override run.kind");
    app.add_option("--out", out_override, "override run.out_dir");
    app.add_option("--seed", seed_override, "override run.seed");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "stefan-lab: cannot read config file '" << config_path
                      << "'\n";
            return 1;
        }
        std::ostringstream text;
        text << in.rdbuf();
        stefanlab::ExperimentConfig cfg = stefanlab::parse_config(text.str());
        if (!kind_override.empty()) cfg.kind = kind_override;
        if (!out_override.empty()) cfg.out_dir = out_override;
        if (seed_override >= 0) cfg.seed = (unsigned long)seed_override;
        // re-validate after flag overrides; keep the original defaults echo
        const auto defaulted = cfg.defaulted;
        cfg = stefanlab::parse_config(stefanlab::emit_config(cfg));
        cfg.defaulted = defaulted;
        return stefanlab::dispatch(cfg);
    } catch (const stefanlab::config_error& e) {
        std::cerr << "stefan-lab: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "stefan-lab: " << e.what() << '\n';
        return 2;
    }
}
