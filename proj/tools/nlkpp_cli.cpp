#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlkpp/config.hpp"
#include "nlkpp/errors.hpp"
#include "nlkpp/run_main.hpp"

namespace {

nlkpp::RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw nlkpp::FileError("cannot open config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return nlkpp::parse_config(buf.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-difference simulator and verification harness for the "
                 "mass-saturated reaction-diffusion problem u_t = lap(u) + u^a (1 - int u)"};
    app.require_subcommand(1);

    std::string config_path, preset_name, series_path, report_path, axis = "space";
    std::vector<std::string> overrides;
    bool print_config = false;
    double m0 = 0.0, alpha = 1.0, bounds_tol = 1e-3, decay_slack = 1.1;

    auto* run_cmd = app.add_subcommand("run", "Run a simulation described by a config file");
    run_cmd->add_option("config", config_path, "path to key = value config")->required();

    auto* preset_cmd = app.add_subcommand("preset", "Run one of the preset experiments");
    preset_cmd->add_option("name", preset_name, "case1 | case1b | case2 | case3")->required();
    preset_cmd->add_option("--override", overrides, "key=value overrides")->take_all();
    preset_cmd->add_flag("--print-config", print_config,
                         "print the resolved config instead of running");

    auto* compare_cmd =
        app.add_subcommand("compare-heat", "Run the reacting/heat pair and fit the decay");
    compare_cmd->add_option("config", config_path, "path to config")->required();

    auto* converge_cmd =
        app.add_subcommand("converge", "Richardson self-convergence study (3 runs)");
    converge_cmd->add_option("config", config_path, "path to config")->required();
    converge_cmd->add_option("--axis", axis, "space | time")
        ->check(CLI::IsMember({"space", "time"}));

    auto* check_cmd = app.add_subcommand("check", "Re-check a series.csv against the mass laws");
    check_cmd->add_option("series", series_path, "path to series.csv")->required();
    check_cmd->add_option("--m0", m0, "intended initial mass")->required();
    check_cmd->add_option("--alpha", alpha, "reaction exponent")->required();
    check_cmd->add_option("--tol", bounds_tol, "mass-bounds tolerance");
    check_cmd->add_option("--slack", decay_slack, "decay envelope slack factor");
    check_cmd->add_option("--report", report_path, "write report JSON here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) return nlkpp::run_main(load_config(config_path), std::cout);
        if (*preset_cmd) {
            nlkpp::RunConfig cfg = nlkpp::preset(preset_name);
            nlkpp::apply_overrides(cfg, overrides);
            if (print_config) {
                std::cout << nlkpp::serialize_config(cfg);
                return 0;
            }
            return nlkpp::run_main(cfg, std::cout);
        }
        if (*compare_cmd) return nlkpp::compare_heat_main(load_config(config_path), std::cout);
        if (*converge_cmd) {
            const auto ax = axis == "space" ? nlkpp::RefineAxis::Space : nlkpp::RefineAxis::Time;
            nlkpp::converge_main(load_config(config_path), ax, std::cout);
            return 0;
        }
        if (*check_cmd)
            return nlkpp::check_main(series_path, m0, alpha, bounds_tol, decay_slack,
                                     report_path, std::cout);
    } catch (const nlkpp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
