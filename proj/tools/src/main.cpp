#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "run.hpp"

namespace {

using pmqed::cli::RunConfig;

void add_param_flags(CLI::App* cmd, RunConfig& config, std::string& f_grid,
                     std::string& alpha_grid, std::string& delta_grid,
                     bool with_grids)
{
    cmd->add_option("--f", config.f, "normalized coupling lambda/omega_c");
    cmd->add_option("--alpha", config.alpha, "normalized permanent dipole difference");
    cmd->add_option("--delta", config.delta,
                    "detuning omega_0 - omega_c (omega_c units; cm^-1 with --molecule)");
    cmd->add_option("--molecule", [&config](const std::vector<std::string>& v) {
        config.molecule = v.at(0);
        return true;
    }, "molecule name (or name:transition) from the catalog");
    cmd->add_option("--catalog", config.catalog_path,
                    "molecule catalog CSV (default: $PMQED_MOLECULES or built-in)");
    if (with_grids) {
        cmd->add_option("--f-grid", f_grid, "coupling grid start:stop:count");
        cmd->add_option("--alpha-grid", alpha_grid, "alpha grid start:stop:count");
        cmd->add_option("--delta-grid", delta_grid, "detuning grid start:stop:count");
    }
}

void add_common_flags(CLI::App* cmd, RunConfig& config)
{
    cmd->add_option("--output,-o", config.output, "output CSV path (default stdout)");
    cmd->add_flag("--no-timestamp", [&config](std::int64_t) {
        config.timestamp = false;
    }, "omit the timestamp header line (byte-identical reruns)");
    cmd->add_option("--tol", config.tol,
                    "exact-diagonalization convergence tolerance (omega_c units)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Energy spectrum, populations and Bloch-Siegert shifts of a "
                 "two-level polar molecule coupled to a cavity mode"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file (flags win)");

    RunConfig config;
    std::string f_grid, alpha_grid, delta_grid, branch = "-", engine = "both";

    auto* spectrum = app.add_subcommand("spectrum", "energy levels (DSP and/or exact)");
    add_param_flags(spectrum, config, f_grid, alpha_grid, delta_grid, true);
    spectrum->add_option("--engine", engine, "dsp|exact|both");
    spectrum->add_option("--kmax", config.k_max, "highest dressed pair index");
    add_common_flags(spectrum, config);

    auto* sweep = app.add_subcommand("sweep", "generic grid sweep");
    add_param_flags(sweep, config, f_grid, alpha_grid, delta_grid, true);
    sweep->add_option("--engine", engine, "dsp|exact|both");
    sweep->add_option("--kmax", config.k_max, "highest dressed pair index");
    sweep->add_flag("--with-shifts", config.with_shifts,
                    "also emit Bloch-Siegert shifts per transition");
    add_common_flags(sweep, config);

    auto* populations = app.add_subcommand("populations", "bare-state populations of a level");
    add_param_flags(populations, config, f_grid, alpha_grid, delta_grid, false);
    populations->add_option("--level", config.level, "g0 or <n>+/<n>-");
    populations->add_option("--order", config.order, "perturbation order (0..2)");
    populations->add_option("--engine", engine, "dsp|exact|both");
    add_common_flags(populations, config);

    auto* bs = app.add_subcommand("bs-shift", "Bloch-Siegert shift of (k,branch) -> g0");
    add_param_flags(bs, config, f_grid, alpha_grid, delta_grid, false);
    bs->add_option("--k", config.k, "dressed pair index of the upper level");
    bs->add_option("--branch", branch, "+ or -");
    bs->add_option("--engine", engine, "dsp|exact|both");
    add_common_flags(bs, config);

    auto* table1 = app.add_subcommand("table1", "per-molecule shifts of the (0,-) -> g0 transition, cm^-1");
    table1->add_option("--f", config.f, "normalized coupling (default 0.05, resonant)");
    table1->add_option("--catalog", config.catalog_path, "molecule catalog CSV");
    add_common_flags(table1, config);

    auto* validate = app.add_subcommand("validate", "perturbative validity metrics");
    add_param_flags(validate, config, f_grid, alpha_grid, delta_grid, false);
    validate->add_option("--kmax", config.k_max, "highest dressed pair index");
    add_common_flags(validate, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (spectrum->parsed()) config.mode = RunConfig::Mode::spectrum;
        if (sweep->parsed()) config.mode = RunConfig::Mode::sweep;
        if (populations->parsed()) config.mode = RunConfig::Mode::populations;
        if (bs->parsed()) config.mode = RunConfig::Mode::bs_shift;
        if (table1->parsed()) config.mode = RunConfig::Mode::table1;
        if (validate->parsed()) config.mode = RunConfig::Mode::validate;

        if (!f_grid.empty()) config.f_grid = pmqed::cli::parse_grid(f_grid);
        if (!alpha_grid.empty()) config.alpha_grid = pmqed::cli::parse_grid(alpha_grid);
        if (!delta_grid.empty()) config.delta_grid = pmqed::cli::parse_grid(delta_grid);
        if (branch == "+")
            config.branch = pmqed::Branch::plus;
        else if (branch == "-")
            config.branch = pmqed::Branch::minus;
        else
            throw std::invalid_argument("--branch must be + or -");
        if (engine == "dsp")
            config.engine = pmqed::Engine::dsp;
        else if (engine == "exact")
            config.engine = pmqed::Engine::exact;
        else if (engine == "both")
            config.engine = pmqed::Engine::both;
        else
            throw std::invalid_argument("--engine must be dsp, exact or both");
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }

    return pmqed::cli::run(config, std::cerr);
}
