#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pmqed/observables.hpp"

namespace pmqed::cli {

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    std::vector<double> points() const;
};

// "a:b:n" -> n equally spaced points from a to b; a bare number is a
// one-point grid.
GridSpec parse_grid(const std::string& text);

struct RunConfig {
    enum class Mode { spectrum, populations, bs_shift, table1, sweep, validate };

    Mode mode = Mode::spectrum;

    // Parameter source: inline normalized units (omega_c = 1), or a molecule
    // record (units cm^-1). Flags win over the scalar when a grid is given.
    std::optional<std::string> molecule;
    std::string catalog_path; // empty: $PMQED_MOLECULES, then built-in table
    double f = 0.05;
    double alpha = 0.0;
    double delta = 0.0; // omega_c units inline; cm^-1 with --molecule
    std::optional<GridSpec> f_grid;
    std::optional<GridSpec> alpha_grid;
    std::optional<GridSpec> delta_grid;

    int k = 0;
    Branch branch = Branch::minus;
    int k_max = 2;
    std::string level = "g0";
    int order = 2;
    Engine engine = Engine::both;
    bool with_shifts = false;

    std::string output; // empty -> stdout
    bool timestamp = true;
    double tol = -1.0; // convergence tolerance override (< 0: default)
};

// Exit status: 0 success, 1 invalid config, 2 computation error
// (near-degeneracy, non-convergence, ambiguous match).
int run(const RunConfig& config, std::ostream& err);

LevelLabel parse_level(const std::string& text);

} // namespace pmqed::cli
