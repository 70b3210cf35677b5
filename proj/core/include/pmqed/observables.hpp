#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmqed/exact_diag.hpp"
#include "pmqed/perturbation.hpp"
#include "pmqed/system_params.hpp"

namespace pmqed {

struct PopulationTable {
    LevelLabel level = LevelLabel::ground();
    int order = 0;
    bool normalized = false;
    double validity_ratio = 0.0; // max coupling ratio; > 0.1 merits a warning
    std::vector<std::pair<BareState, double>> entries;

    double probability(const BareState& s) const;
};

enum class Method { dsp, exact };

// Bloch-Siegert shift of the transition (k,±) -> |g,0>: deviation of the
// transition frequency from the unperturbed dressed value eps_k^± + omega_0/2.
struct BsShift {
    LevelLabel upper = LevelLabel::ground();
    Method method = Method::dsp;
    double total = 0.0;
    // PDM/CRT attribution exists only for the DSP method.
    std::optional<double> pdm_part;
    std::optional<double> crt_part;
};

// Bare-basis populations of the corrected state (via the generic RS engine),
// normalized. n_max <= 0 picks a cutoff large enough for the expansion.
PopulationTable populations(const LevelLabel& level, const SystemParams& p,
                            int order, int n_max = -1);

BsShift bs_shift_dsp(int k, Branch branch, const SystemParams& p);

// Cross-validation beyond second order: converged exact spectrum, matched
// levels. Handles lambda = 0 through the bare-state path (shift is 0 there).
BsShift bs_shift_exact(int k, Branch branch, const SystemParams& p);

struct SweepGrid {
    std::vector<double> f{0.05};
    std::vector<double> alpha{0.0};
    std::vector<double> delta{0.0}; // in units of omega_c
};

enum class Engine { dsp, exact, both };

struct SweepRow {
    double f = 0.0;
    double alpha = 0.0;
    double delta = 0.0;
    std::string level;
    std::string engine;   // "dsp" or "exact"
    std::string quantity; // "energy", "e2_pdm", "e2_crt", "bs_shift"
    double value = 0.0;
    std::string error; // empty on success; per-point errors never abort a sweep
};

// One row per grid point per level per quantity, lexicographic in
// (f, alpha, delta), then level. Energies of the 2*k_max+3 lowest labels;
// the DSP engine additionally reports the e2 channel parts.
std::vector<SweepRow> sweep(const SweepGrid& grid, int k_max, Engine engine,
                            bool with_shifts = false);

} // namespace pmqed
