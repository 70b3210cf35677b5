#pragma once

#include <vector>

#include <Eigen/Dense>

#include "pmqed/system_params.hpp"

namespace pmqed {

// Full Hamiltonian on the truncated Fock space (photon numbers <= n_max),
// dense real symmetric in the interleaved bare-state index order.
struct TruncatedHamiltonian {
    int n_max = 0;
    SystemParams params;
    Eigen::MatrixXd entries;

    int dim() const { return bare_dim(n_max); }
};

struct MatchedLevel {
    LevelLabel label = LevelLabel::ground();
    int eigen_index = -1;
    double overlap = 0.0;
};

struct SpectrumResult {
    Eigen::VectorXd eigenvalues; // ascending
    Eigen::MatrixXd eigenvectors; // columns, orthonormal
    int n_max_used = 0;
    bool converged = false;
    std::vector<MatchedLevel> matched;

    double energy_of(const LevelLabel& label) const;
    Eigen::VectorXd vector_of(const LevelLabel& label) const;
};

TruncatedHamiltonian build(const SystemParams& p, int n_max);

// H0 only (rotating coupling, no PDM term); used by tests to check the
// dressed basis against an independent matrix construction.
TruncatedHamiltonian build_rwa(const SystemParams& p, int n_max);

// Dense symmetric eigendecomposition. Residuals ||Hv - Ev|| are verified
// against 1e-10 * ||H|| per pair.
SpectrumResult eigensolve(const TruncatedHamiltonian& h);

// Doubles n_max from n_max_start until the lowest n_levels eigenvalues move
// by less than tol between consecutive sizes.
SpectrumResult converged_spectrum(const SystemParams& p, int n_levels,
                                  double tol = -1.0, int n_max_start = 16);

// Maximum-overlap assignment of perturbative labels to eigen-indices,
// greedy in ascending unperturbed energy with exclusion.
SpectrumResult match_levels(SpectrumResult s, const SystemParams& p,
                            const std::vector<LevelLabel>& labels);

// The seven lowest labels {g0, 0±, 1±, ..., (k_max)±}.
std::vector<LevelLabel> low_labels(int k_max);

} // namespace pmqed
