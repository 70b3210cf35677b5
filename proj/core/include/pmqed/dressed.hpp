#pragma once

#include <Eigen/Dense>

#include "pmqed/system_params.hpp"

namespace pmqed {

// Jaynes-Cummings dressed pair n: mixing angle, Rabi splitting and the two
// eigenenergies eps_n^± = omega_c(n + 1/2) ± Omega/2.
struct DressedData {
    int n = 0;
    double theta = 0.0;  // radians, in (pi/2, pi) for lambda > 0
    double rabi = 0.0;   // sqrt(delta^2 + 4 lambda^2 (n+1))
    double e_plus = 0.0;
    double e_minus = 0.0;
};

double rabi_frequency(int n, const SystemParams& p);

// theta_n = atan2(2 lambda sqrt(n+1), delta - Omega_n). With this branch
// sin(theta)|e,n> + cos(theta)|g,n+1> is the eps^+ eigenvector.
// Throws DegenerateCouplingError at lambda = 0.
double mixing_angle(int n, const SystemParams& p);

DressedData dressed_data(int n, const SystemParams& p);

// Unperturbed (H0) energy of a label: -omega_0/2 for ground, eps_n^± otherwise.
double unperturbed_energy(const LevelLabel& label, const SystemParams& p);

// Amplitudes of the H0 eigenstate over the truncated bare basis
// (dimension 2(n_max+1)). Dressed labels need n+1 <= n_max.
Eigen::VectorXd dressed_vector(const LevelLabel& label, const SystemParams& p,
                               int n_max);

} // namespace pmqed
