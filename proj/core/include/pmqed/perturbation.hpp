#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pmqed/dressed.hpp"
#include "pmqed/system_params.hpp"

namespace pmqed {

// Provenance of a wavefunction coefficient: unperturbed (RWA) piece, the
// permanent-dipole channel of H', the counter-rotating channel, or a
// second-order cross term of both.
enum class Channel { rwa, pdm, crt, pdm_crt };

std::string to_string(Channel c);

struct ExpansionTerm {
    LevelLabel target = LevelLabel::ground();
    Channel channel = Channel::rwa;
    double amp = 0.0;
};

// Amplitudes of a (possibly corrected) state over the dressed basis, with
// per-channel provenance. Coefficients are stored unnormalized (intermediate
// normalization <Psi(0)|Psi> = 1); bare_amplitudes applies normalization on
// request when probabilities are extracted.
struct StateExpansion {
    LevelLabel label = LevelLabel::ground();
    int order = 0;
    std::vector<ExpansionTerm> terms;

    // Sum of all channel amplitudes on a given dressed label.
    double coefficient(const LevelLabel& target) const;

    Eigen::VectorXd bare_amplitudes(const SystemParams& p, int n_max,
                                    bool normalize = false) const;
};

// Merge the order-0 unit term with first (and second) order corrections.
StateExpansion combine(const StateExpansion& zeroth,
                       const std::vector<const StateExpansion*>& corrections);

struct EnergyBreakdown {
    LevelLabel label = LevelLabel::ground();
    double e0 = 0.0;
    double e1 = 0.0; // identically zero: V has no diagonal elements
    double e2_pdm = 0.0;
    double e2_crt = 0.0;

    double total() const { return e0 + e1 + e2_pdm + e2_crt; }
};

// <bra|V|ket> with V = -lambda[alpha sigma_z (a^+ + a) + a^+ sigma_+ + a sigma_-],
// computed by expanding both labels over the bare basis and applying the
// operator actions directly. Selection rules are emergent, not hard-coded.
double vmat(const LevelLabel& bra, const LevelLabel& ket, const SystemParams& p);

// Same, split into the PDM (alpha sigma_z) and CRT contributions.
std::pair<double, double> vmat_split(const LevelLabel& bra, const LevelLabel& ket,
                                     const SystemParams& p);

// Closed-form second-order corrections to the isolated ground level,
// returned as (pdm, crt).
std::pair<double, double> e2_ground(const SystemParams& p);

// Closed-form second-order corrections to dressed level (k, branch).
std::pair<double, double> e2_excited(int k, Branch branch, const SystemParams& p);

EnergyBreakdown energy_breakdown(const LevelLabel& label, const SystemParams& p);

// DSP total energy e0 + e2 of a label (closed forms).
double dsp_energy(const LevelLabel& label, const SystemParams& p);

// Generic Rayleigh-Schrodinger engine over the dressed basis, the independent
// oracle for every closed form. Truncation at n_cut >= label index + 3 is
// exact because V reaches at most +/-2 dressed indices.
struct RsResult {
    double e0 = 0.0;
    double e1 = 0.0;
    double e2 = 0.0;
    StateExpansion psi1; // first-order coefficients only
    StateExpansion psi2; // second-order coefficients only
};

RsResult generic_rs(const LevelLabel& label, const SystemParams& p, int order,
                    int n_cut = -1);

// Closed-form corrected ground state, order 1 or 2, channel-tagged and
// unnormalized. Contains only the correction terms (no order-0 piece).
StateExpansion psi_ground(const SystemParams& p, int order);

// Closed-form first-order correction to dressed level (k, branch).
StateExpansion psi1_excited(int k, Branch branch, const SystemParams& p);

// Corrected state including the order-0 term, via the generic engine.
StateExpansion corrected_state(const LevelLabel& label, const SystemParams& p,
                               int order);

struct ValidityReport {
    double max_ratio = 0.0;   // max |V_mn / (eps_m - eps_n)| over coupled pairs
    double alpha_bound = 0.0; // 2/((2+sqrt(3)) f) - 2
    bool f_ok = false;        // f << 0.4 heuristic (f < 0.4)
    bool alpha_ok = false;    // |alpha| < alpha_bound
};

ValidityReport validity_metrics(const SystemParams& p, int k_max);

} // namespace pmqed
