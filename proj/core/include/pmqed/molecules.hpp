#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pmqed/system_params.hpp"

namespace pmqed {

// Physical constants used for unit conversion (CODATA values, pinned so the
// coupling computation is bit-reproducible).
namespace constants {
inline constexpr double debye_Cm = 3.33564e-30;        // 1 D in C*m
inline constexpr double wavenumber_J = 1.986445e-23;   // 1 cm^-1 in J
inline constexpr double epsilon0 = 8.8541878128e-12;   // F/m
} // namespace constants

// Named molecular transition: dipole moments in Debye, transition frequency
// in cm^-1. alpha is always derived from the dipoles, never stored.
struct MoleculeRecord {
    std::string name;
    std::string transition; // opaque label, e.g. "X2Sigma-A2Pi" or "(1-7)"
    double mu_gg = 0.0;
    double mu_ee = 0.0;
    double mu_ge = 0.0; // > 0
    double omega0_cm = 0.0; // > 0

    void validate() const;
};

// alpha = (mu_ee - mu_gg) / (2 mu_ge)
double derive_alpha(const MoleculeRecord& r);

// lambda = mu_ge sqrt(omega_c / (2 eps0 V)), evaluated in SI and returned
// in cm^-1. mu_ge in Debye, omega_c in cm^-1, volume in m^3.
double coupling_from_cavity(double mu_ge_debye, double omega_c_cm,
                            double volume_m3);

// Mode volume that realizes a given coupling (inverse of the above).
double volume_for_coupling(double mu_ge_debye, double omega_c_cm,
                           double lambda_cm);

// System parameters in cm^-1 for a molecule at normalized coupling f and
// detuning delta (cm^-1): omega_c = omega_0 - delta, lambda = f * omega_c.
SystemParams params_for(const MoleculeRecord& r, double f, double delta_cm = 0.0);

// The four built-in records (SrF and the three diphenyl transitions).
const std::vector<MoleculeRecord>& builtin_catalog();

// Catalog file format: comma-separated, header row
// name,transition,mu_gg,mu_ee,mu_ge,omega0_cm; '#' comment lines; UTF-8.
std::vector<MoleculeRecord> read_catalog(std::istream& in);
std::vector<MoleculeRecord> read_catalog_file(const std::string& path);
void write_catalog(std::ostream& out, const std::vector<MoleculeRecord>& records);
void write_catalog_file(const std::string& path,
                        const std::vector<MoleculeRecord>& records);

const MoleculeRecord& find_molecule(const std::vector<MoleculeRecord>& catalog,
                                    const std::string& name);

} // namespace pmqed
