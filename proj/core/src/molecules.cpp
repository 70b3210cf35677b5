#include "pmqed/molecules.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pmqed {

namespace {

std::string trim(const std::string& s)
{
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ','))
        out.push_back(trim(field));
    return out;
}

constexpr const char* kHeader = "name,transition,mu_gg,mu_ee,mu_ge,omega0_cm";

} // namespace

void MoleculeRecord::validate() const
{
    if (!(mu_ge > 0.0))
        throw std::invalid_argument("MoleculeRecord " + name + ": mu_ge must be > 0");
    if (!(omega0_cm > 0.0))
        throw std::invalid_argument("MoleculeRecord " + name + ": omega0 must be > 0");
}

double derive_alpha(const MoleculeRecord& r)
{
    r.validate();
    return (r.mu_ee - r.mu_gg) / (2.0 * r.mu_ge);
}

double coupling_from_cavity(double mu_ge_debye, double omega_c_cm, double volume_m3)
{
    if (mu_ge_debye < 0.0 || !(omega_c_cm > 0.0) || !(volume_m3 > 0.0))
        throw std::invalid_argument("coupling_from_cavity: invalid argument");
    const double mu = mu_ge_debye * constants::debye_Cm;
    const double omega_J = omega_c_cm * constants::wavenumber_J;
    const double lambda_J =
        mu * std::sqrt(omega_J / (2.0 * constants::epsilon0 * volume_m3));
    return lambda_J / constants::wavenumber_J;
}

double volume_for_coupling(double mu_ge_debye, double omega_c_cm, double lambda_cm)
{
    if (!(mu_ge_debye > 0.0) || !(omega_c_cm > 0.0) || !(lambda_cm > 0.0))
        throw std::invalid_argument("volume_for_coupling: invalid argument");
    const double mu = mu_ge_debye * constants::debye_Cm;
    const double omega_J = omega_c_cm * constants::wavenumber_J;
    const double lambda_J = lambda_cm * constants::wavenumber_J;
    return mu * mu * omega_J / (2.0 * constants::epsilon0 * lambda_J * lambda_J);
}

SystemParams params_for(const MoleculeRecord& r, double f, double delta_cm)
{
    if (!(f > 0.0))
        throw std::invalid_argument("params_for: f must be > 0");
    const double omega_c = r.omega0_cm - delta_cm;
    if (!(omega_c > 0.0))
        throw std::invalid_argument("params_for: detuning leaves omega_c <= 0");
    return make_params(omega_c, r.omega0_cm, f * omega_c, derive_alpha(r));
}

const std::vector<MoleculeRecord>& builtin_catalog()
{
    static const std::vector<MoleculeRecord> catalog = {
        {"SrF", "X2Sigma-A2Pi", 3.482, 2.059, 6.227, 1.52e4},
        {"diphenyl", "(1-2)", 10.67, 16.66, 9.13, 3.05e4},
        {"diphenyl", "(1-4)", 10.67, 12.99, 3.9, 3.85e4},
        {"diphenyl", "(1-7)", 10.67, 14.07, 3.37, 4.89e4},
    };
    return catalog;
}

std::vector<MoleculeRecord> read_catalog(std::istream& in)
{
    std::vector<MoleculeRecord> out;
    std::string line;
    bool header_seen = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        if (!header_seen) {
            if (t != kHeader)
                throw std::invalid_argument("catalog: expected header '" +
                                            std::string(kHeader) + "'");
            header_seen = true;
            continue;
        }
        const auto fields = split_csv(t);
        if (fields.size() != 6)
            throw std::invalid_argument("catalog line " + std::to_string(lineno) +
                                        ": expected 6 fields");
        MoleculeRecord r;
        r.name = fields[0];
        r.transition = fields[1];
        try {
            r.mu_gg = std::stod(fields[2]);
            r.mu_ee = std::stod(fields[3]);
            r.mu_ge = std::stod(fields[4]);
            r.omega0_cm = std::stod(fields[5]);
        } catch (const std::exception&) {
            throw std::invalid_argument("catalog line " + std::to_string(lineno) +
                                        ": bad numeric field");
        }
        r.validate();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<MoleculeRecord> read_catalog_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open catalog file: " + path);
    return read_catalog(in);
}

void write_catalog(std::ostream& out, const std::vector<MoleculeRecord>& records)
{
    out << kHeader << '\n';
    out.precision(15);
    for (const auto& r : records)
        out << r.name << ',' << r.transition << ',' << r.mu_gg << ',' << r.mu_ee
            << ',' << r.mu_ge << ',' << r.omega0_cm << '\n';
}

void write_catalog_file(const std::string& path,
                        const std::vector<MoleculeRecord>& records)
{
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot open catalog file for write: " + path);
    write_catalog(out, records);
}

const MoleculeRecord& find_molecule(const std::vector<MoleculeRecord>& catalog,
                                    const std::string& name)
{
    // "name" alone, or "name:transition" when a molecule has several rows.
    std::string want_name = name, want_transition;
    if (const auto pos = name.find(':'); pos != std::string::npos) {
        want_name = name.substr(0, pos);
        want_transition = name.substr(pos + 1);
    }
    const MoleculeRecord* found = nullptr;
    for (const auto& r : catalog) {
        if (r.name != want_name)
            continue;
        if (!want_transition.empty() && r.transition != want_transition)
            continue;
        if (found)
            throw std::invalid_argument("molecule '" + name +
                                        "' is ambiguous; use name:transition");
        found = &r;
    }
    if (!found)
        throw std::invalid_argument("molecule '" + name + "' not in catalog");
    return *found;
}

} // namespace pmqed
