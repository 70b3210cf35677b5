#include "pmqed/dressed.hpp"

#include <cmath>

#include "pmqed/errors.hpp"

namespace pmqed {

double rabi_frequency(int n, const SystemParams& p)
{
    const double d = p.delta();
    return std::sqrt(d * d + 4.0 * p.lambda * p.lambda * (n + 1));
}

double mixing_angle(int n, const SystemParams& p)
{
    p.validate();
    if (n < 0)
        throw std::invalid_argument("mixing_angle: n must be >= 0");
    if (p.lambda == 0.0)
        throw DegenerateCouplingError(
            "mixing_angle: undefined at lambda = 0; use bare states");
    // delta - Omega <= 0 and the numerator > 0, so theta in (pi/2, pi).
    return std::atan2(2.0 * p.lambda * std::sqrt(double(n + 1)),
                      p.delta() - rabi_frequency(n, p));
}

DressedData dressed_data(int n, const SystemParams& p)
{
    DressedData d;
    d.n = n;
    d.theta = mixing_angle(n, p);
    d.rabi = rabi_frequency(n, p);
    const double mid = p.omega_c * (n + 0.5);
    d.e_plus = mid + 0.5 * d.rabi;
    d.e_minus = mid - 0.5 * d.rabi;
    return d;
}

double unperturbed_energy(const LevelLabel& label, const SystemParams& p)
{
    if (label.is_ground())
        return -0.5 * p.omega_0;
    const double mid = p.omega_c * (label.n() + 0.5);
    return mid + 0.5 * branch_sign(label.branch()) * rabi_frequency(label.n(), p);
}

Eigen::VectorXd dressed_vector(const LevelLabel& label, const SystemParams& p,
                               int n_max)
{
    if (n_max < 0)
        throw std::invalid_argument("dressed_vector: n_max must be >= 0");
    Eigen::VectorXd v = Eigen::VectorXd::Zero(bare_dim(n_max));
    if (label.is_ground()) {
        v[bare_index({Electronic::g, 0})] = 1.0;
        return v;
    }
    const int n = label.n();
    if (n + 1 > n_max)
        throw TruncationError("dressed_vector: label " + label.str() +
                              " needs photon number " + std::to_string(n + 1) +
                              " > n_max " + std::to_string(n_max));
    const double th = mixing_angle(n, p);
    if (label.branch() == Branch::plus) {
        v[bare_index({Electronic::e, n})] = std::sin(th);
        v[bare_index({Electronic::g, n + 1})] = std::cos(th);
    } else {
        v[bare_index({Electronic::e, n})] = std::cos(th);
        v[bare_index({Electronic::g, n + 1})] = -std::sin(th);
    }
    return v;
}

} // namespace pmqed
