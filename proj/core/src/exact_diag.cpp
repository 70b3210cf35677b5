#include "pmqed/exact_diag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pmqed/dressed.hpp"
#include "pmqed/errors.hpp"

namespace pmqed {

namespace {

constexpr int kMaxDim = 4096; // desk scale

Eigen::MatrixXd diagonal_part(const SystemParams& p, int n_max)
{
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(bare_dim(n_max), bare_dim(n_max));
    for (int n = 0; n <= n_max; ++n) {
        h(2 * n, 2 * n) = n * p.omega_c - 0.5 * p.omega_0;
        h(2 * n + 1, 2 * n + 1) = n * p.omega_c + 0.5 * p.omega_0;
    }
    return h;
}

void set_sym(Eigen::MatrixXd& h, int i, int j, double v)
{
    h(i, j) = v;
    h(j, i) = v;
}

// Bare eigenstate a label reduces to at lambda = 0. For delta >= 0 the +
// branch is |e,k> and the - branch |g,k+1>; swapped for delta < 0.
Eigen::VectorXd bare_label_vector(const LevelLabel& label, const SystemParams& p,
                                  int n_max)
{
    Eigen::VectorXd v = Eigen::VectorXd::Zero(bare_dim(n_max));
    if (label.is_ground()) {
        v[bare_index({Electronic::g, 0})] = 1.0;
        return v;
    }
    const int k = label.n();
    if (k + 1 > n_max)
        throw TruncationError("bare_label_vector: label " + label.str() +
                              " out of range for n_max " + std::to_string(n_max));
    const bool upper_is_e = p.delta() >= 0.0;
    const bool plus = label.branch() == Branch::plus;
    if (plus == upper_is_e)
        v[bare_index({Electronic::e, k})] = 1.0;
    else
        v[bare_index({Electronic::g, k + 1})] = 1.0;
    return v;
}

} // namespace

double SpectrumResult::energy_of(const LevelLabel& label) const
{
    for (const auto& m : matched)
        if (m.label == label)
            return eigenvalues[m.eigen_index];
    throw std::invalid_argument("SpectrumResult: label " + label.str() +
                                " not matched");
}

Eigen::VectorXd SpectrumResult::vector_of(const LevelLabel& label) const
{
    for (const auto& m : matched)
        if (m.label == label)
            return eigenvectors.col(m.eigen_index);
    throw std::invalid_argument("SpectrumResult: label " + label.str() +
                                " not matched");
}

TruncatedHamiltonian build(const SystemParams& p, int n_max)
{
    p.validate();
    if (n_max < 1)
        throw std::invalid_argument("build: n_max must be >= 1");
    TruncatedHamiltonian out{n_max, p, diagonal_part(p, n_max)};
    for (int n = 0; n < n_max; ++n) {
        const double r = std::sqrt(double(n + 1));
        // -lambda (alpha sigma_z + sigma_x)(a^+ + a)
        set_sym(out.entries, 2 * (n + 1), 2 * n, p.lambda * p.alpha * r);
        set_sym(out.entries, 2 * (n + 1) + 1, 2 * n + 1, -p.lambda * p.alpha * r);
        set_sym(out.entries, 2 * n + 1, 2 * (n + 1), -p.lambda * r);
        set_sym(out.entries, 2 * (n + 1) + 1, 2 * n, -p.lambda * r);
    }
    return out;
}

TruncatedHamiltonian build_rwa(const SystemParams& p, int n_max)
{
    p.validate();
    if (n_max < 1)
        throw std::invalid_argument("build_rwa: n_max must be >= 1");
    TruncatedHamiltonian out{n_max, p, diagonal_part(p, n_max)};
    for (int n = 0; n < n_max; ++n)
        set_sym(out.entries, 2 * n + 1, 2 * (n + 1),
                -p.lambda * std::sqrt(double(n + 1)));
    return out;
}

SpectrumResult eigensolve(const TruncatedHamiltonian& h)
{
    if (h.dim() > kMaxDim)
        throw std::invalid_argument("eigensolve: dimension " +
                                    std::to_string(h.dim()) + " exceeds " +
                                    std::to_string(kMaxDim));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.entries);
    if (solver.info() != Eigen::Success)
        throw NonConvergenceError("eigensolve: solver did not converge");
    SpectrumResult out;
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();
    out.n_max_used = h.n_max;
    // Residual contract: ||Hv - Ev|| <= 1e-10 ||H|| per pair.
    const double scale = h.entries.norm();
    const Eigen::MatrixXd resid =
        h.entries * out.eigenvectors - out.eigenvectors * out.eigenvalues.asDiagonal();
    const double worst = resid.colwise().norm().maxCoeff();
    if (worst > 1e-10 * scale)
        throw NonConvergenceError("eigensolve: residual " + std::to_string(worst) +
                                  " exceeds contract");
    return out;
}

SpectrumResult converged_spectrum(const SystemParams& p, int n_levels, double tol,
                                  int n_max_start)
{
    p.validate();
    if (n_levels < 1)
        throw std::invalid_argument("converged_spectrum: n_levels must be >= 1");
    if (tol < 0.0)
        tol = 1e-10 * p.omega_c;
    if (tol <= 0.0)
        throw std::invalid_argument("converged_spectrum: tol must be > 0");

    int n_max = std::max(n_max_start, n_levels);
    SpectrumResult prev = eigensolve(build(p, n_max));
    double last_delta = std::numeric_limits<double>::infinity();
    while (true) {
        const int next = 2 * n_max;
        if (bare_dim(next) > kMaxDim)
            throw NonConvergenceError(
                "converged_spectrum: cutoff limit reached, last delta " +
                std::to_string(last_delta));
        SpectrumResult cur = eigensolve(build(p, next));
        last_delta = (cur.eigenvalues.head(n_levels) - prev.eigenvalues.head(n_levels))
                         .cwiseAbs()
                         .maxCoeff();
        if (last_delta < tol) {
            prev.converged = true;
            return prev; // accepted at the smaller, already-converged size
        }
        prev = std::move(cur);
        n_max = next;
    }
}

SpectrumResult match_levels(SpectrumResult s, const SystemParams& p,
                            const std::vector<LevelLabel>& labels)
{
    constexpr double kTie = 1e-9;
    // Greedy in ascending unperturbed energy, excluding already-claimed
    // eigenvectors, so the assignment is injective by construction.
    std::vector<LevelLabel> order = labels;
    std::sort(order.begin(), order.end(),
              [&](const LevelLabel& a, const LevelLabel& b) {
                  return unperturbed_energy(a, p) < unperturbed_energy(b, p);
              });
    std::vector<bool> used(s.eigenvalues.size(), false);
    s.matched.clear();
    for (const auto& label : order) {
        const Eigen::VectorXd target =
            p.lambda == 0.0 ? bare_label_vector(label, p, s.n_max_used)
                            : dressed_vector(label, p, s.n_max_used);
        const Eigen::VectorXd overlaps = (s.eigenvectors.transpose() * target).cwiseAbs();
        int best = -1;
        for (int i = 0; i < overlaps.size(); ++i) {
            if (used[i])
                continue;
            if (best < 0 || overlaps[i] > overlaps[best] + kTie)
                best = i; // ties keep the smaller eigenvalue (lower index)
        }
        if (best < 0 || overlaps[best] < 0.5)
            throw AmbiguousMatchError("match_levels: best overlap for " +
                                      label.str() + " below 0.5");
        used[best] = true;
        s.matched.push_back({label, best, overlaps[best]});
    }
    // Restore the caller's label order.
    std::vector<MatchedLevel> reordered;
    for (const auto& label : labels)
        for (const auto& m : s.matched)
            if (m.label == label)
                reordered.push_back(m);
    s.matched = std::move(reordered);
    return s;
}

std::vector<LevelLabel> low_labels(int k_max)
{
    std::vector<LevelLabel> out{LevelLabel::ground()};
    for (int k = 0; k <= k_max; ++k) {
        out.push_back(LevelLabel::dressed(k, Branch::minus));
        out.push_back(LevelLabel::dressed(k, Branch::plus));
    }
    return out;
}

} // namespace pmqed
