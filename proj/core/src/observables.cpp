#include "pmqed/observables.hpp"

#include <cmath>
#include <limits>

#include "pmqed/errors.hpp"

namespace pmqed {

namespace {

double quiet_nan() { return std::numeric_limits<double>::quiet_NaN(); }

} // namespace

double PopulationTable::probability(const BareState& s) const
{
    for (const auto& [state, prob] : entries)
        if (state == s)
            return prob;
    return 0.0;
}

PopulationTable populations(const LevelLabel& level, const SystemParams& p,
                            int order, int n_max)
{
    const int idx = level.is_ground() ? 0 : level.n();
    if (n_max < 0)
        n_max = idx + 2 * order + 2; // corrections reach at most 2 per order
    PopulationTable out;
    out.level = level;
    out.order = order;
    out.validity_ratio = validity_metrics(p, idx + 3).max_ratio;
    const StateExpansion psi = corrected_state(level, p, order);
    const Eigen::VectorXd amps = psi.bare_amplitudes(p, n_max, /*normalize=*/true);
    out.normalized = true;
    out.entries.reserve(amps.size());
    for (int i = 0; i < amps.size(); ++i)
        out.entries.emplace_back(bare_from_index(i), amps[i] * amps[i]);
    return out;
}

BsShift bs_shift_dsp(int k, Branch branch, const SystemParams& p)
{
    const auto [gp, gc] = e2_ground(p);
    const auto [ep, ec] = e2_excited(k, branch, p);
    BsShift out;
    out.upper = LevelLabel::dressed(k, branch);
    out.method = Method::dsp;
    out.pdm_part = ep - gp;
    out.crt_part = ec - gc;
    out.total = *out.pdm_part + *out.crt_part;
    return out;
}

BsShift bs_shift_exact(int k, Branch branch, const SystemParams& p)
{
    p.validate();
    BsShift out;
    out.upper = LevelLabel::dressed(k, branch);
    out.method = Method::exact;
    if (p.lambda == 0.0) {
        // Bare states are exact eigenstates; the transition frequency equals
        // the unperturbed value and the shift vanishes identically.
        out.total = 0.0;
        return out;
    }
    const double eps_k = unperturbed_energy(out.upper, p);
    SpectrumResult s = converged_spectrum(p, 2 * k + 4);
    s = match_levels(std::move(s), p, {LevelLabel::ground(), out.upper});
    const double transition = s.energy_of(out.upper) - s.energy_of(LevelLabel::ground());
    out.total = transition - (eps_k + 0.5 * p.omega_0);
    return out;
}

std::vector<SweepRow> sweep(const SweepGrid& grid, int k_max, Engine engine,
                            bool with_shifts)
{
    if (grid.f.empty() || grid.alpha.empty() || grid.delta.empty())
        throw std::invalid_argument("sweep: every grid axis needs >= 1 point");
    const bool want_dsp = engine != Engine::exact;
    const bool want_exact = engine != Engine::dsp;
    const auto labels = low_labels(k_max);
    std::vector<SweepRow> rows;

    for (double f : grid.f) {
        for (double alpha : grid.alpha) {
            for (double delta : grid.delta) {
                auto emit = [&](const std::string& level, const std::string& eng,
                                const std::string& qty, double value,
                                const std::string& err = {}) {
                    rows.push_back({f, alpha, delta, level, eng, qty, value, err});
                };
                SystemParams p;
                try {
                    p = make_params(1.0, 1.0 + delta, f, alpha);
                } catch (const std::exception& ex) {
                    for (const auto& l : labels)
                        emit(l.str(), "-", "energy", quiet_nan(), ex.what());
                    continue;
                }

                SpectrumResult s;
                std::string exact_err;
                if (want_exact) {
                    try {
                        s = match_levels(converged_spectrum(p, int(labels.size()) + 2),
                                         p, labels);
                    } catch (const std::exception& ex) {
                        exact_err = ex.what();
                    }
                }

                for (const auto& l : labels) {
                    if (want_dsp) {
                        try {
                            const EnergyBreakdown eb = energy_breakdown(l, p);
                            emit(l.str(), "dsp", "energy", eb.total());
                            emit(l.str(), "dsp", "e2_pdm", eb.e2_pdm);
                            emit(l.str(), "dsp", "e2_crt", eb.e2_crt);
                        } catch (const std::exception& ex) {
                            emit(l.str(), "dsp", "energy", quiet_nan(), ex.what());
                        }
                        if (with_shifts && !l.is_ground()) {
                            try {
                                emit(l.str(), "dsp", "bs_shift",
                                     bs_shift_dsp(l.n(), l.branch(), p).total);
                            } catch (const std::exception& ex) {
                                emit(l.str(), "dsp", "bs_shift", quiet_nan(), ex.what());
                            }
                        }
                    }
                    if (want_exact) {
                        if (!exact_err.empty()) {
                            emit(l.str(), "exact", "energy", quiet_nan(), exact_err);
                        } else {
                            emit(l.str(), "exact", "energy", s.energy_of(l));
                            if (with_shifts && !l.is_ground())
                                emit(l.str(), "exact", "bs_shift",
                                     s.energy_of(l) - s.energy_of(LevelLabel::ground()) -
                                         (unperturbed_energy(l, p) + 0.5 * p.omega_0));
                        }
                    }
                }
            }
        }
    }
    return rows;
}

} // namespace pmqed
