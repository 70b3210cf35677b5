#include "run.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "pmqed/errors.hpp"
#include "pmqed/molecules.hpp"

namespace pmqed::cli {

namespace {

std::vector<MoleculeRecord> load_catalog(const RunConfig& config)
{
    if (!config.catalog_path.empty())
        return read_catalog_file(config.catalog_path);
    if (const char* env = std::getenv("PMQED_MOLECULES"); env && *env)
        return read_catalog_file(env);
    return builtin_catalog();
}

SystemParams resolve_params(const RunConfig& config)
{
    if (config.molecule) {
        const auto catalog = load_catalog(config);
        return params_for(find_molecule(catalog, *config.molecule), config.f,
                          config.delta);
    }
    return make_params(1.0, 1.0 + config.delta, config.f, config.alpha);
}

std::string mode_name(RunConfig::Mode m)
{
    switch (m) {
    case RunConfig::Mode::spectrum: return "spectrum";
    case RunConfig::Mode::populations: return "populations";
    case RunConfig::Mode::bs_shift: return "bs-shift";
    case RunConfig::Mode::table1: return "table1";
    case RunConfig::Mode::sweep: return "sweep";
    case RunConfig::Mode::validate: return "validate";
    }
    return "?";
}

void write_header(std::ostream& out, const RunConfig& config)
{
    out << "# pmqed " << mode_name(config.mode) << "\n";
    out << "# params:";
    if (config.molecule)
        out << " molecule=" << *config.molecule;
    out << " f=" << config.f << " alpha=" << config.alpha
        << " delta=" << config.delta << " order=" << config.order
        << " k_max=" << config.k_max << "\n";
    out << "# engines: "
        << (config.engine == Engine::dsp
                ? "dsp"
                : config.engine == Engine::exact ? "exact" : "dsp,exact")
        << "; exact: dense symmetric eigensolve (Eigen), doubling cutoff, tol="
        << (config.tol > 0 ? config.tol : 1e-10) << "\n";
    if (config.timestamp) {
        std::time_t t = std::time(nullptr);
        char buf[64];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
        out << "# generated: " << buf << "\n";
    }
}

void write_rows(std::ostream& out, const std::vector<SweepRow>& rows)
{
    out << "f,alpha,delta,level,engine,quantity,value,error\n";
    for (const auto& r : rows)
        out << r.f << ',' << r.alpha << ',' << r.delta << ',' << r.level << ','
            << r.engine << ',' << r.quantity << ',' << r.value << ','
            << r.error << '\n';
}

SweepGrid resolve_grid(const RunConfig& config)
{
    SweepGrid grid;
    grid.f = config.f_grid ? config.f_grid->points() : std::vector<double>{config.f};
    grid.alpha = config.alpha_grid ? config.alpha_grid->points()
                                   : std::vector<double>{config.alpha};
    grid.delta = config.delta_grid ? config.delta_grid->points()
                                   : std::vector<double>{config.delta};
    return grid;
}

void run_grid_mode(std::ostream& out, const RunConfig& config, bool with_shifts)
{
    if (config.molecule)
        throw std::invalid_argument(
            "grid sweeps use normalized units; --molecule is single-point only");
    const auto rows = sweep(resolve_grid(config), config.k_max, config.engine,
                            with_shifts);
    write_rows(out, rows);
}

void run_populations(std::ostream& out, std::ostream& err, const RunConfig& config)
{
    const SystemParams p = resolve_params(config);
    const LevelLabel level = parse_level(config.level);
    std::vector<SweepRow> rows;
    auto emit = [&](const std::string& engine, const BareState& s, double prob) {
        rows.push_back({p.f(), p.alpha, p.delta() / p.omega_c, level.str(), engine,
                        "P(" + to_string(s) + ")", prob, ""});
    };
    if (config.engine != Engine::exact) {
        const PopulationTable table = populations(level, p, config.order);
        if (table.validity_ratio > 0.1)
            err << "warning: max coupling ratio " << table.validity_ratio
                << " > 0.1; perturbative populations may be inaccurate\n";
        for (const auto& [state, prob] : table.entries)
            emit("dsp", state, prob);
    }
    if (config.engine != Engine::dsp) {
        SpectrumResult s = converged_spectrum(p, 2 * config.k_max + 3,
                                              config.tol > 0 ? config.tol * p.omega_c
                                                             : -1.0);
        s = match_levels(std::move(s), p, {level});
        const Eigen::VectorXd v = s.vector_of(level);
        const int n_show = std::min<int>(v.size(), 2 * (config.k_max + 4));
        for (int i = 0; i < n_show; ++i)
            emit("exact", bare_from_index(i), v[i] * v[i]);
    }
    write_rows(out, rows);
}

void run_bs_shift(std::ostream& out, const RunConfig& config)
{
    const SystemParams p = resolve_params(config);
    std::vector<SweepRow> rows;
    const std::string level =
        LevelLabel::dressed(config.k, config.branch).str();
    auto emit = [&](const std::string& engine, const std::string& qty, double v) {
        rows.push_back(
            {p.f(), p.alpha, p.delta() / p.omega_c, level, engine, qty, v, ""});
    };
    if (config.engine != Engine::exact) {
        const BsShift s = bs_shift_dsp(config.k, config.branch, p);
        emit("dsp", "bs_total", s.total);
        emit("dsp", "bs_pdm", *s.pdm_part);
        emit("dsp", "bs_crt", *s.crt_part);
    }
    if (config.engine != Engine::dsp)
        emit("exact", "bs_total", bs_shift_exact(config.k, config.branch, p).total);
    write_rows(out, rows);
}

void run_table1(std::ostream& out, const RunConfig& config)
{
    const auto catalog = load_catalog(config);
    out << "name,transition,alpha,omega0_cm,pdm_shift_cm,crt_shift_cm\n";
    for (const auto& r : catalog) {
        const SystemParams p = params_for(r, config.f, 0.0);
        const BsShift s = bs_shift_dsp(0, Branch::minus, p);
        out << r.name << ',' << r.transition << ',' << derive_alpha(r) << ','
            << r.omega0_cm << ',' << *s.pdm_part << ',' << *s.crt_part << '\n';
    }
}

void run_validate(std::ostream& out, const RunConfig& config)
{
    const SystemParams p = resolve_params(config);
    const ValidityReport rep = validity_metrics(p, config.k_max + 3);
    out << "quantity,value\n";
    out << "f," << p.f() << '\n';
    out << "alpha," << p.alpha << '\n';
    out << "max_coupling_ratio," << rep.max_ratio << '\n';
    out << "alpha_bound," << rep.alpha_bound << '\n';
    out << "f_ok," << (rep.f_ok ? 1 : 0) << '\n';
    out << "alpha_ok," << (rep.alpha_ok ? 1 : 0) << '\n';
}

} // namespace

std::vector<double> GridSpec::points() const
{
    if (count < 1)
        throw std::invalid_argument("grid: count must be >= 1");
    std::vector<double> out;
    out.reserve(count);
    if (count == 1) {
        out.push_back(start);
        return out;
    }
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i)
        out.push_back(start + i * step);
    return out;
}

GridSpec parse_grid(const std::string& text)
{
    GridSpec g;
    const auto c1 = text.find(':');
    try {
        if (c1 == std::string::npos) {
            g.start = g.stop = std::stod(text);
            g.count = 1;
            return g;
        }
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw std::invalid_argument("grid");
        g.start = std::stod(text.substr(0, c1));
        g.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        g.count = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("grid spec '" + text +
                                    "' is not 'start:stop:count'");
    }
    if (g.count < 1)
        throw std::invalid_argument("grid spec '" + text + "': count must be >= 1");
    return g;
}

LevelLabel parse_level(const std::string& text)
{
    if (text == "g0" || text == "ground")
        return LevelLabel::ground();
    if (text.size() >= 2 && (text.back() == '+' || text.back() == '-')) {
        try {
            const int n = std::stoi(text.substr(0, text.size() - 1));
            return LevelLabel::dressed(
                n, text.back() == '+' ? Branch::plus : Branch::minus);
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument("level '" + text +
                                "' is not 'g0' or '<n>+'/'<n>-'");
}

int run(const RunConfig& config, std::ostream& err)
{
    std::ofstream file;
    if (!config.output.empty()) {
        file.open(config.output);
        if (!file) {
            err << "error: cannot open output file " << config.output << "\n";
            return 1;
        }
    }
    std::ostream& out = config.output.empty() ? std::cout : file;
    out << std::setprecision(17);

    try {
        write_header(out, config);
        switch (config.mode) {
        case RunConfig::Mode::spectrum:
            run_grid_mode(out, config, false);
            break;
        case RunConfig::Mode::sweep:
            run_grid_mode(out, config, config.with_shifts);
            break;
        case RunConfig::Mode::populations:
            run_populations(out, err, config);
            break;
        case RunConfig::Mode::bs_shift:
            run_bs_shift(out, config);
            break;
        case RunConfig::Mode::table1:
            run_table1(out, config);
            break;
        case RunConfig::Mode::validate:
            run_validate(out, config);
            break;
        }
    } catch (const NearDegeneracyError& ex) {
        out << "# error: code=near-degeneracy " << ex.what() << "\n";
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const NonConvergenceError& ex) {
        out << "# error: code=non-convergence " << ex.what() << "\n";
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const AmbiguousMatchError& ex) {
        out << "# error: code=ambiguous-match " << ex.what() << "\n";
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const DegenerateCouplingError& ex) {
        out << "# error: code=degenerate-coupling " << ex.what() << "\n";
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace pmqed::cli
