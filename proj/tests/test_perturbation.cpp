#include <cmath>
#include <vector>

#include <doctest.h>

#include "pmqed/errors.hpp"
#include "pmqed/perturbation.hpp"

using namespace pmqed;

namespace {

std::vector<LevelLabel> labels_up_to(int n_top)
{
    std::vector<LevelLabel> out{LevelLabel::ground()};
    for (int n = 0; n <= n_top; ++n) {
        out.push_back(LevelLabel::dressed(n, Branch::plus));
        out.push_back(LevelLabel::dressed(n, Branch::minus));
    }
    return out;
}

void check_close(double a, double b, double rel)
{
    CHECK(std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300}));
}

// Coefficient-by-coefficient comparison of two expansions over a label set.
void check_same_coefficients(const StateExpansion& a, const StateExpansion& b,
                             int n_top, double rel)
{
    for (const auto& l : labels_up_to(n_top)) {
        const double ca = a.coefficient(l);
        const double cb = b.coefficient(l);
        CHECK(std::abs(ca - cb) <= rel * std::max(1.0, std::abs(cb)));
    }
}

const std::vector<double> grid_f{0.01, 0.02, 0.05};
const std::vector<double> grid_alpha{0.0, 0.25, 0.5, 1.0};
const std::vector<double> grid_delta{-0.5, -0.1, 0.0, 0.1, 0.5};

} // namespace

TEST_CASE("vmat: vanishing diagonal and worked matrix elements")
{
    const SystemParams p = resonant_params(0.05, 1.0);
    for (const auto& l : labels_up_to(3))
        CHECK(vmat(l, l, p) == doctest::Approx(0.0).epsilon(1e-14));

    // <phi_0^+|V|g,0> = lambda alpha cos(theta_0) at resonance
    CHECK(vmat(LevelLabel::dressed(0, Branch::plus), LevelLabel::ground(), p) ==
          doctest::Approx(-0.05 * std::sqrt(0.5)).epsilon(1e-10));

    // <phi_1^+|V|g,0> = -lambda sin(theta_1): CRT channel, alpha-independent
    const SystemParams p0 = resonant_params(0.05, 0.0);
    const double v1 =
        vmat(LevelLabel::dressed(1, Branch::plus), LevelLabel::ground(), p);
    const double v1_rabi =
        vmat(LevelLabel::dressed(1, Branch::plus), LevelLabel::ground(), p0);
    CHECK(v1 == doctest::Approx(-0.05 * std::sqrt(0.5)).epsilon(1e-10));
    CHECK(v1 == doctest::Approx(v1_rabi).epsilon(1e-14));
}

TEST_CASE("vmat is symmetric and splits into PDM/CRT channels")
{
    const SystemParams p = make_params(1.0, 1.1, 0.04, 0.6);
    const auto labels = labels_up_to(3);
    for (const auto& a : labels)
        for (const auto& b : labels) {
            CHECK(vmat(a, b, p) == doctest::Approx(vmat(b, a, p)).epsilon(1e-13));
            const auto [pdm, crt] = vmat_split(a, b, p);
            CHECK(pdm + crt == doctest::Approx(vmat(a, b, p)).epsilon(1e-13));
        }

    // PDM part scales linearly in alpha, CRT part is alpha-independent.
    const SystemParams p2 = make_params(1.0, 1.1, 0.04, 1.2);
    for (const auto& a : labels) {
        const auto [pdm1, crt1] = vmat_split(a, LevelLabel::ground(), p);
        const auto [pdm2, crt2] = vmat_split(a, LevelLabel::ground(), p2);
        CHECK(pdm2 == doctest::Approx(2.0 * pdm1).epsilon(1e-12));
        CHECK(crt2 == doctest::Approx(crt1).epsilon(1e-14));
    }
}

TEST_CASE("closed-form e2: worked values at f=0.05, resonance")
{
    const SystemParams p = resonant_params(0.05, 1.0);

    const auto [g_pdm, g_crt] = e2_ground(p);
    CHECK(g_pdm == doctest::Approx(-2.50627e-3).epsilon(1e-4));
    CHECK(g_crt == doctest::Approx(-1.25157e-3).epsilon(1e-4));

    const auto [m_pdm, m_crt] = e2_excited(0, Branch::minus, p);
    CHECK(m_pdm == doctest::Approx(-2.0443e-3).epsilon(1e-3));
    CHECK(m_crt == doctest::Approx(-1.22174e-3).epsilon(1e-3));

    // alpha = 0 kills the PDM channel everywhere, CRT is unchanged.
    const SystemParams p0 = resonant_params(0.05, 0.0);
    CHECK(e2_ground(p0).first == 0.0);
    CHECK(e2_ground(p0).second == doctest::Approx(g_crt).epsilon(1e-14));
    CHECK(e2_excited(1, Branch::plus, p0).first == 0.0);
    CHECK(e2_excited(1, Branch::plus, p0).second ==
          doctest::Approx(e2_excited(1, Branch::plus, p).second).epsilon(1e-14));
}

TEST_CASE("energy breakdown: e1 vanishes, totals compose")
{
    const SystemParams p = make_params(1.0, 1.1, 0.03, 0.8);
    for (const auto& l : labels_up_to(2)) {
        const EnergyBreakdown b = energy_breakdown(l, p);
        CHECK(b.e1 == 0.0);
        CHECK(b.e0 == doctest::Approx(unperturbed_energy(l, p)));
        CHECK(b.total() == doctest::Approx(dsp_energy(l, p)).epsilon(1e-14));
    }
}

TEST_CASE("PDM second-order corrections scale exactly as alpha^2")
{
    for (double f : grid_f)
        for (double delta : grid_delta) {
            const SystemParams p1 = make_params(1.0, 1.0 + delta, f, 0.4);
            const SystemParams p2 = make_params(1.0, 1.0 + delta, f, 0.8);
            check_close(e2_ground(p2).first, 4.0 * e2_ground(p1).first, 1e-12);
            for (int k = 0; k <= 3; ++k)
                for (Branch b : {Branch::plus, Branch::minus})
                    check_close(e2_excited(k, b, p2).first,
                                4.0 * e2_excited(k, b, p1).first, 1e-12);
        }
}

TEST_CASE("oracle equivalence: closed-form e2 equals generic RS on the grid")
{
    for (double f : grid_f)
        for (double alpha : grid_alpha)
            for (double delta : grid_delta) {
                const SystemParams p = make_params(1.0, 1.0 + delta, f, alpha);
                const auto [g_pdm, g_crt] = e2_ground(p);
                const RsResult rs = generic_rs(LevelLabel::ground(), p, 2);
                CHECK(rs.e1 == 0.0);
                check_close(g_pdm + g_crt, rs.e2, 1e-12);
                for (int k = 0; k <= 3; ++k)
                    for (Branch b : {Branch::plus, Branch::minus}) {
                        const auto [e_pdm, e_crt] = e2_excited(k, b, p);
                        const RsResult ex =
                            generic_rs(LevelLabel::dressed(k, b), p, 2);
                        CHECK(ex.e1 == 0.0);
                        check_close(e_pdm + e_crt, ex.e2, 1e-12);
                    }
            }
}

TEST_CASE("corrected ground state: worked first-order coefficients")
{
    const SystemParams p = resonant_params(0.05, 1.0);
    const StateExpansion psi1 = psi_ground(p, 1);
    // -lambda alpha cos(theta_0)/(omega_0/2 + eps_0^+) = +0.035355/1.05
    CHECK(psi1.coefficient(LevelLabel::dressed(0, Branch::plus)) ==
          doctest::Approx(0.033672).epsilon(1e-4));
    // +lambda sin(theta_1)/(omega_0/2 + eps_1^+)
    CHECK(psi1.coefficient(LevelLabel::dressed(1, Branch::plus)) ==
          doctest::Approx(0.05 * std::sqrt(0.5) / (2.0 + 0.05 * std::sqrt(2.0)))
              .epsilon(1e-10));

    // alpha = 0: PDM channel absent, only the CRT terms on |phi_1^+-> remain.
    const StateExpansion rabi = psi_ground(resonant_params(0.05, 0.0), 1);
    int live = 0;
    for (const auto& t : rabi.terms) {
        if (t.amp == 0.0)
            continue;
        CHECK(t.channel == Channel::crt);
        CHECK(t.target.n() == 1);
        ++live;
    }
    CHECK(live == 2);
}

TEST_CASE("corrected ground state equals the generic engine, orders 1 and 2")
{
    for (double f : {0.01, 0.05})
        for (double alpha : {0.0, 0.5, 1.0})
            for (double delta : {-0.2, 0.0, 0.2}) {
                const SystemParams p = make_params(1.0, 1.0 + delta, f, alpha);
                const RsResult rs = generic_rs(LevelLabel::ground(), p, 2);
                check_same_coefficients(psi_ground(p, 1), rs.psi1, 4, 1e-12);
                // psi_ground(order 2) stores order-1 plus order-2 terms; the
                // generic engine keeps them separate.
                const StateExpansion closed2 = psi_ground(p, 2);
                for (const auto& l : labels_up_to(4)) {
                    const double closed = closed2.coefficient(l);
                    const double generic =
                        rs.psi1.coefficient(l) + rs.psi2.coefficient(l);
                    CHECK(std::abs(closed - generic) <=
                          1e-12 * std::max(1.0, std::abs(generic)));
                }
            }
}

TEST_CASE("corrected excited states equal the generic engine at first order")
{
    for (double f : grid_f)
        for (double alpha : grid_alpha)
            for (double delta : grid_delta) {
                const SystemParams p = make_params(1.0, 1.0 + delta, f, alpha);
                for (int k = 0; k <= 3; ++k)
                    for (Branch b : {Branch::plus, Branch::minus}) {
                        const RsResult rs =
                            generic_rs(LevelLabel::dressed(k, b), p, 1);
                        check_same_coefficients(psi1_excited(k, b, p), rs.psi1,
                                                k + 4, 1e-12);
                    }
            }
}

TEST_CASE("excited-state selection rules and worked coefficient")
{
    const SystemParams p = resonant_params(0.05, 1.0);
    // Last term of the (0,-) expansion: ground coefficient
    // -lambda alpha sin(theta_0)/(eps_0^- + omega_0/2) = -0.035355/0.95.
    CHECK(psi1_excited(0, Branch::minus, p).coefficient(LevelLabel::ground()) ==
          doctest::Approx(-0.037216).epsilon(1e-4));

    // k=1,+ at alpha=0: CRT only reaches |phi_3^+-> and ground (via <0|k-1>).
    const StateExpansion s =
        psi1_excited(1, Branch::plus, resonant_params(0.05, 0.0));
    for (const auto& t : s.terms) {
        if (t.amp == 0.0)
            continue;
        CHECK(t.channel == Channel::crt);
        const bool ok = t.target.is_ground() || t.target.n() == 3;
        CHECK(ok);
    }
}

TEST_CASE("bare amplitudes: normalization and lambda->0 limit")
{
    const SystemParams p = resonant_params(0.05, 1.0);
    const StateExpansion full = corrected_state(LevelLabel::ground(), p, 2);
    const Eigen::VectorXd amps = full.bare_amplitudes(p, 12, true);
    CHECK(amps.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));

    const SystemParams tiny = resonant_params(1e-6, 1.0);
    const Eigen::VectorXd weak =
        corrected_state(LevelLabel::ground(), tiny, 2).bare_amplitudes(tiny, 8, true);
    CHECK(weak[bare_index({Electronic::g, 0})] ==
          doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("near-degenerate denominators are rejected")
{
    // f=1, delta=0: omega_0/2 + eps_0^- = 0 exactly.
    const SystemParams p = resonant_params(1.0, 1.0);
    CHECK_THROWS_AS(e2_ground(p), NearDegeneracyError);
    CHECK_THROWS_AS(generic_rs(LevelLabel::ground(), p, 2), NearDegeneracyError);
}

TEST_CASE("validity metrics")
{
    const SystemParams p = resonant_params(0.05, 1.0);
    const ValidityReport rep = validity_metrics(p, 5);
    CHECK(rep.alpha_bound == doctest::Approx(8.718).epsilon(1e-3));
    // Brute force over all coupled pairs with indices <= 5. The PDM channel
    // dominates at alpha=1 (largest element ~ lambda*alpha*sqrt(n+1)); with
    // alpha=0 only the much smaller CRT ratios remain.
    CHECK(rep.max_ratio == doctest::Approx(0.152978).epsilon(1e-4));
    CHECK(rep.f_ok);
    CHECK(rep.alpha_ok);
    CHECK(validity_metrics(resonant_params(0.05, 0.0), 5).max_ratio < 0.05);

    const ValidityReport weak = validity_metrics(resonant_params(1e-8, 1.0), 3);
    CHECK(weak.max_ratio < 1e-6);
}
