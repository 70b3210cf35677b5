#include "pmqed/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pmqed/errors.hpp"

namespace pmqed {

namespace {

double sq(double x) { return x * x; }

double degeneracy_threshold(const SystemParams& p) { return 1e-9 * p.omega_c; }

// Denominator guard: the non-degenerate formulas are invalid at crossings.
double checked(double den, const SystemParams& p, const std::string& who)
{
    if (std::abs(den) < degeneracy_threshold(p))
        throw NearDegeneracyError("near-degenerate denominator for " + who);
    return den;
}

// Apply V = -lambda[alpha sigma_z (a^+ + a) + a^+ sigma_+ + a sigma_-] to a
// bare-basis vector; channels selectable. Amplitudes leaving the truncation
// window are dropped by the caller's choice of n_max.
Eigen::VectorXd apply_perturbation(const Eigen::VectorXd& v, const SystemParams& p,
                                   bool with_pdm, bool with_crt)
{
    const int dim = int(v.size());
    const int n_max = dim / 2 - 1;
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
    const double lam = p.lambda;
    const double al = p.alpha;
    for (int n = 0; n <= n_max; ++n) {
        const double g = v[2 * n];
        const double e = v[2 * n + 1];
        const double up = std::sqrt(double(n + 1));
        const double down = std::sqrt(double(n));
        if (with_pdm) {
            // -lambda alpha sigma_z (a^+ + a); sigma_z|g> = -|g>, sigma_z|e> = +|e>
            if (n + 1 <= n_max) {
                out[2 * (n + 1)] += lam * al * up * g;
                out[2 * (n + 1) + 1] += -lam * al * up * e;
            }
            if (n >= 1) {
                out[2 * (n - 1)] += lam * al * down * g;
                out[2 * (n - 1) + 1] += -lam * al * down * e;
            }
        }
        if (with_crt) {
            // -lambda (a^+ sigma_+ + a sigma_-)
            if (n + 1 <= n_max)
                out[2 * (n + 1) + 1] += -lam * up * g;
            if (n >= 1)
                out[2 * (n - 1)] += -lam * down * e;
        }
    }
    return out;
}

int label_photon_reach(const LevelLabel& l)
{
    return l.is_ground() ? 0 : l.n() + 1;
}

double vmat_impl(const LevelLabel& bra, const LevelLabel& ket,
                 const SystemParams& p, bool with_pdm, bool with_crt)
{
    const int n_max = std::max(label_photon_reach(ket) + 1, label_photon_reach(bra)) + 1;
    const Eigen::VectorXd vb = dressed_vector(bra, p, n_max);
    const Eigen::VectorXd vk = dressed_vector(ket, p, n_max);
    return vb.dot(apply_perturbation(vk, p, with_pdm, with_crt));
}

std::vector<LevelLabel> labels_up_to(int n_cut)
{
    std::vector<LevelLabel> out;
    out.push_back(LevelLabel::ground());
    for (int n = 0; n <= n_cut; ++n) {
        out.push_back(LevelLabel::dressed(n, Branch::plus));
        out.push_back(LevelLabel::dressed(n, Branch::minus));
    }
    return out;
}

} // namespace

std::string to_string(Channel c)
{
    switch (c) {
    case Channel::rwa: return "rwa";
    case Channel::pdm: return "pdm";
    case Channel::crt: return "crt";
    case Channel::pdm_crt: return "pdm*crt";
    }
    return "?";
}

double StateExpansion::coefficient(const LevelLabel& target) const
{
    double sum = 0.0;
    for (const auto& t : terms)
        if (t.target == target)
            sum += t.amp;
    return sum;
}

Eigen::VectorXd StateExpansion::bare_amplitudes(const SystemParams& p, int n_max,
                                                bool normalize) const
{
    Eigen::VectorXd v = Eigen::VectorXd::Zero(bare_dim(n_max));
    for (const auto& t : terms)
        v += t.amp * dressed_vector(t.target, p, n_max);
    if (normalize) {
        const double nrm = v.norm();
        if (nrm == 0.0)
            throw std::logic_error("StateExpansion: cannot normalize zero vector");
        v /= nrm;
    }
    return v;
}

StateExpansion combine(const StateExpansion& zeroth,
                       const std::vector<const StateExpansion*>& corrections)
{
    StateExpansion out = zeroth;
    for (const auto* c : corrections) {
        out.order = std::max(out.order, c->order);
        out.terms.insert(out.terms.end(), c->terms.begin(), c->terms.end());
    }
    return out;
}

double vmat(const LevelLabel& bra, const LevelLabel& ket, const SystemParams& p)
{
    return vmat_impl(bra, ket, p, true, true);
}

std::pair<double, double> vmat_split(const LevelLabel& bra, const LevelLabel& ket,
                                     const SystemParams& p)
{
    return {vmat_impl(bra, ket, p, true, false), vmat_impl(bra, ket, p, false, true)};
}

std::pair<double, double> e2_ground(const SystemParams& p)
{
    p.validate();
    const DressedData d0 = dressed_data(0, p);
    const DressedData d1 = dressed_data(1, p);
    const double h0 = 0.5 * p.omega_0;
    const double l2 = p.lambda * p.lambda;
    const double s0 = std::sin(d0.theta), c0 = std::cos(d0.theta);
    const double s1 = std::sin(d1.theta), c1 = std::cos(d1.theta);
    const double pdm =
        -l2 * p.alpha * p.alpha *
        (c0 * c0 / checked(h0 + d0.e_plus, p, "g0 vs 0+") +
         s0 * s0 / checked(h0 + d0.e_minus, p, "g0 vs 0-"));
    const double crt = -l2 * (s1 * s1 / checked(h0 + d1.e_plus, p, "g0 vs 1+") +
                              c1 * c1 / checked(h0 + d1.e_minus, p, "g0 vs 1-"));
    return {pdm, crt};
}

std::pair<double, double> e2_excited(int k, Branch branch, const SystemParams& p)
{
    p.validate();
    if (k < 0)
        throw std::invalid_argument("e2_excited: k must be >= 0");
    const double h0 = 0.5 * p.omega_0;
    const double l2 = p.lambda * p.lambda;
    auto th = [&](int n) { return mixing_angle(n, p); };
    auto ep = [&](int n, Branch b) {
        return unperturbed_energy(LevelLabel::dressed(n, b), p);
    };
    auto gap = [&](int n, Branch b, double ek) {
        return checked(ek - ep(n, b), p,
                       std::to_string(k) + (branch == Branch::plus ? "+" : "-") +
                           " vs " + LevelLabel::dressed(n, b).str());
    };
    const double ek = ep(k, branch);
    const double sk = std::sin(th(k)), ck = std::cos(th(k));
    const double rk = std::sqrt(double(k));
    const double rk1 = std::sqrt(double(k + 1));
    const double rk2 = std::sqrt(double(k + 2));

    double pdm = 0.0;
    double crt = 0.0;
    const double s_up = std::sin(th(k + 1)), c_up = std::cos(th(k + 1));
    if (branch == Branch::plus) {
        pdm += sq(rk1 * sk * s_up - rk2 * ck * c_up) / gap(k + 1, Branch::plus, ek);
        pdm += sq(rk1 * sk * c_up + rk2 * ck * s_up) / gap(k + 1, Branch::minus, ek);
        if (k >= 1) {
            const double s_dn = std::sin(th(k - 1)), c_dn = std::cos(th(k - 1));
            pdm += sq(rk * sk * s_dn - rk1 * ck * c_dn) / gap(k - 1, Branch::plus, ek);
            pdm += sq(rk * sk * c_dn + rk1 * ck * s_dn) / gap(k - 1, Branch::minus, ek);
        }
        if (k == 0)
            pdm += sq(rk1 * ck) / checked(ek + h0, p, "0+ vs g0");
        const double s2 = std::sin(th(k + 2)), c2 = std::cos(th(k + 2));
        crt += (k + 2) * ck * ck *
               (s2 * s2 / gap(k + 2, Branch::plus, ek) +
                c2 * c2 / gap(k + 2, Branch::minus, ek));
        if (k >= 2) {
            const double s2d = std::sin(th(k - 2)), c2d = std::cos(th(k - 2));
            crt += k * sk * sk *
                   (c2d * c2d / gap(k - 2, Branch::plus, ek) +
                    s2d * s2d / gap(k - 2, Branch::minus, ek));
        }
        if (k == 1)
            crt += sq(rk * sk) / checked(ek + h0, p, "1+ vs g0");
    } else {
        pdm += sq(rk1 * ck * s_up + rk2 * sk * c_up) / gap(k + 1, Branch::plus, ek);
        pdm += sq(rk1 * ck * c_up - rk2 * sk * s_up) / gap(k + 1, Branch::minus, ek);
        if (k >= 1) {
            const double s_dn = std::sin(th(k - 1)), c_dn = std::cos(th(k - 1));
            pdm += sq(rk * s_dn * ck + rk1 * c_dn * sk) / gap(k - 1, Branch::plus, ek);
            pdm += sq(rk * c_dn * ck - rk1 * s_dn * sk) / gap(k - 1, Branch::minus, ek);
        }
        if (k == 0)
            pdm += sq(rk1 * sk) / checked(ek + h0, p, "0- vs g0");
        const double s2 = std::sin(th(k + 2)), c2 = std::cos(th(k + 2));
        crt += (k + 2) * sk * sk *
               (s2 * s2 / gap(k + 2, Branch::plus, ek) +
                c2 * c2 / gap(k + 2, Branch::minus, ek));
        if (k >= 2) {
            const double s2d = std::sin(th(k - 2)), c2d = std::cos(th(k - 2));
            crt += k * ck * ck *
                   (c2d * c2d / gap(k - 2, Branch::plus, ek) +
                    s2d * s2d / gap(k - 2, Branch::minus, ek));
        }
        if (k == 1)
            crt += sq(rk * ck) / checked(ek + h0, p, "1- vs g0");
    }
    return {l2 * p.alpha * p.alpha * pdm, l2 * crt};
}

EnergyBreakdown energy_breakdown(const LevelLabel& label, const SystemParams& p)
{
    EnergyBreakdown out;
    out.label = label;
    out.e0 = unperturbed_energy(label, p);
    out.e1 = 0.0;
    const auto [pdm, crt] = label.is_ground()
                                ? e2_ground(p)
                                : e2_excited(label.n(), label.branch(), p);
    out.e2_pdm = pdm;
    out.e2_crt = crt;
    return out;
}

double dsp_energy(const LevelLabel& label, const SystemParams& p)
{
    return energy_breakdown(label, p).total();
}

RsResult generic_rs(const LevelLabel& label, const SystemParams& p, int order,
                    int n_cut)
{
    p.validate();
    if (order < 0 || order > 2)
        throw std::invalid_argument("generic_rs: order must be 0, 1 or 2");
    const int idx = label.is_ground() ? 0 : label.n();
    if (n_cut < 0)
        n_cut = idx + 3;
    if (n_cut < idx + 3)
        throw std::invalid_argument("generic_rs: n_cut must be >= label index + 3");

    RsResult out;
    out.e0 = unperturbed_energy(label, p);
    out.psi1.label = out.psi2.label = label;
    out.psi1.order = 1;
    out.psi2.order = 2;
    if (order == 0)
        return out;

    const auto labels = labels_up_to(n_cut);
    out.e1 = vmat(label, label, p); // vanishing diagonal of V

    struct C1 {
        LevelLabel target = LevelLabel::ground();
        double pdm = 0.0;
        double crt = 0.0;
        double total() const { return pdm + crt; }
    };
    std::vector<C1> c1;
    for (const auto& m : labels) {
        if (m == label)
            continue;
        const auto [vp, vc] = vmat_split(m, label, p);
        if (vp == 0.0 && vc == 0.0)
            continue;
        const double den = unperturbed_energy(label, p) - unperturbed_energy(m, p);
        checked(den, p, label.str() + " vs " + m.str());
        c1.push_back({m, vp / den, vc / den});
        out.e2 += (vp + vc) * (vp + vc) / den;
        if (vp != 0.0)
            out.psi1.terms.push_back({m, Channel::pdm, vp / den});
        if (vc != 0.0)
            out.psi1.terms.push_back({m, Channel::crt, vc / den});
    }
    if (order == 1)
        return out;

    // Second order with intermediate normalization: off-label coefficients
    // from V * c1 (V_ll = 0), plus the -1/2 sum |c1|^2 back-action on the
    // unperturbed label. Channel tags follow the product of the two factors.
    for (const auto& m : labels) {
        if (m == label)
            continue;
        double s_pdm = 0.0, s_crt = 0.0, s_mix = 0.0;
        for (const auto& c : c1) {
            const auto [vp, vc] = vmat_split(m, c.target, p);
            s_pdm += vp * c.pdm;
            s_crt += vc * c.crt;
            s_mix += vp * c.crt + vc * c.pdm;
        }
        if (s_pdm == 0.0 && s_crt == 0.0 && s_mix == 0.0)
            continue;
        const double den = checked(
            unperturbed_energy(label, p) - unperturbed_energy(m, p), p,
            label.str() + " vs " + m.str());
        if (s_pdm != 0.0)
            out.psi2.terms.push_back({m, Channel::pdm, s_pdm / den});
        if (s_crt != 0.0)
            out.psi2.terms.push_back({m, Channel::crt, s_crt / den});
        if (s_mix != 0.0)
            out.psi2.terms.push_back({m, Channel::pdm_crt, s_mix / den});
    }
    double back_pdm = 0.0, back_crt = 0.0, back_mix = 0.0;
    for (const auto& c : c1) {
        back_pdm += c.pdm * c.pdm;
        back_crt += c.crt * c.crt;
        back_mix += 2.0 * c.pdm * c.crt;
    }
    if (back_pdm != 0.0)
        out.psi2.terms.push_back({label, Channel::pdm, -0.5 * back_pdm});
    if (back_crt != 0.0)
        out.psi2.terms.push_back({label, Channel::crt, -0.5 * back_crt});
    if (back_mix != 0.0)
        out.psi2.terms.push_back({label, Channel::pdm_crt, -0.5 * back_mix});
    return out;
}

StateExpansion psi_ground(const SystemParams& p, int order)
{
    p.validate();
    if (order < 1 || order > 2)
        throw std::invalid_argument("psi_ground: order must be 1 or 2");
    const double lam = p.lambda;
    const double al = p.alpha;
    auto th = [&](int n) { return mixing_angle(n, p); };
    auto D = [&](int n, Branch b) {
        const auto lbl = LevelLabel::dressed(n, b);
        return checked(0.5 * p.omega_0 + unperturbed_energy(lbl, p), p,
                       "g0 vs " + lbl.str());
    };
    auto dr = [](int n, Branch b) { return LevelLabel::dressed(n, b); };
    const double s0 = std::sin(th(0)), c0 = std::cos(th(0));
    const double s1 = std::sin(th(1)), c1 = std::cos(th(1));

    StateExpansion out;
    out.label = LevelLabel::ground();
    out.order = order;
    out.terms = {
        {dr(0, Branch::plus), Channel::pdm, -lam * al * c0 / D(0, Branch::plus)},
        {dr(0, Branch::minus), Channel::pdm, lam * al * s0 / D(0, Branch::minus)},
        {dr(1, Branch::plus), Channel::crt, lam * s1 / D(1, Branch::plus)},
        {dr(1, Branch::minus), Channel::crt, lam * c1 / D(1, Branch::minus)},
    };
    if (order == 1)
        return out;

    const double l2 = lam * lam;
    const double s2 = std::sin(th(2)), c2 = std::cos(th(2));
    const double s3 = std::sin(th(3)), c3 = std::cos(th(3));
    const double d0p = D(0, Branch::plus), d0m = D(0, Branch::minus);
    const double d1p = D(1, Branch::plus), d1m = D(1, Branch::minus);
    const double d2p = D(2, Branch::plus), d2m = D(2, Branch::minus);
    const double d3p = D(3, Branch::plus), d3m = D(3, Branch::minus);
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);

    // alpha^2 channel
    out.terms.push_back({dr(1, Branch::plus), Channel::pdm,
                         -l2 * al * al / d1p *
                             (c0 * (s0 * s1 - r2 * c0 * c1) / d0p -
                              s0 * (c0 * s1 + r2 * s0 * c1) / d0m)});
    out.terms.push_back({dr(1, Branch::minus), Channel::pdm,
                         -l2 * al * al / d1m *
                             (c0 * (s0 * c1 + r2 * c0 * s1) / d0p -
                              s0 * (c0 * c1 - r2 * s0 * s1) / d0m)});
    out.terms.push_back({LevelLabel::ground(), Channel::pdm,
                         -l2 * al * al * 0.5 * (sq(c0 / d0p) + sq(s0 / d0m))});

    // CRT^2 channel
    const double crt_pref = -r3 * s1 * c1 * (1.0 / d1p - 1.0 / d1m);
    out.terms.push_back({dr(3, Branch::plus), Channel::crt, -l2 * crt_pref * s3 / d3p});
    out.terms.push_back({dr(3, Branch::minus), Channel::crt, -l2 * crt_pref * c3 / d3m});
    out.terms.push_back({LevelLabel::ground(), Channel::crt,
                         -l2 * 0.5 * (sq(s1 / d1p) + sq(c1 / d1m))});

    // mixed alpha*CRT channel
    out.terms.push_back({dr(0, Branch::plus), Channel::pdm_crt,
                         -l2 * al *
                             (-(s1 * (s1 * s0 - r2 * c1 * c0) / d1p +
                                c1 * (c1 * s0 + r2 * s1 * c0) / d1m) /
                              d0p)});
    out.terms.push_back({dr(0, Branch::minus), Channel::pdm_crt,
                         -l2 * al *
                             (-(s1 * (s1 * c0 + r2 * c1 * s0) / d1p +
                                c1 * (c1 * c0 - r2 * s1 * s0) / d1m) /
                              d0m)});
    out.terms.push_back({dr(2, Branch::plus), Channel::pdm_crt,
                         -l2 * al / d2p *
                             (r2 * s2 * (c0 * c0 / d0p + s0 * s0 / d0m) -
                              (s1 * (r2 * s1 * s2 - r3 * c1 * c2) / d1p +
                               c1 * (r2 * c1 * s2 + r3 * s1 * c2) / d1m))});
    out.terms.push_back({dr(2, Branch::minus), Channel::pdm_crt,
                         -l2 * al / d2m *
                             (r2 * c2 * (c0 * c0 / d0p + s0 * s0 / d0m) -
                              (s1 * (r2 * s1 * c2 + r3 * c1 * s2) / d1p +
                               c1 * (r2 * c1 * c2 - r3 * s1 * s2) / d1m))});
    return out;
}

StateExpansion psi1_excited(int k, Branch branch, const SystemParams& p)
{
    p.validate();
    if (k < 0)
        throw std::invalid_argument("psi1_excited: k must be >= 0");
    const double lam = p.lambda;
    const double al = p.alpha;
    auto th = [&](int n) { return mixing_angle(n, p); };
    auto ep = [&](int n, Branch b) {
        return unperturbed_energy(LevelLabel::dressed(n, b), p);
    };
    const LevelLabel self = LevelLabel::dressed(k, branch);
    const double ek = unperturbed_energy(self, p);
    auto gap = [&](int m, Branch b) {
        return checked(ek - ep(m, b), p,
                       self.str() + " vs " + LevelLabel::dressed(m, b).str());
    };
    auto kd = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    const double sk = std::sin(th(k)), ck = std::cos(th(k));
    const double rk = std::sqrt(double(k));
    const double rk1 = std::sqrt(double(k + 1));
    const double rk2 = std::sqrt(double(k + 2));

    StateExpansion out;
    out.label = self;
    out.order = 1;
    // The photon-number inner products collapse each sum to at most two m
    // values; looping with Kronecker factors keeps the k = 0, 1 boundary
    // handling automatic (out-of-range m never enters the loop).
    for (int m = 0; m <= k + 3; ++m) {
        const double sm = std::sin(th(m)), cm = std::cos(th(m));
        const double pdm_up = rk1 * kd(m, k + 1) + rk * kd(m, k - 1);
        const double pdm_dn = rk2 * kd(m + 1, k + 2) + rk1 * kd(m + 1, k);
        if (branch == Branch::plus) {
            if (m != k) {
                const double num = sm * sk * pdm_up - cm * ck * pdm_dn;
                if (num != 0.0)
                    out.terms.push_back({LevelLabel::dressed(m, Branch::plus),
                                         Channel::pdm,
                                         -lam * al * num / gap(m, Branch::plus)});
                const double numc =
                    rk2 * sm * ck * kd(m, k + 2) + rk * cm * sk * kd(m + 1, k - 1);
                if (numc != 0.0)
                    out.terms.push_back({LevelLabel::dressed(m, Branch::plus),
                                         Channel::crt,
                                         -lam * numc / gap(m, Branch::plus)});
            }
            const double num = cm * sk * pdm_up + sm * ck * pdm_dn;
            if (num != 0.0)
                out.terms.push_back({LevelLabel::dressed(m, Branch::minus),
                                     Channel::pdm,
                                     -lam * al * num / gap(m, Branch::minus)});
            const double numc =
                rk2 * cm * ck * kd(m, k + 2) - rk * sm * sk * kd(m + 1, k - 1);
            if (numc != 0.0)
                out.terms.push_back({LevelLabel::dressed(m, Branch::minus),
                                     Channel::crt,
                                     -lam * numc / gap(m, Branch::minus)});
        } else {
            const double num = sm * ck * pdm_up + cm * sk * pdm_dn;
            if (num != 0.0)
                out.terms.push_back({LevelLabel::dressed(m, Branch::plus),
                                     Channel::pdm,
                                     -lam * al * num / gap(m, Branch::plus)});
            const double numc =
                -rk2 * sm * sk * kd(m, k + 2) + rk * cm * ck * kd(m + 1, k - 1);
            if (numc != 0.0)
                out.terms.push_back({LevelLabel::dressed(m, Branch::plus),
                                     Channel::crt,
                                     -lam * numc / gap(m, Branch::plus)});
            if (m != k) {
                const double num2 = cm * ck * pdm_up - sm * sk * pdm_dn;
                if (num2 != 0.0)
                    out.terms.push_back({LevelLabel::dressed(m, Branch::minus),
                                         Channel::pdm,
                                         -lam * al * num2 / gap(m, Branch::minus)});
                const double numc2 =
                    rk2 * cm * sk * kd(m, k + 2) + rk * sm * ck * kd(m + 1, k - 1);
                if (numc2 != 0.0)
                    out.terms.push_back({LevelLabel::dressed(m, Branch::minus),
                                         Channel::crt,
                                         lam * numc2 / gap(m, Branch::minus)});
            }
        }
    }
    // Ground coupling, carried entirely by the <0|k> / <0|k-1> factors.
    const double dg = checked(ek + 0.5 * p.omega_0, p, self.str() + " vs g0");
    if (branch == Branch::plus) {
        if (k == 0)
            out.terms.push_back({LevelLabel::ground(), Channel::pdm, lam * al * rk1 * ck / dg});
        if (k == 1)
            out.terms.push_back({LevelLabel::ground(), Channel::crt, -lam * rk * sk / dg});
    } else {
        if (k == 0)
            out.terms.push_back({LevelLabel::ground(), Channel::pdm, -lam * al * rk1 * sk / dg});
        if (k == 1)
            out.terms.push_back({LevelLabel::ground(), Channel::crt, -lam * rk * ck / dg});
    }
    return out;
}

StateExpansion corrected_state(const LevelLabel& label, const SystemParams& p,
                               int order)
{
    StateExpansion zeroth;
    zeroth.label = label;
    zeroth.order = 0;
    zeroth.terms = {{label, Channel::rwa, 1.0}};
    if (order == 0)
        return zeroth;
    const RsResult rs = generic_rs(label, p, order);
    std::vector<const StateExpansion*> parts{&rs.psi1};
    if (order >= 2)
        parts.push_back(&rs.psi2);
    return combine(zeroth, parts);
}

ValidityReport validity_metrics(const SystemParams& p, int k_max)
{
    p.validate();
    if (p.lambda <= 0.0)
        throw DegenerateCouplingError("validity_metrics: requires lambda > 0");
    ValidityReport rep;
    const auto labels = labels_up_to(k_max);
    for (const auto& a : labels) {
        for (const auto& b : labels) {
            if (a == b)
                continue;
            const double v = vmat(a, b, p);
            if (v == 0.0)
                continue;
            const double gap = unperturbed_energy(a, p) - unperturbed_energy(b, p);
            if (std::abs(gap) < degeneracy_threshold(p)) {
                rep.max_ratio = std::numeric_limits<double>::infinity();
                continue;
            }
            rep.max_ratio = std::max(rep.max_ratio, std::abs(v / gap));
        }
    }
    const double f = p.f();
    rep.alpha_bound = 2.0 / ((2.0 + std::sqrt(3.0)) * f) - 2.0;
    rep.f_ok = f < 0.4;
    rep.alpha_ok = std::abs(p.alpha) < rep.alpha_bound;
    return rep;
}

} // namespace pmqed
