#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace pmqed {

// Physical parameters of the two-level molecule + single cavity mode
// (hbar = 1). Any consistent energy unit works; cm^-1 inputs pass through
// unchanged. delta and f are always derived, never stored.
struct SystemParams {
    double omega_c = 1.0; // cavity frequency, > 0
    double omega_0 = 1.0; // molecular transition frequency, > 0
    double lambda = 0.0;  // coupling strength, >= 0
    double alpha = 0.0;   // normalized permanent dipole difference

    double delta() const { return omega_0 - omega_c; }
    double f() const { return lambda / omega_c; }

    void validate() const
    {
        if (!(omega_c > 0.0))
            throw std::invalid_argument("SystemParams: omega_c must be > 0");
        if (!(omega_0 > 0.0))
            throw std::invalid_argument("SystemParams: omega_0 must be > 0");
        if (!(lambda >= 0.0))
            throw std::invalid_argument("SystemParams: lambda must be >= 0");
    }
};

inline SystemParams make_params(double omega_c, double omega_0, double lambda,
                                double alpha)
{
    SystemParams p{omega_c, omega_0, lambda, alpha};
    p.validate();
    return p;
}

// Resonant convenience constructor: omega_c = omega_0 = 1, lambda = f.
inline SystemParams resonant_params(double f, double alpha)
{
    return make_params(1.0, 1.0, f, alpha);
}

enum class Electronic { g, e };

// Bare product state |g/e, n>. The truncated basis of dimension 2(n_max+1)
// is interleaved: index(g,n) = 2n, index(e,n) = 2n+1.
struct BareState {
    Electronic electronic = Electronic::g;
    int photons = 0;

    friend auto operator<=>(const BareState&, const BareState&) = default;
};

inline int bare_dim(int n_max) { return 2 * (n_max + 1); }

inline int bare_index(const BareState& s)
{
    if (s.photons < 0)
        throw std::invalid_argument("BareState: photons must be >= 0");
    return 2 * s.photons + (s.electronic == Electronic::e ? 1 : 0);
}

inline BareState bare_from_index(int i)
{
    if (i < 0)
        throw std::invalid_argument("bare_from_index: negative index");
    return {i % 2 == 0 ? Electronic::g : Electronic::e, i / 2};
}

inline std::string to_string(const BareState& s)
{
    return std::string(s.electronic == Electronic::g ? "g" : "e") +
           std::to_string(s.photons);
}

enum class Branch { plus, minus };

inline int branch_sign(Branch b) { return b == Branch::plus ? +1 : -1; }

// Identifies an unperturbed level: either the isolated |g,0> or a dressed
// pair member (n >= 0, branch +/-).
class LevelLabel {
public:
    static LevelLabel ground() { return LevelLabel(true, 0, Branch::plus); }
    static LevelLabel dressed(int n, Branch b)
    {
        if (n < 0)
            throw std::invalid_argument("LevelLabel: n must be >= 0");
        return LevelLabel(false, n, b);
    }

    bool is_ground() const { return ground_; }
    int n() const
    {
        if (ground_)
            throw std::logic_error("LevelLabel: ground has no dressed index");
        return n_;
    }
    Branch branch() const
    {
        if (ground_)
            throw std::logic_error("LevelLabel: ground has no branch");
        return branch_;
    }

    std::string str() const
    {
        if (ground_)
            return "g0";
        return std::to_string(n_) + (branch_ == Branch::plus ? "+" : "-");
    }

    friend auto operator<=>(const LevelLabel&, const LevelLabel&) = default;

private:
    LevelLabel(bool ground, int n, Branch b) : ground_(ground), n_(n), branch_(b) {}

    bool ground_;
    int n_;
    Branch branch_;
};

} // namespace pmqed
