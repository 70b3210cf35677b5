#pragma once

#include <stdexcept>
#include <string>

namespace pmqed {

// Dressed quantities are undefined at lambda = 0 (the mixing angle is 0/0).
class DegenerateCouplingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A perturbation denominator fell below threshold; the non-degenerate
// formulas are invalid at level crossings and we refuse rather than regularize.
class NearDegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Level matching between perturbative labels and exact eigenvectors failed
// (best overlap too small, i.e. outside the perturbative regime).
class AmbiguousMatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A requested state does not fit in the truncated basis.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pmqed
