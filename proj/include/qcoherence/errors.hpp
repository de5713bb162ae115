#pragma once

#include <stdexcept>

namespace qcoh {

// Leading cubic coefficient is zero; root finding is not defined.
class DegenerateCubic : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Quadrature ran out of its evaluation budget above the requested tolerance.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// coth evaluated at its pole.
class PoleAtZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Potential parameters do not produce two proper minima separated by a barrier.
class NotBistable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Occupation concentrated so that the spectral-temperature prefactor diverges.
class DegenerateDenominator : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Degree of coherence outside [0, 1].
class OutOfRange : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace qcoh
