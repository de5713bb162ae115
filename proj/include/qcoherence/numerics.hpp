#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace qcoh {

/// Real cubic c3*x^3 + c2*x^2 + c1*x + c0.
struct Cubic {
    double c3 = 0.0;
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;

    double operator()(double x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
    double derivative(double x) const { return (3.0 * c3 * x + 2.0 * c2) * x + c1; }
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

/// All real roots in ascending order, repeated with their multiplicity (1 or 3 entries).
/// Closed-form solution with one Newton polish step per root.
/// Throws DegenerateCubic when c3 == 0.
std::vector<double> cubic_real_roots(const Cubic& c);

/// Integral of f over the whole real line. The line is mapped to (-1, 1) with the
/// rational transform x = t/(1-t^2) and integrated by globally adaptive
/// Gauss-Kronrod panels. Intended for integrands with Gaussian-type decay; the
/// caller is responsible for decay at infinity.
/// Throws NonConvergence when the evaluation budget (1e6 points) runs out above
/// `tolerance` (absolute).
QuadratureResult integrate_line(const std::function<double(double)>& f, double tolerance = 1e-10);

/// coth(x) without overflow for |x| up to at least 1e8; returns sign(x) exactly
/// once |x| >= 20, where coth differs from 1 by less than an ulp.
/// Throws PoleAtZero when x == 0.
double coth_stable(double x);

}  // namespace qcoh
