#include "qcoherence/potential.hpp"

#include <cmath>
#include <stdexcept>

#include "qcoherence/errors.hpp"
#include "qcoherence/numerics.hpp"

namespace qcoh {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

void check_scales(const DoubleWell& well) {
    if (!(well.m > 0.0) || !(well.omega > 0.0) || !(well.a > 0.0)) {
        throw std::invalid_argument("DoubleWell: m, omega and a must be positive");
    }
}

}  // namespace

double evaluate(const DoubleWell& well, double x) {
    check_scales(well);
    const double xi = x / well.a;
    return 0.5 * well.m * well.omega * well.omega * x * x * ((xi - well.A) * xi + well.B);
}

WellGeometry analyze(const DoubleWell& well) {
    check_scales(well);
    if (!(well.A > 0.0) || !(well.B > 0.0) || !(9.0 * well.A * well.A > 32.0 * well.B)) {
        throw NotBistable("analyze: stationary equation has no two distinct positive roots");
    }

    // Stationary points of the dimensionless profile: xi (4 xi^2 - 3 A xi + 2 B) = 0.
    const auto roots = cubic_real_roots(Cubic{4.0, -3.0 * well.A, 2.0 * well.B, 0.0});
    if (roots.size() != 3) {
        throw NotBistable("analyze: expected three distinct stationary points");
    }

    // Curvature of the profile: 12 xi^2 - 6 A xi + 2 B; minima outside, maximum between.
    const auto curvature = [&well](double xi) { return (12.0 * xi - 6.0 * well.A) * xi + 2.0 * well.B; };
    if (!(curvature(roots[0]) > 0.0) || !(curvature(roots[1]) < 0.0) || !(curvature(roots[2]) > 0.0)) {
        throw NotBistable("analyze: stationary points do not alternate min/max/min");
    }

    const double v_left = evaluate(well, roots[0] * well.a);
    const double v_right = evaluate(well, roots[2] * well.a);
    const bool left_is_upper = v_left >= v_right;

    WellGeometry g;
    g.xi_upper = left_is_upper ? roots[0] : roots[2];
    g.xi_lower = left_is_upper ? roots[2] : roots[0];
    g.xi_barrier = roots[1];
    g.epsilon0 = left_is_upper ? v_left - v_right : v_right - v_left;
    g.w = (roots[2] - roots[0]) * well.a;
    g.nu = std::sqrt(well.B) * well.m * well.omega * well.a * well.a;
    g.barrier_height_upper = evaluate(well, roots[1] * well.a) - (left_is_upper ? v_left : v_right);
    return g;
}

double omega_from_epsilon0(double m, double epsilon0, double w) {
    if (!(m > 0.0) || !(epsilon0 > 0.0) || !(w > 0.0)) {
        throw std::invalid_argument("omega_from_epsilon0: all arguments must be positive");
    }
    return (2.0 / w) * std::sqrt(2.0 * epsilon0 / (15.0 * m));
}

double ground_state(double nu, double xi) {
    if (!(nu > 0.0)) throw std::invalid_argument("ground_state: nu must be positive");
    return std::pow(nu / kPi, 0.25) * std::exp(-0.5 * nu * xi * xi);
}

double overlap(double nu, double xi1) {
    if (!(nu > 0.0)) throw std::invalid_argument("overlap: nu must be positive");
    return std::exp(-0.25 * nu * xi1 * xi1);
}

}  // namespace qcoh
