#pragma once

namespace qcoh {

/// Bistable quartic potential V(x) = (1/2) m omega^2 x^2 [ (x/a)^2 - A (x/a) + B ].
/// Core units fix hbar = k_B = 1. A and B are dimensionless shape constants;
/// the asymmetric well of interest has A = 14, B = 45.
struct DoubleWell {
    double m = 1.0;
    double omega = 1.0;
    double a = 1.0;
    double A = 14.0;
    double B = 45.0;
};

/// Geometry of the two wells. Positions are in units of a; energies in core units.
/// xi_upper / xi_lower are assigned by comparing V at the two minima, so
/// epsilon0 >= 0 always; the barrier lies strictly between them.
struct WellGeometry {
    double xi_upper = 0.0;    // position of the higher-energy minimum, x0/a
    double xi_barrier = 0.0;  // position of the local maximum between the wells
    double xi_lower = 0.0;    // position of the lower minimum, x2/a
    double epsilon0 = 0.0;    // V(x_upper) - V(x_lower)
    double w = 0.0;           // separation between the minima, |xi_lower - xi_upper| * a
    double nu = 0.0;          // Gaussian width of the harmonic ground state, sqrt(B) m omega a^2
    double barrier_height_upper = 0.0;  // V(barrier) - V(upper minimum)
};

/// V(x). Throws std::invalid_argument unless m, omega, a > 0.
double evaluate(const DoubleWell& well, double x);

/// Locate and classify the stationary points, assign upper/lower wells by energy,
/// and derive epsilon0, w and nu. The dimensionless stationary equation is
/// xi (4 xi^2 - 3 A xi + 2 B) = 0. Throws NotBistable unless A, B > 0 and
/// 9 A^2 > 32 B with the three stationary points alternating min/max/min.
WellGeometry analyze(const DoubleWell& well);

/// Angular frequency back-derived from the asymmetry energy and well separation:
/// omega = (2/w) sqrt(2 epsilon0 / (15 m)). Valid for the A = 14, B = 45 family,
/// where it inverts analyze() exactly. All arguments must be positive.
double omega_from_epsilon0(double m, double epsilon0, double w);

/// Unit-normalized harmonic ground state (nu/pi)^(1/4) exp(-nu xi^2 / 2).
double ground_state(double nu, double xi);

/// Overlap of two such ground states displaced by xi1: exp(-nu xi1^2 / 4).
double overlap(double nu, double xi1);

}  // namespace qcoh
