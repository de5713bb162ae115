#pragma once

#include "qcoherence/timescales.hpp"

namespace qcoh {

/// First-order degree of coherence assembled from its ingredients: the
/// correlation decay exp(-gamma tau_d) over one dwell time times the ground
/// state overlap exp(-nu xi1^2 / 4). Always in (0, 1).
double g1_first_principles(double nu, double xi1, double gamma, double tau_m);

/// Published closed form exp(-q) exp(-coth(theta/2)).
double g1_printed(const DimensionlessControls& c);

/// Quasi-static closed form exp(-q).
double g1_quasi_static(double q);

/// Decoherence-to-dwell ratio implied by a degree of coherence: 4.5 / ln(1/g).
/// Returns 0 at g == 0 and +infinity at g == 1 (fully coherent marker, both
/// serialized as limits rather than raised). Throws OutOfRange outside [0, 1].
double ratio_from_coherence(double g);

/// Every derived coherence output for one (q, theta) operating point.
struct CoherenceReport {
    double g1_printed = 0.0;
    double g1_quasi_static = 0.0;
    double g1_first_principles = 0.0;
    double tau_ratio_printed = 0.0;
    double tau_ratio_from_g = 0.0;
    double q = 0.0;
    double theta = 0.0;
};

/// Overlap exponent of the harmonic ground states for the A = 14, B = 45
/// family, per unit of the coherence exponent q: nu xi1^2 / 4 = sqrt(3) q.
inline constexpr double kFamilyExponentRatio = 1.7320508075688772;

/// Report with the first-principles overlap reconstructed from the A = 14,
/// B = 45 family relations (overlap exponent sqrt(3) q).
CoherenceReport coherence_report(const DimensionlessControls& c);

/// Report with an explicitly known wavefunction width and displacement.
CoherenceReport coherence_report(const DimensionlessControls& c, double nu, double xi1);

}  // namespace qcoh
