#include "qcoherence/coherence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qcoherence/errors.hpp"
#include "qcoherence/numerics.hpp"
#include "qcoherence/potential.hpp"

namespace qcoh {

double g1_first_principles(double nu, double xi1, double gamma, double tau_m) {
    if (!(nu > 0.0) || !(gamma > 0.0) || !(tau_m > 0.0)) {
        throw std::invalid_argument("g1_first_principles: nu, gamma and tau_m must be positive");
    }
    const double decay = std::exp(-gamma * dwell_time(gamma, tau_m));
    return decay * overlap(nu, xi1);
}

double g1_printed(const DimensionlessControls& c) {
    if (!(c.q > 0.0) || !(c.theta > 0.0)) {
        throw std::invalid_argument("g1_printed: q and theta must be positive");
    }
    return std::exp(-c.q) * std::exp(-coth_stable(0.5 * c.theta));
}

double g1_quasi_static(double q) {
    if (!(q > 0.0)) throw std::invalid_argument("g1_quasi_static: q must be positive");
    return std::exp(-q);
}

double ratio_from_coherence(double g) {
    if (std::isnan(g) || g < 0.0 || g > 1.0) {
        throw OutOfRange("ratio_from_coherence: degree of coherence must lie in [0, 1]");
    }
    if (g == 0.0) return 0.0;
    if (g == 1.0) return std::numeric_limits<double>::infinity();
    return 4.5 / -std::log(g);
}

namespace {

CoherenceReport build_report(const DimensionlessControls& c, double overlap_factor) {
    CoherenceReport r;
    r.q = c.q;
    r.theta = c.theta;
    r.g1_printed = g1_printed(c);
    r.g1_quasi_static = g1_quasi_static(c.q);
    r.g1_first_principles = std::exp(-coth_stable(0.5 * c.theta)) * overlap_factor;
    r.tau_ratio_printed = ratio_dec_dwell(c);
    r.tau_ratio_from_g = ratio_from_coherence(r.g1_quasi_static);
    return r;
}

}  // namespace

CoherenceReport coherence_report(const DimensionlessControls& c) {
    if (!(c.q > 0.0) || !(c.theta > 0.0)) {
        throw std::invalid_argument("coherence_report: q and theta must be positive");
    }
    return build_report(c, std::exp(-kFamilyExponentRatio * c.q));
}

CoherenceReport coherence_report(const DimensionlessControls& c, double nu, double xi1) {
    if (!(c.q > 0.0) || !(c.theta > 0.0)) {
        throw std::invalid_argument("coherence_report: q and theta must be positive");
    }
    return build_report(c, overlap(nu, xi1));
}

}  // namespace qcoh
