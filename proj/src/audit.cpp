#include "qcoherence/audit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcoherence/coherence.hpp"
#include "qcoherence/potential.hpp"
#include "qcoherence/spectral.hpp"

namespace qcoh {

namespace {

AuditFactor summarize(const std::vector<double>& samples) {
    double sum = 0.0;
    double lo = samples.front();
    double hi = samples.front();
    for (double x : samples) {
        sum += x;
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    const double mean = sum / static_cast<double>(samples.size());
    AuditFactor f;
    f.value = mean;
    f.constancy_spread = mean == 0.0 ? hi - lo : (hi - lo) / std::fabs(mean);
    return f;
}

// Overlap exponent nu xi1^2 / 4 reconstructed through the A = 14, B = 45 family
// relations: a = 2w/15, omega from the asymmetry energy, nu = sqrt(45) m omega a^2,
// displacement xi1 = 15/2.
double family_overlap_exponent(const ChannelScenario& s) {
    const double a = 2.0 * s.w / 15.0;
    const double omega = omega_from_epsilon0(s.m, s.epsilon0, s.w);
    const double nu = std::sqrt(45.0) * s.m * omega * a * a;
    const double xi1 = 7.5;
    return 0.25 * nu * xi1 * xi1;
}

}  // namespace

AuditReport run_audit(const std::vector<double>& theta_grid,
                      const std::vector<ChannelScenario>& scenario_grid) {
    if (theta_grid.empty() || scenario_grid.empty()) {
        throw std::invalid_argument("run_audit: grids must be non-empty");
    }
    double theta_max = 0.0;
    for (double theta : theta_grid) {
        if (!(theta > 0.0)) throw std::invalid_argument("run_audit: theta values must be positive");
        theta_max = std::max(theta_max, theta);
    }
    // The quasi-static residual is defined at the theta -> infinity plateau;
    // evaluate it where coth(theta/2) has saturated in double precision.
    const double theta_qs = std::max(40.0, theta_max);

    std::vector<double> eq7, eq9, eq16, eq17;
    eq7.reserve(theta_grid.size() * scenario_grid.size());
    eq9.reserve(eq7.capacity());
    eq16.reserve(eq7.capacity());
    eq17.reserve(eq7.capacity());

    for (const ChannelScenario& s : scenario_grid) {
        const DimensionlessControls base = controls_from_scenario(s);
        for (double theta : theta_grid) {
            const DimensionlessControls c{base.q, theta};
            eq7.push_back(temperature_ratio(theta, RatioConvention::printed) /
                          temperature_ratio(theta, RatioConvention::derived));
            eq9.push_back(quasi_static_ratio(c, QuasiStaticConstant::coefficient_4_5) /
                          quasi_static_ratio(c, QuasiStaticConstant::exact_limit));
            eq16.push_back(family_overlap_exponent(s) / base.q);
            eq17.push_back(g1_printed({base.q, theta_qs}) / g1_quasi_static(base.q));
        }
    }

    AuditReport report;
    report.eq7_factor = summarize(eq7);
    report.eq9_constant_gap = summarize(eq9);
    report.eq16_exponent_factor = summarize(eq16);
    report.eq17_residual = summarize(eq17);
    return report;
}

}  // namespace qcoh
