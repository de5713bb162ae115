#pragma once

namespace qcoh {

/// Physical inputs in core units (hbar = k_B = 1): particle mass, relaxation
/// rate, gate open/close interval, asymmetry energy and well separation.
struct ChannelScenario {
    double m = 0.0;
    double gamma = 0.0;
    double tau_m = 0.0;
    double epsilon0 = 0.0;
    double w = 0.0;
};

/// The two dimensionless groups that control every ratio and coherence value:
/// q = (w/hbar) sqrt(m epsilon0 / 2) and theta = gamma tau_m.
struct DimensionlessControls {
    double q = 0.0;
    double theta = 0.0;
};

/// Throws std::invalid_argument unless every scenario field is positive.
DimensionlessControls controls_from_scenario(const ChannelScenario& s);

/// Decoherence time hbar^2 / (2 m gamma kT dx^2) with hbar = 1.
double decoherence_time(double m, double gamma, double kt, double dx);

/// Weak-value dwell time (1/gamma) coth(gamma tau_m / 2). Strictly decreasing
/// in tau_m, approaching 1/gamma from above.
double dwell_time(double gamma, double tau_m);

/// Published decoherence-to-dwell ratio (2/q) coth((1/2) coth(theta/2)).
double ratio_dec_dwell(const DimensionlessControls& c);

/// Coefficient convention for the quasi-static (theta -> infinity) ratio:
/// `coefficient_4_5` uses the published 4.5/q ("paper_4_5" on the CLI);
/// `exact_limit` uses the true plateau 2 coth(1/2) / q of ratio_dec_dwell.
enum class QuasiStaticConstant { coefficient_4_5, exact_limit };

double quasi_static_ratio(const DimensionlessControls& c,
                          QuasiStaticConstant convention = QuasiStaticConstant::coefficient_4_5);

/// Oracle composition of the decoherence-to-dwell ratio from its ingredients:
/// decoherence_time with kT from the gated spectral temperature at
/// delta_e = epsilon0 and dx = w, divided by dwell_time. Closed form
/// coth((1/2) coth(theta/2)) / (2 m epsilon0 w^2); differs from the published
/// ratio_dec_dwell by a theta-independent factor reported by the audit.
double ratio_first_principles(const ChannelScenario& s);

}  // namespace qcoh
