#pragma once

#include <vector>

namespace qcoh {

struct Level {
    double energy = 0.0;
    int degeneracy = 1;        // phi >= 1
    double probability = 0.0;  // strictly positive
};

/// Energy spectrum with occupation probabilities. Validated on construction:
/// strictly increasing energies, at least two levels, every probability
/// positive (zero-probability levels must be removed by the caller, not
/// floored), and probabilities summing to 1 within 1e-9.
class SpectrumOccupation {
public:
    explicit SpectrumOccupation(std::vector<Level> levels);

    const std::vector<Level>& levels() const { return levels_; }

private:
    std::vector<Level> levels_;
};

/// Ground-state occupations of the lower (p0) and higher (p1) well. The pair is
/// not required to be normalized; the gated decay model deliberately leaves
/// p0 + p1 > 1.
struct TwoStateOccupation {
    double p0 = 0.0;
    double p1 = 0.0;
    double e0 = 0.0;
    double e1 = 0.0;  // e1 > e0
};

/// Inverse spectral temperature 1/(k_B T_spec) of an N-level spectrum.
/// Reproduces beta exactly for Boltzmann occupations p_i ~ phi_i exp(-beta E_i).
/// Throws DegenerateDenominator when (p_first + p_last)/2 == 1.
double inverse_spectral_temperature(const SpectrumOccupation& s);

/// Two-state reduction of the spectral temperature.
double inverse_spectral_temperature_two_state(const TwoStateOccupation& t);

/// Spectral temperature of the gated decay model: the higher-well occupation
/// decays over one dwell time while the lower state keeps p0 = 1. Returns
/// (1/delta_e) c coth(c/2) with c = coth(gamma tau_m / 2).
double gated_inverse_temperature(double gamma, double tau_m, double delta_e);

/// Which closed form of the spectral-to-kinetic temperature ratio to use:
/// `printed` is the published form 2 tanh(theta/2) tanh((1/2) coth(theta/2));
/// `derived` is the chain through the gated model with delta_e = k_B T_k / 2,
/// which carries 1/2 instead of the leading 2.
enum class RatioConvention { printed, derived };

/// T_spec / T_k as a function of theta = gamma tau_m.
double temperature_ratio(double theta, RatioConvention convention = RatioConvention::printed);

}  // namespace qcoh
