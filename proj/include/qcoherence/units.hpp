#pragma once

#include "qcoherence/timescales.hpp"

namespace qcoh::units {

inline constexpr double kHbarSI = 1.054571817e-34;    // J s
inline constexpr double kBoltzmannSI = 1.380649e-23;  // J / K

// Core natural units keep seconds and meters as base scales and fix hbar = 1,
// so energies convert by hbar (J <-> 1/s) and masses likewise (kg <-> s/m^2).
// Rates, times and lengths pass through numerically.
inline double mass_to_natural(double kilograms) { return kilograms / kHbarSI; }
inline double mass_to_si(double natural) { return natural * kHbarSI; }
inline double energy_to_natural(double joules) { return joules / kHbarSI; }
inline double energy_to_si(double natural) { return natural * kHbarSI; }
inline double energy_to_kelvin(double natural) { return natural * kHbarSI / kBoltzmannSI; }

inline ChannelScenario scenario_to_natural(const ChannelScenario& si) {
    return ChannelScenario{mass_to_natural(si.m), si.gamma, si.tau_m,
                           energy_to_natural(si.epsilon0), si.w};
}

inline ChannelScenario scenario_to_si(const ChannelScenario& natural) {
    return ChannelScenario{mass_to_si(natural.m), natural.gamma, natural.tau_m,
                           energy_to_si(natural.epsilon0), natural.w};
}

}  // namespace qcoh::units
