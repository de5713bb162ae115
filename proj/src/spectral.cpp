#include "qcoherence/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qcoherence/errors.hpp"
#include "qcoherence/numerics.hpp"

namespace qcoh {

SpectrumOccupation::SpectrumOccupation(std::vector<Level> levels) : levels_(std::move(levels)) {
    if (levels_.size() < 2) throw std::invalid_argument("SpectrumOccupation: need at least two levels");
    double total = 0.0;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const Level& lv = levels_[i];
        if (lv.degeneracy < 1) throw std::invalid_argument("SpectrumOccupation: degeneracy must be >= 1");
        if (!(lv.probability > 0.0)) {
            throw std::invalid_argument("SpectrumOccupation: probabilities must be strictly positive");
        }
        if (i > 0 && !(lv.energy > levels_[i - 1].energy)) {
            throw std::invalid_argument("SpectrumOccupation: energies must be strictly increasing");
        }
        total += lv.probability;
    }
    if (std::fabs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("SpectrumOccupation: probabilities must sum to 1");
    }
}

double inverse_spectral_temperature(const SpectrumOccupation& s) {
    const auto& lv = s.levels();
    const double edge = 0.5 * (lv.front().probability + lv.back().probability);
    if (edge == 1.0) throw DegenerateDenominator("inverse_spectral_temperature: occupation concentrated on the edge levels");

    double sum = 0.0;
    for (std::size_t i = 1; i < lv.size(); ++i) {
        const double mean_p = 0.5 * (lv[i].probability + lv[i - 1].probability);
        const double log_term = std::log(lv[i].probability / lv[i - 1].probability) -
                                std::log(static_cast<double>(lv[i].degeneracy) / lv[i - 1].degeneracy);
        sum += mean_p * log_term / (lv[i].energy - lv[i - 1].energy);
    }
    return -sum / (1.0 - edge);
}

double inverse_spectral_temperature_two_state(const TwoStateOccupation& t) {
    if (!(t.p0 > 0.0) || !(t.p1 > 0.0) || t.p0 > 1.0 || t.p1 > 1.0) {
        throw std::invalid_argument("TwoStateOccupation: occupations must lie in (0, 1]");
    }
    if (!(t.e1 > t.e0)) throw std::invalid_argument("TwoStateOccupation: e1 must exceed e0");
    const double mean_p = 0.5 * (t.p0 + t.p1);
    if (mean_p == 1.0) throw DegenerateDenominator("inverse_spectral_temperature_two_state: (p0 + p1)/2 == 1");
    return -(mean_p / (1.0 - mean_p)) * std::log(t.p0 / t.p1) / (t.e0 - t.e1);
}

double gated_inverse_temperature(double gamma, double tau_m, double delta_e) {
    if (!(gamma > 0.0) || !(tau_m > 0.0) || !(delta_e > 0.0)) {
        throw std::invalid_argument("gated_inverse_temperature: all arguments must be positive");
    }
    const double c = coth_stable(0.5 * gamma * tau_m);
    return c * coth_stable(0.5 * c) / delta_e;
}

double temperature_ratio(double theta, RatioConvention convention) {
    if (!(theta > 0.0)) throw std::invalid_argument("temperature_ratio: theta must be positive");
    const double lead = convention == RatioConvention::printed ? 2.0 : 0.5;
    return lead * std::tanh(0.5 * theta) * std::tanh(0.5 * coth_stable(0.5 * theta));
}

}  // namespace qcoh
