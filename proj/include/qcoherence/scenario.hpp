#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "qcoherence/potential.hpp"
#include "qcoherence/spectral.hpp"
#include "qcoherence/timescales.hpp"

namespace qcoh {

struct Conventions {
    RatioConvention eq7 = RatioConvention::printed;
    QuasiStaticConstant constant = QuasiStaticConstant::coefficient_4_5;
};

// A parsed scenario file, already converted to the natural units the core
// works in.  `potential` is present exactly when the file supplied a well
// description instead of (epsilon0, w).
struct ScenarioInput {
    ChannelScenario scenario;
    std::optional<DoubleWell> potential;
    Conventions conventions;
    bool si = false;
};

// Parses and validates a scenario document.  Two shapes are accepted:
//
//   {"mass": m, "gamma": g, "tau_m": t, "epsilon0": e, "w": w}
//   {"gamma": g, "tau_m": t, "potential": {"m":, "omega":, "a":, "A":, "B":}}
//
// plus an optional "conventions" object {"eq7": .., "constant": ..} in either.
// Unknown keys anywhere are rejected, as is mixing the two shapes.  With
// `si` set, mass is read in kg, epsilon0 in J and omega in 1/s; times and
// lengths are seconds and meters in both systems.
// Throws std::invalid_argument on any schema violation.
ScenarioInput parse_scenario(const nlohmann::json& doc, bool si);

// Reads `path` and forwards to parse_scenario.
ScenarioInput load_scenario(const std::string& path, bool si);

RatioConvention ratio_convention_from_string(const std::string& name);
QuasiStaticConstant quasi_static_constant_from_string(const std::string& name);
std::string to_string(RatioConvention convention);
std::string to_string(QuasiStaticConstant constant);

}  // namespace qcoh
