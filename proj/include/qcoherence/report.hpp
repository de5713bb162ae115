#pragma once

#include <string>

#include "qcoherence/audit.hpp"
#include "qcoherence/coherence.hpp"
#include "qcoherence/scenario.hpp"

namespace qcoh {

// Everything the `report` command prints for one scenario.  `echo` repeats
// the inputs in the unit system they arrived in.  Times are in seconds in
// both systems, so tau_dwell needs no conversion.
struct ScenarioReport {
    ChannelScenario echo;
    bool si = false;
    Conventions conventions;
    CoherenceReport core;
    double tau_dwell = 0.0;
    double tau_ratio_quasi_static = 0.0;
    double temperature_ratio = 0.0;
    bool sustainable = false;
};

ScenarioReport build_scenario_report(const ScenarioInput& input);

// Serializers.  JSON output is pretty-printed with a trailing newline and all
// numbers rounded to 12 significant digits; csv/table rendering uses the same
// digits so every format is deterministic byte-for-byte.
std::string report_to_json(const ScenarioReport& report);
std::string report_to_csv(const ScenarioReport& report);
std::string report_to_table(const ScenarioReport& report);

std::string audit_to_json(const AuditReport& report);
std::string audit_to_csv(const AuditReport& report);
std::string audit_to_table(const AuditReport& report);

}  // namespace qcoh
