#include "qcoherence/report.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "qcoherence/format.hpp"
#include "qcoherence/units.hpp"

namespace qcoh {

ScenarioReport build_scenario_report(const ScenarioInput& input) {
    ScenarioReport out;
    out.si = input.si;
    out.conventions = input.conventions;

    const DimensionlessControls controls = controls_from_scenario(input.scenario);
    if (input.potential) {
        const WellGeometry geom = analyze(*input.potential);
        const double xi1 = geom.w / input.potential->a;  // minima separation
        out.core = coherence_report(controls, geom.nu, xi1);
    } else {
        out.core = coherence_report(controls);
    }

    out.tau_dwell = dwell_time(input.scenario.gamma, input.scenario.tau_m);
    out.tau_ratio_quasi_static =
        quasi_static_ratio(controls, input.conventions.constant);
    out.temperature_ratio =
        temperature_ratio(controls.theta, input.conventions.eq7);
    out.sustainable = out.core.tau_ratio_printed > 1.0;
    out.echo = input.si ? units::scenario_to_si(input.scenario) : input.scenario;
    return out;
}

namespace {

using Rows = std::vector<std::pair<std::string, std::string>>;

Rows report_rows(const ScenarioReport& r) {
    return {
        {"Q", fmt12(r.core.q)},
        {"theta", fmt12(r.core.theta)},
        {"g1_printed", fmt12(r.core.g1_printed)},
        {"g1_quasi_static", fmt12(r.core.g1_quasi_static)},
        {"g1_first_principles", fmt12(r.core.g1_first_principles)},
        {"tau_dwell", fmt12(r.tau_dwell)},
        {"tau_ratio_printed", fmt12(r.core.tau_ratio_printed)},
        {"tau_ratio_from_g", fmt12(r.core.tau_ratio_from_g)},
        {"tau_ratio_quasi_static", fmt12(r.tau_ratio_quasi_static)},
        {"temperature_ratio", fmt12(r.temperature_ratio)},
        {"sustainable", r.sustainable ? "true" : "false"},
    };
}

nlohmann::ordered_json scenario_json(const ChannelScenario& s) {
    nlohmann::ordered_json j;
    j["mass"] = json12(s.m);
    j["gamma"] = json12(s.gamma);
    j["tau_m"] = json12(s.tau_m);
    j["epsilon0"] = json12(s.epsilon0);
    j["w"] = json12(s.w);
    return j;
}

}  // namespace

std::string report_to_json(const ScenarioReport& r) {
    nlohmann::ordered_json j;
    j["scenario"] = scenario_json(r.echo);
    j["units"] = r.si ? "si" : "natural";
    j["conventions"] = {{"eq7", to_string(r.conventions.eq7)},
                        {"constant", to_string(r.conventions.constant)}};
    j["Q"] = json12(r.core.q);
    j["theta"] = json12(r.core.theta);
    j["g1_printed"] = json12(r.core.g1_printed);
    j["g1_quasi_static"] = json12(r.core.g1_quasi_static);
    j["g1_first_principles"] = json12(r.core.g1_first_principles);
    j["tau_dwell"] = json12(r.tau_dwell);
    j["tau_ratio_printed"] = json12(r.core.tau_ratio_printed);
    j["tau_ratio_from_g"] = json12(r.core.tau_ratio_from_g);
    j["tau_ratio_quasi_static"] = json12(r.tau_ratio_quasi_static);
    j["temperature_ratio"] = json12(r.temperature_ratio);
    j["sustainable"] = r.sustainable;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const ScenarioReport& r) {
    std::ostringstream out;
    out << "key,value\n";
    for (const auto& [key, value] : report_rows(r)) out << key << ',' << value << '\n';
    return out.str();
}

std::string report_to_table(const ScenarioReport& r) {
    std::ostringstream out;
    out << "scenario (" << (r.si ? "si" : "natural") << " units): mass="
        << fmt12(r.echo.m) << " gamma=" << fmt12(r.echo.gamma)
        << " tau_m=" << fmt12(r.echo.tau_m) << " epsilon0=" << fmt12(r.echo.epsilon0)
        << " w=" << fmt12(r.echo.w) << '\n';
    out << "conventions: eq7=" << to_string(r.conventions.eq7)
        << " constant=" << to_string(r.conventions.constant) << '\n';
    for (const auto& [key, value] : report_rows(r)) {
        out << key;
        for (std::size_t pad = key.size(); pad < 24; ++pad) out << ' ';
        out << value << '\n';
    }
    return out.str();
}

namespace {

Rows audit_rows(const AuditReport& r) {
    return {
        {"eq7_factor", fmt12(r.eq7_factor.value)},
        {"eq9_constant_gap", fmt12(r.eq9_constant_gap.value)},
        {"eq16_exponent_factor", fmt12(r.eq16_exponent_factor.value)},
        {"eq17_residual", fmt12(r.eq17_residual.value)},
    };
}

Rows audit_spreads(const AuditReport& r) {
    return {
        {"eq7_factor", fmt12(r.eq7_factor.constancy_spread)},
        {"eq9_constant_gap", fmt12(r.eq9_constant_gap.constancy_spread)},
        {"eq16_exponent_factor", fmt12(r.eq16_exponent_factor.constancy_spread)},
        {"eq17_residual", fmt12(r.eq17_residual.constancy_spread)},
    };
}

}  // namespace

std::string audit_to_json(const AuditReport& r) {
    nlohmann::ordered_json j;
    j["eq7_factor"] = json12(r.eq7_factor.value);
    j["eq9_constant_gap"] = json12(r.eq9_constant_gap.value);
    j["eq16_exponent_factor"] = json12(r.eq16_exponent_factor.value);
    j["eq17_residual"] = json12(r.eq17_residual.value);
    nlohmann::ordered_json spread;
    spread["eq7_factor"] = json12(r.eq7_factor.constancy_spread);
    spread["eq9_constant_gap"] = json12(r.eq9_constant_gap.constancy_spread);
    spread["eq16_exponent_factor"] = json12(r.eq16_exponent_factor.constancy_spread);
    spread["eq17_residual"] = json12(r.eq17_residual.constancy_spread);
    j["constancy_spread"] = spread;
    return j.dump(2) + "\n";
}

std::string audit_to_csv(const AuditReport& r) {
    const Rows values = audit_rows(r);
    const Rows spreads = audit_spreads(r);
    std::ostringstream out;
    out << "factor,value,constancy_spread\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        out << values[i].first << ',' << values[i].second << ','
            << spreads[i].second << '\n';
    return out.str();
}

std::string audit_to_table(const AuditReport& r) {
    const Rows values = audit_rows(r);
    const Rows spreads = audit_spreads(r);
    std::ostringstream out;
    out << "factor                  value            constancy_spread\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << values[i].first;
        for (std::size_t pad = values[i].first.size(); pad < 24; ++pad) out << ' ';
        out << values[i].second;
        for (std::size_t pad = values[i].second.size(); pad < 17; ++pad) out << ' ';
        out << spreads[i].second << '\n';
    }
    return out.str();
}

}  // namespace qcoh
