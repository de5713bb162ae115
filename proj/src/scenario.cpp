#include "qcoherence/scenario.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include "qcoherence/units.hpp"

namespace qcoh {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) {
    throw std::invalid_argument("scenario: " + message);
}

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where) {
    for (const auto& item : obj.items())
        if (!allowed.count(item.key()))
            bad("unknown key \"" + item.key() + "\" in " + where);
}

double number_field(const json& obj, const std::string& key, bool positive) {
    if (!obj.contains(key)) bad("missing field \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number()) bad("field \"" + key + "\" must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) bad("field \"" + key + "\" must be finite");
    if (positive && x <= 0.0) bad("field \"" + key + "\" must be positive");
    return x;
}

Conventions parse_conventions(const json& doc) {
    Conventions out;
    if (!doc.contains("conventions")) return out;
    const json& c = doc.at("conventions");
    if (!c.is_object()) bad("\"conventions\" must be an object");
    check_keys(c, {"eq7", "constant"}, "conventions");
    if (c.contains("eq7")) {
        if (!c.at("eq7").is_string()) bad("conventions.eq7 must be a string");
        out.eq7 = ratio_convention_from_string(c.at("eq7").get<std::string>());
    }
    if (c.contains("constant")) {
        if (!c.at("constant").is_string()) bad("conventions.constant must be a string");
        out.constant =
            quasi_static_constant_from_string(c.at("constant").get<std::string>());
    }
    return out;
}

}  // namespace

ScenarioInput parse_scenario(const json& doc, bool si) {
    if (!doc.is_object()) bad("document must be a JSON object");

    const bool has_potential = doc.contains("potential");
    const bool has_direct =
        doc.contains("mass") || doc.contains("epsilon0") || doc.contains("w");
    if (has_potential && has_direct)
        bad("give either (mass, epsilon0, w) or a potential block, not both");

    ScenarioInput out;
    out.si = si;
    out.conventions = parse_conventions(doc);

    if (has_potential) {
        check_keys(doc, {"gamma", "tau_m", "potential", "conventions"}, "scenario");
        const json& p = doc.at("potential");
        if (!p.is_object()) bad("\"potential\" must be an object");
        check_keys(p, {"m", "omega", "a", "A", "B"}, "potential");
        DoubleWell well;
        well.m = number_field(p, "m", true);
        well.omega = number_field(p, "omega", true);
        well.a = number_field(p, "a", true);
        well.A = number_field(p, "A", false);
        well.B = number_field(p, "B", false);
        if (si) well.m = units::mass_to_natural(well.m);
        const WellGeometry geom = analyze(well);
        out.potential = well;
        out.scenario.m = well.m;
        out.scenario.epsilon0 = geom.epsilon0;
        out.scenario.w = geom.w;
    } else {
        check_keys(doc, {"mass", "gamma", "tau_m", "epsilon0", "w", "conventions"},
                   "scenario");
        out.scenario.m = number_field(doc, "mass", true);
        out.scenario.epsilon0 = number_field(doc, "epsilon0", true);
        out.scenario.w = number_field(doc, "w", true);
        if (si) {
            out.scenario.m = units::mass_to_natural(out.scenario.m);
            out.scenario.epsilon0 = units::energy_to_natural(out.scenario.epsilon0);
        }
    }

    out.scenario.gamma = number_field(doc, "gamma", true);
    out.scenario.tau_m = number_field(doc, "tau_m", true);
    return out;
}

ScenarioInput load_scenario(const std::string& path, bool si) {
    std::ifstream in(path);
    if (!in) bad("cannot open file \"" + path + "\"");
    json doc = json::parse(in);  // parse_error propagates
    return parse_scenario(doc, si);
}

RatioConvention ratio_convention_from_string(const std::string& name) {
    if (name == "printed") return RatioConvention::printed;
    if (name == "derived") return RatioConvention::derived;
    throw std::invalid_argument("unknown convention \"" + name +
                                "\" (expected printed or derived)");
}

QuasiStaticConstant quasi_static_constant_from_string(const std::string& name) {
    if (name == "paper_4_5") return QuasiStaticConstant::coefficient_4_5;
    if (name == "exact_limit") return QuasiStaticConstant::exact_limit;
    throw std::invalid_argument("unknown constant \"" + name +
                                "\" (expected paper_4_5 or exact_limit)");
}

std::string to_string(RatioConvention convention) {
    return convention == RatioConvention::printed ? "printed" : "derived";
}

std::string to_string(QuasiStaticConstant constant) {
    return constant == QuasiStaticConstant::coefficient_4_5 ? "paper_4_5"
                                                            : "exact_limit";
}

}  // namespace qcoh
