// qcoh: command-line front end over the qcoherence library.
// Subcommands: potential, figure, report, sweep, audit.
// Exit codes: 0 success, 2 invalid input, 3 numerical/domain failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcoherence/audit.hpp"
#include "qcoherence/coherence.hpp"
#include "qcoherence/format.hpp"
#include "qcoherence/numerics.hpp"
#include "qcoherence/potential.hpp"
#include "qcoherence/report.hpp"
#include "qcoherence/scenario.hpp"
#include "qcoherence/spectral.hpp"
#include "qcoherence/timescales.hpp"

namespace {

using qcoh::fmt12;
using qcoh::json12;

struct Grid {
    double start = 0.0;
    double stop = 0.0;
    long steps = 0;
};

// START:STOP:STEPS with STEPS = number of points, endpoints inclusive.
Grid parse_grid(const std::string& text) {
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        text.find(':', second + 1) != std::string::npos)
        throw std::invalid_argument("grid \"" + text + "\" is not START:STOP:STEPS");

    Grid g;
    std::size_t used = 0;
    try {
        g.start = std::stod(text.substr(0, first), &used);
        if (used != first) throw std::invalid_argument("");
        const std::string stop_text = text.substr(first + 1, second - first - 1);
        g.stop = std::stod(stop_text, &used);
        if (used != stop_text.size()) throw std::invalid_argument("");
        const std::string steps_text = text.substr(second + 1);
        g.steps = std::stol(steps_text, &used);
        if (used != steps_text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("grid \"" + text + "\" is not START:STOP:STEPS");
    }
    if (!std::isfinite(g.start) || !std::isfinite(g.stop))
        throw std::invalid_argument("grid endpoints must be finite");
    if (g.steps < 1) throw std::invalid_argument("grid needs at least one point");
    if (g.stop < g.start) throw std::invalid_argument("grid must be ascending");
    if (g.steps == 1 && g.stop != g.start)
        throw std::invalid_argument("a one-point grid needs START == STOP");
    return g;
}

std::vector<double> grid_points(const Grid& g) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(g.steps));
    if (g.steps == 1) {
        out.push_back(g.start);
        return out;
    }
    const double h = (g.stop - g.start) / static_cast<double>(g.steps - 1);
    for (long i = 0; i < g.steps; ++i)
        out.push_back(i + 1 == g.steps ? g.stop : g.start + h * static_cast<double>(i));
    return out;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file \"" + path + "\"");
    out << content;
    if (!out) throw std::runtime_error("failed writing \"" + path + "\"");
}

using Series = std::vector<std::pair<double, double>>;

std::string series_csv(const std::string& xname, const std::string& yname,
                       const Series& rows, const std::string& preamble = "") {
    std::ostringstream out;
    out << preamble << xname << ',' << yname << '\n';
    for (const auto& [x, y] : rows) out << fmt12(x) << ',' << fmt12(y) << '\n';
    return out.str();
}

nlohmann::ordered_json series_rows_json(const Series& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [x, y] : rows) arr.push_back({json12(x), json12(y)});
    return arr;
}

// --- potential ---------------------------------------------------------

std::string run_potential(const qcoh::DoubleWell& well, const std::string& grid_text,
                          const std::string& format) {
    const qcoh::WellGeometry geom = qcoh::analyze(well);

    Grid grid;
    if (grid_text.empty()) {
        // Default: cover both wells with a 10% margin, 201 points.
        const double lo = std::min(geom.xi_upper, geom.xi_lower);
        const double hi = std::max(geom.xi_upper, geom.xi_lower);
        const double margin = 0.1 * (hi - lo);
        grid = Grid{(lo - margin) * well.a, (hi + margin) * well.a, 201};
    } else {
        grid = parse_grid(grid_text);
    }

    Series rows;
    for (double x : grid_points(grid)) rows.emplace_back(x, qcoh::evaluate(well, x));

    if (format == "json") {
        nlohmann::ordered_json j;
        j["summary"] = {{"xi_upper", json12(geom.xi_upper)},
                        {"xi_barrier", json12(geom.xi_barrier)},
                        {"xi_lower", json12(geom.xi_lower)},
                        {"epsilon0", json12(geom.epsilon0)},
                        {"w", json12(geom.w)},
                        {"nu", json12(geom.nu)},
                        {"barrier_height_upper", json12(geom.barrier_height_upper)}};
        j["columns"] = {"x", "V"};
        j["rows"] = series_rows_json(rows);
        return j.dump(2) + "\n";
    }
    std::ostringstream summary;
    summary << "# xi_upper=" << fmt12(geom.xi_upper)
            << " xi_barrier=" << fmt12(geom.xi_barrier)
            << " xi_lower=" << fmt12(geom.xi_lower)
            << " epsilon0=" << fmt12(geom.epsilon0) << " w=" << fmt12(geom.w)
            << " nu=" << fmt12(geom.nu)
            << " barrier_height_upper=" << fmt12(geom.barrier_height_upper) << '\n';
    return series_csv("x", "V", rows, summary.str());
}

// --- figure ------------------------------------------------------------

std::string run_figure(const std::string& name, const std::string& grid_text,
                       qcoh::RatioConvention convention, const std::string& format) {
    Grid grid;
    if (!grid_text.empty()) {
        grid = parse_grid(grid_text);
    } else if (name == "fig4") {
        grid = Grid{0.01, 0.99, 99};
    } else {
        grid = Grid{0.2, 40.0, 200};
    }

    std::string xname;
    std::string yname;
    Series rows;
    if (name == "fig2") {
        if (!(grid.start > 0.0)) throw std::invalid_argument("fig2 needs theta > 0");
        xname = "theta";
        yname = "temperature_ratio";
        for (double theta : grid_points(grid))
            rows.emplace_back(theta, qcoh::temperature_ratio(theta, convention));
    } else if (name == "fig3") {
        if (!(grid.start > 0.0)) throw std::invalid_argument("fig3 needs theta > 0");
        xname = "theta";
        yname = "ratio_normalized";
        for (double theta : grid_points(grid))
            rows.emplace_back(
                theta, qcoh::coth_stable(0.5 * qcoh::coth_stable(0.5 * theta)));
    } else if (name == "fig4") {
        if (!(grid.start > 0.0) || !(grid.stop < 1.0))
            throw std::invalid_argument("fig4 needs a g grid inside (0, 1)");
        xname = "g1";
        yname = "tau_ratio";
        for (double g : grid_points(grid))
            rows.emplace_back(g, qcoh::ratio_from_coherence(g));
    } else {
        throw std::invalid_argument("unknown figure \"" + name + "\"");
    }

    if (format == "json") {
        nlohmann::ordered_json j;
        j["name"] = name;
        j["columns"] = {xname, yname};
        j["rows"] = series_rows_json(rows);
        return j.dump(2) + "\n";
    }
    return series_csv(xname, yname, rows);
}

// --- sweep -------------------------------------------------------------

std::string run_sweep(const std::string& q_text, const std::string& theta_text,
                      const std::string& format) {
    const std::vector<double> qs = grid_points(parse_grid(q_text));
    const std::vector<double> thetas = grid_points(parse_grid(theta_text));
    if (!(qs.front() > 0.0)) throw std::invalid_argument("sweep needs Q > 0");
    if (!(thetas.front() > 0.0)) throw std::invalid_argument("sweep needs theta > 0");

    const std::vector<std::string> columns = {
        "Q", "theta", "g1_printed", "g1_quasi_static", "g1_first_principles",
        "tau_ratio_printed", "tau_ratio_from_g", "sustainable"};

    std::vector<qcoh::CoherenceReport> reports;
    reports.reserve(qs.size() * thetas.size());
    for (double q : qs)
        for (double theta : thetas)
            reports.push_back(qcoh::coherence_report({q, theta}));

    if (format == "json") {
        nlohmann::ordered_json j;
        j["columns"] = columns;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports)
            arr.push_back({json12(r.q), json12(r.theta), json12(r.g1_printed),
                           json12(r.g1_quasi_static), json12(r.g1_first_principles),
                           json12(r.tau_ratio_printed), json12(r.tau_ratio_from_g),
                           r.tau_ratio_printed > 1.0});
        j["rows"] = arr;
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << columns[i] << (i + 1 < columns.size() ? ',' : '\n');
    for (const auto& r : reports)
        out << fmt12(r.q) << ',' << fmt12(r.theta) << ',' << fmt12(r.g1_printed)
            << ',' << fmt12(r.g1_quasi_static) << ',' << fmt12(r.g1_first_principles)
            << ',' << fmt12(r.tau_ratio_printed) << ',' << fmt12(r.tau_ratio_from_g)
            << ',' << (r.tau_ratio_printed > 1.0 ? "true" : "false") << '\n';
    return out.str();
}

// --- audit -------------------------------------------------------------

std::string run_audit_cmd(const std::string& theta_text, const std::string& format) {
    const std::vector<double> thetas = grid_points(parse_grid(theta_text));

    // Fixed scan over mass / asymmetry energy / separation decades; the point
    // of the audit is that the factors do not move across any of it.
    std::vector<qcoh::ChannelScenario> scenarios;
    for (double m : {0.5, 1.0, 2.0})
        for (double e : {50.0, 105.46875, 200.0})
            for (double w : {1.0, 7.5, 20.0})
                scenarios.push_back({m, 1.0, 1.0, e, w});

    const qcoh::AuditReport report = qcoh::run_audit(thetas, scenarios);
    if (format == "csv") return qcoh::audit_to_csv(report);
    if (format == "table") return qcoh::audit_to_table(report);
    return qcoh::audit_to_json(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum coherence timescales for a gated bistable barrier"};
    app.require_subcommand(1);

    std::string output;
    app.add_option("--output", output, "write to this file instead of stdout")
        ->capture_default_str();

    // potential
    auto* cmd_pot = app.add_subcommand("potential", "sample V(x) and report well geometry");
    qcoh::DoubleWell well;
    std::string pot_grid;
    std::string pot_format = "csv";
    cmd_pot->add_option("--m", well.m, "particle mass")->capture_default_str();
    cmd_pot->add_option("--omega", well.omega, "harmonic frequency")->capture_default_str();
    cmd_pot->add_option("--a", well.a, "length scale")->capture_default_str();
    cmd_pot->add_option("--A", well.A, "cubic shape constant")->capture_default_str();
    cmd_pot->add_option("--B", well.B, "quadratic shape constant")->capture_default_str();
    cmd_pot->add_option("--grid", pot_grid, "x grid START:STOP:STEPS");
    cmd_pot->add_option("--format", pot_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // figure
    auto* cmd_fig = app.add_subcommand("figure", "emit one figure's data series");
    std::string fig_name;
    std::string fig_grid;
    std::string fig_format = "csv";
    std::string fig_convention = "printed";
    cmd_fig->add_option("name", fig_name, "fig2, fig3 or fig4")
        ->required()
        ->check(CLI::IsMember({"fig2", "fig3", "fig4"}));
    cmd_fig->add_option("--grid", fig_grid, "theta grid (fig2, fig3) or g grid (fig4)");
    cmd_fig->add_option("--format", fig_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_fig->add_option("--convention", fig_convention, "fig2 ratio convention")
        ->check(CLI::IsMember({"printed", "derived"}));

    // report
    auto* cmd_rep = app.add_subcommand("report", "full coherence report for one scenario");
    std::string scenario_path;
    std::string rep_format = "json";
    std::string rep_convention;
    std::string rep_constant;
    bool si = false;
    cmd_rep->add_option("scenario", scenario_path, "scenario JSON file")->required();
    cmd_rep->add_option("--format", rep_format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd_rep->add_option("--convention", rep_convention,
                        "override the file's eq7 convention")
        ->check(CLI::IsMember({"printed", "derived"}));
    cmd_rep->add_option("--constant", rep_constant,
                        "override the file's quasi-static constant")
        ->check(CLI::IsMember({"paper_4_5", "exact_limit"}));
    cmd_rep->add_flag("--si", si, "scenario is in SI units (kg, s, J, m)");

    // sweep
    auto* cmd_sw = app.add_subcommand("sweep", "coherence report over a (Q, theta) rectangle");
    std::string sw_q = "0.5:10:20";
    std::string sw_theta = "0.5:40:40";
    std::string sw_format = "csv";
    cmd_sw->add_option("--q-grid", sw_q, "Q grid START:STOP:STEPS")->capture_default_str();
    cmd_sw->add_option("--theta-grid", sw_theta, "theta grid START:STOP:STEPS")
        ->capture_default_str();
    cmd_sw->add_option("--format", sw_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // audit
    auto* cmd_aud = app.add_subcommand("audit", "derivation-chain consistency factors");
    std::string aud_theta = "0.5:40:80";
    std::string aud_format = "json";
    cmd_aud->add_option("--theta-grid", aud_theta, "theta grid START:STOP:STEPS")
        ->capture_default_str();
    cmd_aud->add_option("--format", aud_format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    try {
        app.parse(argc, argv);

        std::string content;
        if (*cmd_pot) {
            content = run_potential(well, pot_grid, pot_format);
        } else if (*cmd_fig) {
            content = run_figure(fig_name, fig_grid,
                                 qcoh::ratio_convention_from_string(fig_convention),
                                 fig_format);
        } else if (*cmd_rep) {
            qcoh::ScenarioInput input = qcoh::load_scenario(scenario_path, si);
            if (!rep_convention.empty())
                input.conventions.eq7 = qcoh::ratio_convention_from_string(rep_convention);
            if (!rep_constant.empty())
                input.conventions.constant =
                    qcoh::quasi_static_constant_from_string(rep_constant);
            const qcoh::ScenarioReport report = qcoh::build_scenario_report(input);
            if (rep_format == "csv")
                content = qcoh::report_to_csv(report);
            else if (rep_format == "table")
                content = qcoh::report_to_table(report);
            else
                content = qcoh::report_to_json(report);
        } else if (*cmd_sw) {
            content = run_sweep(sw_q, sw_theta, sw_format);
        } else if (*cmd_aud) {
            content = run_audit_cmd(aud_theta, aud_format);
        }
        emit(output, content);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
