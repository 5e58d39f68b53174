#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "wavelab/csv.hpp"
#include "wavelab/errors.hpp"
#include "wavelab/oracles.hpp"
#include "wavelab/runner.hpp"

namespace wavelab::cli {

namespace {

std::string format(const char* fmt, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

void print_outcomes(std::ostream& out, const ScenarioResult& result) {
    out << "scenario " << result.name << " (" << result.series.size() << " samples)\n";
    if (result.outcomes.empty()) {
        out << "  no checks configured\n";
        return;
    }
    out << format("  %-22s %-12s %-12s %-10s %s\n", "check", "deviation", "tolerance", "locus", "result");
    for (const auto& o : result.outcomes) {
        out << format("  %-22s %-12.3e %-12.3e %-10.4f %s", o.check.c_str(), o.deviation, o.tolerance, o.locus,
                      o.passed ? "PASS" : "FAIL");
        if (!o.detail.empty()) out << "  " << o.detail;
        out << '\n';
    }
}

void print_warnings(std::ostream& err, const ScenarioResult& result) {
    for (const auto& w : result.warnings) err << "warning: " << result.name << ": " << w << '\n';
}

int exit_for(bool passed) { return passed ? exit_ok : exit_check_failed; }

int cmd_run(const std::string& config_path, const std::string& output_override, std::ostream& out,
            std::ostream& err) {
    const ScenarioConfig cfg = load_scenario(config_path);
    const ScenarioResult result = run_scenario(cfg);
    print_warnings(err, result);
    const std::string csv = output_override.empty() ? cfg.output.csv_path : output_override;
    emit_csv(result.series, csv, cfg.output.precision);
    out << "wrote " << result.series.size() << " rows to " << csv << '\n';
    print_outcomes(out, result);
    return exit_for(result.passed());
}

int cmd_verify(const std::string& config_path, std::ostream& out, std::ostream& err) {
    const ScenarioConfig cfg = load_scenario(config_path);
    const ScenarioResult result = run_scenario(cfg);
    print_warnings(err, result);
    print_outcomes(out, result);
    return exit_for(result.passed());
}

int cmd_sweep(const std::string& config_path, const std::string& param_name, const std::vector<double>& values,
              const std::string& output_override, std::ostream& out, std::ostream& err) {
    const auto param = parse_sweep_parameter(param_name);
    if (!param) throw ConfigError("unknown sweep parameter '" + param_name + "' (expected gamma, q0 or p0)");
    ScenarioConfig cfg = load_scenario(config_path);
    if (!output_override.empty()) cfg.output.csv_path = output_override;
    const auto entries = run_sweep(cfg, *param, values);

    bool passed = true;
    for (const auto& e : entries) {
        print_warnings(err, e.result);
        emit_csv(e.result.series, e.config.output.csv_path, e.config.output.precision);
        passed &= e.result.passed();
    }
    const std::string pname(to_string(*param));
    out << format("%-10s %-12s %-12s %-12s %-12s %-7s %s\n", pname.c_str(), "S_J_min", "S_J_max", "bound_min",
                  "bound_max", "checks", "csv");
    for (const auto& e : entries) {
        const std::string bmin = e.bound_min ? format("%.7f", *e.bound_min) : "-";
        const std::string bmax = e.bound_max ? format("%.7f", *e.bound_max) : "-";
        out << format("%-10g %-12.7f %-12.7f %-12s %-12s %-7s %s\n", e.value, e.sj_min, e.sj_max, bmin.c_str(),
                      bmax.c_str(), e.result.passed() ? "PASS" : "FAIL", e.config.output.csv_path.c_str());
    }
    return exit_for(passed);
}

int cmd_oracle(const std::string& curve, double gamma, double t, double q0, double p0, double mass, int precision,
               std::ostream& out) {
    if (curve == "sj_bounds") {
        const auto b = oracle::sj_bounds(gamma);
        out << format("min=%.*f max=%.*f\n", precision, b.min, precision, b.max);
        return exit_ok;
    }
    const auto kind = oracle::parse_curve_kind(curve);
    if (!kind) throw ConfigError("unknown oracle curve '" + curve + "'");
    const oracle::OracleCurve c{*kind, gamma, q0, p0, mass};
    out << format("%.*f\n", precision, c(t));
    return exit_ok;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wave-packet entropy laboratory: split-operator propagation with entropic diagnostics", "wavelab"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_path;

    auto* run_cmd = app.add_subcommand("run", "Evolve a scenario, write its CSV and report checks");
    run_cmd->add_option("config", config_path, "Scenario YAML file")->required();
    run_cmd->add_option("-o,--output", output_path, "Override output.csv_path");

    auto* verify_cmd = app.add_subcommand("verify", "Evolve a scenario and print the check table");
    verify_cmd->add_option("config", config_path, "Scenario YAML file")->required();

    std::string param;
    std::vector<double> values;
    auto* sweep_cmd = app.add_subcommand("sweep", "Repeat a scenario across values of one state parameter");
    sweep_cmd->add_option("config", config_path, "Scenario YAML file")->required();
    sweep_cmd->add_option("--param", param, "gamma, q0 or p0")->required();
    sweep_cmd->add_option("--values", values, "Comma-separated parameter values")->required()->delimiter(',');
    sweep_cmd->add_option("-o,--output", output_path, "Base CSV path (suffixed per value)");

    std::string curve;
    double gamma = 1.0;
    double t = 0.0;
    double q0 = 0.0;
    double p0 = 0.0;
    double mass = 1.0;
    int precision = 7;
    auto* oracle_cmd = app.add_subcommand("oracle", "Print a closed-form value");
    oracle_cmd->add_option("curve", curve,
                           "coherent_Sq, coherent_Sp, coherent_center, squeezed_sigma2, squeezed_sigma2_tilde, "
                           "squeezed_SJ, free_sigma2 or sj_bounds")
        ->required();
    oracle_cmd->add_option("--gamma,--γ", gamma, "Width parameter");
    oracle_cmd->add_option("--t", t, "Time");
    oracle_cmd->add_option("--q0", q0, "Initial centre");
    oracle_cmd->add_option("--p0", p0, "Initial momentum");
    oracle_cmd->add_option("--mass", mass, "Particle mass (free_sigma2)");
    oracle_cmd->add_option("--precision", precision, "Decimal places")->check(CLI::Range(0, 17));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*run_cmd) return cmd_run(config_path, output_path, out, err);
        if (*verify_cmd) return cmd_verify(config_path, out, err);
        if (*sweep_cmd) return cmd_sweep(config_path, param, values, output_path, out, err);
        if (*oracle_cmd) return cmd_oracle(curve, gamma, t, q0, p0, mass, precision, out);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return exit_usage;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return exit_usage;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return exit_check_failed;
    } catch (const ContractError& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_check_failed;
    }
    return exit_usage;
}

} // namespace wavelab::cli
