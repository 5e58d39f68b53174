#include "wavelab/runner.hpp"

#include <algorithm>
#include <cstdio>
#include <future>

#include "wavelab/errors.hpp"
#include "wavelab/fourier.hpp"
#include "wavelab/oracles.hpp"
#include "wavelab/propagator.hpp"
#include "wavelab/states.hpp"

namespace wavelab {

bool ScenarioResult::passed() const {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; });
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
    validate_scenario(cfg);
    const Grid grid = make_grid(cfg.grid);
    const WaveFunction initial = make_state(cfg.state, grid);

    ScenarioResult result;
    result.name = cfg.name;
    SpectralTransform transform(grid);
    auto log = evolve_observed(initial, cfg.potential, cfg.time.dt, cfg.time.t_end, cfg.time.sample_every,
                               [&](double t, const WaveFunction& wf) {
                                   result.series.push_back(entropy_report(wf, transform, t));
                               });
    result.warnings = std::move(log.warnings);
    result.outcomes = verify(cfg, result.series);
    return result;
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) {
    if (name == "gamma" || name == "γ") return SweepParameter::gamma;
    if (name == "q0") return SweepParameter::q0;
    if (name == "p0") return SweepParameter::p0;
    return std::nullopt;
}

std::string_view to_string(SweepParameter p) {
    switch (p) {
    case SweepParameter::gamma: return "gamma";
    case SweepParameter::q0: return "q0";
    case SweepParameter::p0: return "p0";
    }
    return "unknown";
}

ScenarioConfig with_parameter(const ScenarioConfig& cfg, SweepParameter param, double value) {
    ScenarioConfig out = cfg;
    auto missing = [&] {
        return ConfigError("state " + describe(cfg.state) + " has no parameter '" + std::string(to_string(param)) + "'");
    };
    std::visit(
        [&](auto& s) {
            using S = std::decay_t<decltype(s)>;
            switch (param) {
            case SweepParameter::gamma:
                if constexpr (requires { s.gamma; }) s.gamma = value;
                else throw missing();
                break;
            case SweepParameter::q0:
                if constexpr (requires { s.q0; }) s.q0 = value;
                else if constexpr (std::is_same_v<S, GaussianState>) s.x0 = value;
                else throw missing();
                break;
            case SweepParameter::p0:
                if constexpr (requires { s.p0; }) s.p0 = value;
                else throw missing();
                break;
            }
        },
        out.state);
    char suffix[48];
    std::snprintf(suffix, sizeof suffix, "_%s_%g", std::string(to_string(param)).c_str(), value);
    out.name += suffix;
    out.output.csv_path = sweep_csv_path(cfg.output.csv_path, param, value).string();
    validate_scenario(out);
    return out;
}

std::filesystem::path sweep_csv_path(const std::filesystem::path& base, SweepParameter param, double value) {
    char suffix[48];
    std::snprintf(suffix, sizeof suffix, "_%s_%g", std::string(to_string(param)).c_str(), value);
    std::filesystem::path out = base;
    out.replace_filename(base.stem().string() + suffix + base.extension().string());
    return out;
}

std::vector<SweepEntry> run_sweep(const ScenarioConfig& cfg, SweepParameter param, const std::vector<double>& values) {
    if (values.empty()) throw ConfigError("sweep needs at least one parameter value");
    std::vector<ScenarioConfig> configs;
    configs.reserve(values.size());
    for (double v : values) configs.push_back(with_parameter(cfg, param, v));

    std::vector<std::future<ScenarioResult>> jobs;
    jobs.reserve(configs.size());
    for (const auto& c : configs) jobs.push_back(std::async(std::launch::async, [&c] { return run_scenario(c); }));

    std::vector<SweepEntry> entries;
    entries.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        ScenarioResult result = jobs[i].get();
        const auto [lo, hi] = std::minmax_element(result.series.begin(), result.series.end(),
                                                  [](const auto& a, const auto& b) { return a.joint_entropy < b.joint_entropy; });
        SweepEntry entry{values[i], configs[i], {}, lo->joint_entropy, hi->joint_entropy, std::nullopt, std::nullopt};
        if (const auto g = as_gaussian(configs[i].state)) {
            const auto b = oracle::sj_bounds(g->gamma);
            entry.bound_min = b.min;
            entry.bound_max = b.max;
        }
        entry.result = std::move(result);
        entries.push_back(std::move(entry));
    }
    return entries;
}

} // namespace wavelab
