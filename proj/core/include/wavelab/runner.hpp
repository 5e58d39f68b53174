#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wavelab/entropy.hpp"
#include "wavelab/scenario_config.hpp"
#include "wavelab/verification.hpp"

namespace wavelab {

struct ScenarioResult {
    std::string name;
    std::vector<EntropyReport> series;
    std::vector<VerificationOutcome> outcomes;
    std::vector<std::string> warnings;

    bool passed() const;
};

/// Builds the initial state, evolves it, reports entropies at every sample
/// and evaluates the configured checks. Throws ConfigError before stepping
/// and NumericalError (with the failing time) mid-run.
ScenarioResult run_scenario(const ScenarioConfig& cfg);

enum class SweepParameter { gamma, q0, p0 };

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name);
std::string_view to_string(SweepParameter p);

/// Copy of cfg with one state parameter replaced. Throws ConfigError if the
/// state kind has no such parameter (e.g. gamma on a cat state).
ScenarioConfig with_parameter(const ScenarioConfig& cfg, SweepParameter param, double value);

/// "<stem>_<param>_<value><ext>" next to the original CSV path.
std::filesystem::path sweep_csv_path(const std::filesystem::path& base, SweepParameter param, double value);

struct SweepEntry {
    double value;
    ScenarioConfig config;
    ScenarioResult result;
    double sj_min;
    double sj_max;
    /// sj_bounds for the entry's gamma, when the state is Gaussian.
    std::optional<double> bound_min;
    std::optional<double> bound_max;
};

/// Runs one scenario per value concurrently; results keep the input order.
std::vector<SweepEntry> run_sweep(const ScenarioConfig& cfg, SweepParameter param, const std::vector<double>& values);

} // namespace wavelab
