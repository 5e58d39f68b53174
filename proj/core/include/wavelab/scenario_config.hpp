#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wavelab/grid.hpp"
#include "wavelab/propagator.hpp"
#include "wavelab/states.hpp"

namespace wavelab {

inline constexpr int scenario_schema_version = 1;

enum class CheckKind {
    coherent_constant_SJ,
    squeezed_SJ_curve,
    sj_bounds,
    eur_chain,
    free_monotone,
    cat_periodicity,
};

std::optional<CheckKind> parse_check_kind(std::string_view name);
std::string_view to_string(CheckKind kind);
double default_tolerance(CheckKind kind);

struct CheckSpec {
    CheckKind kind;
    double tolerance;
};

struct GridSpec {
    std::size_t n = 1024;
    double x_min = -12.0;
    double x_max = 12.0;
};

struct TimeSpec {
    double dt = 1e-3;
    double t_end = 1.0;
    std::size_t sample_every = 10;
};

struct OutputSpec {
    std::string csv_path;
    int precision = 6;
};

/// Declarative scenario: initial state, potential, stepping, checks, output.
struct ScenarioConfig {
    int schema_version = scenario_schema_version;
    std::string name;
    GridSpec grid;
    StateSpec state = CoherentState{};
    Potential potential = HarmonicPotential{};
    TimeSpec time;
    std::vector<CheckSpec> verify;
    OutputSpec output;
};

/// Parses the YAML scenario format. Unknown keys, missing required fields,
/// and a schema_version other than scenario_schema_version are ConfigErrors.
/// Real-valued fields accept plain numbers or multiples of pi ("pi/2", "2*pi").
ScenarioConfig parse_scenario(std::string_view yaml_text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Throws ConfigError if any requested check cannot apply to the scenario's
/// state/potential/time window, or if the parameters are invalid.
void validate_scenario(const ScenarioConfig& cfg);

Grid make_grid(const GridSpec& spec);

} // namespace wavelab
