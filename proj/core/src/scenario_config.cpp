#include "wavelab/scenario_config.hpp"

#include <yaml-cpp/yaml.h>

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <regex>
#include <set>
#include <sstream>
#include <utility>

#include "wavelab/errors.hpp"

namespace wavelab {

namespace {

constexpr std::array<std::pair<CheckKind, std::string_view>, 6> check_names{{
    {CheckKind::coherent_constant_SJ, "coherent_constant_SJ"},
    {CheckKind::squeezed_SJ_curve, "squeezed_SJ_curve"},
    {CheckKind::sj_bounds, "sj_bounds"},
    {CheckKind::eur_chain, "eur_chain"},
    {CheckKind::free_monotone, "free_monotone"},
    {CheckKind::cat_periodicity, "cat_periodicity"},
}};

std::string where(const YAML::Node& node, const std::string& key) {
    const auto mark = node.Mark();
    if (mark.line < 0) return "'" + key + "'";
    return "'" + key + "' (line " + std::to_string(mark.line + 1) + ")";
}

void reject_unknown_keys(const YAML::Node& map, const std::string& section, std::set<std::string> allowed) {
    if (!map.IsMap()) throw ConfigError("section '" + section + "' must be a mapping");
    for (const auto& kv : map) {
        const auto key = kv.first.as<std::string>();
        if (!allowed.contains(key)) {
            throw ConfigError("unknown key '" + key + "' in section '" + section + "'");
        }
    }
}

// Accepts plain reals and "k*pi/d"-style multiples of pi.
double parse_real_text(const std::string& text, const std::string& key) {
    static const std::regex pi_form(R"(^\s*(?:([-+]?[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)\s*\*?\s*)?(-?)pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, pi_form)) {
        double v = std::numbers::pi;
        if (m[1].matched) v *= std::stod(m[1].str());
        if (m[2].length() > 0) v = -v;
        if (m[3].matched) v /= std::stod(m[3].str());
        return v;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("field '" + key + "' is not a number: '" + text + "'");
    }
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size()) throw ConfigError("field '" + key + "' is not a number: '" + text + "'");
    return v;
}

double get_real(const YAML::Node& map, const std::string& key, std::optional<double> fallback = std::nullopt) {
    const YAML::Node node = map[key];
    if (!node) {
        if (fallback) return *fallback;
        throw ConfigError("missing required field '" + key + "'");
    }
    if (!node.IsScalar()) throw ConfigError("field " + where(node, key) + " must be a scalar");
    const double v = parse_real_text(node.Scalar(), key);
    if (!std::isfinite(v)) throw ConfigError("field '" + key + "' must be finite");
    return v;
}

std::size_t get_count(const YAML::Node& map, const std::string& key, std::optional<std::size_t> fallback) {
    const YAML::Node node = map[key];
    if (!node) {
        if (fallback) return *fallback;
        throw ConfigError("missing required field '" + key + "'");
    }
    try {
        const auto v = node.as<long long>();
        if (v < 0) throw ConfigError("field '" + key + "' must be nonnegative");
        return static_cast<std::size_t>(v);
    } catch (const YAML::Exception&) {
        throw ConfigError("field " + where(node, key) + " must be an integer");
    }
}

std::string get_string(const YAML::Node& map, const std::string& key, std::optional<std::string> fallback) {
    const YAML::Node node = map[key];
    if (!node) {
        if (fallback) return *fallback;
        throw ConfigError("missing required field '" + key + "'");
    }
    if (!node.IsScalar()) throw ConfigError("field " + where(node, key) + " must be a string");
    return node.Scalar();
}

StateSpec parse_state(const YAML::Node& node) {
    if (!node) throw ConfigError("missing required section 'state'");
    const auto kind = get_string(node, "kind", std::nullopt);
    if (kind == "gaussian") {
        reject_unknown_keys(node, "state", {"kind", "x0", "p0", "gamma"});
        return GaussianState{get_real(node, "x0", 0.0), get_real(node, "p0", 0.0), get_real(node, "gamma", 1.0)};
    }
    if (kind == "coherent") {
        reject_unknown_keys(node, "state", {"kind", "q0", "p0"});
        return CoherentState{get_real(node, "q0", 0.0), get_real(node, "p0", 0.0)};
    }
    if (kind == "squeezed") {
        reject_unknown_keys(node, "state", {"kind", "gamma"});
        return SqueezedState{get_real(node, "gamma")};
    }
    if (kind == "cat") {
        reject_unknown_keys(node, "state", {"kind", "q0", "p0", "relative_phase"});
        return CatState{get_real(node, "q0", 0.0), get_real(node, "p0", 0.0),
                        get_real(node, "relative_phase", std::numbers::pi)};
    }
    throw ConfigError("unknown state kind '" + kind + "' (expected gaussian, coherent, squeezed or cat)");
}

Potential parse_potential(const YAML::Node& node) {
    if (!node) throw ConfigError("missing required section 'potential'");
    const auto kind = get_string(node, "kind", std::nullopt);
    if (kind == "free") {
        reject_unknown_keys(node, "potential", {"kind", "mass"});
        return FreePotential{get_real(node, "mass", 1.0)};
    }
    if (kind == "harmonic") {
        reject_unknown_keys(node, "potential", {"kind", "mass", "omega"});
        return HarmonicPotential{get_real(node, "mass", 1.0), get_real(node, "omega", 1.0)};
    }
    if (kind == "tabulated") {
        reject_unknown_keys(node, "potential", {"kind", "mass", "x_min", "x_max", "values"});
        TabulatedPotential t;
        t.mass = get_real(node, "mass", 1.0);
        t.x_min = get_real(node, "x_min");
        t.x_max = get_real(node, "x_max");
        const YAML::Node values = node["values"];
        if (!values || !values.IsSequence()) throw ConfigError("tabulated potential needs a 'values' list");
        for (const auto& v : values) t.values.push_back(parse_real_text(v.Scalar(), "values"));
        return t;
    }
    throw ConfigError("unknown potential kind '" + kind + "' (expected free, harmonic or tabulated)");
}

std::vector<CheckSpec> parse_checks(const YAML::Node& node) {
    std::vector<CheckSpec> checks;
    if (!node) return checks;
    if (!node.IsSequence()) throw ConfigError("'verify' must be a list of checks");
    for (const auto& item : node) {
        std::string name;
        std::optional<double> tolerance;
        if (item.IsScalar()) {
            name = item.Scalar();
        } else {
            reject_unknown_keys(item, "verify", {"check", "tolerance"});
            name = get_string(item, "check", std::nullopt);
            if (item["tolerance"]) tolerance = get_real(item, "tolerance");
        }
        const auto kind = parse_check_kind(name);
        if (!kind) throw ConfigError("unknown verification check '" + name + "'");
        const double tol = tolerance.value_or(default_tolerance(*kind));
        if (!(tol >= 0.0)) throw ConfigError("tolerance for '" + name + "' must be nonnegative");
        checks.push_back({*kind, tol});
    }
    return checks;
}

bool default_units(const Potential& v) {
    const auto* h = std::get_if<HarmonicPotential>(&v);
    return h != nullptr && h->mass == 1.0 && h->omega == 1.0;
}

} // namespace

std::optional<CheckKind> parse_check_kind(std::string_view name) {
    for (const auto& [kind, label] : check_names) {
        if (label == name) return kind;
    }
    return std::nullopt;
}

std::string_view to_string(CheckKind kind) {
    for (const auto& [k, label] : check_names) {
        if (k == kind) return label;
    }
    return "unknown";
}

double default_tolerance(CheckKind kind) {
    switch (kind) {
    case CheckKind::coherent_constant_SJ: return 1e-5;
    case CheckKind::squeezed_SJ_curve: return 1e-5;
    case CheckKind::sj_bounds: return 1e-4;
    case CheckKind::eur_chain: return 1e-6;
    case CheckKind::free_monotone: return 1e-9;
    case CheckKind::cat_periodicity: return 1e-4;
    }
    return 0.0;
}

ScenarioConfig parse_scenario(std::string_view yaml_text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(yaml_text));
    } catch (const YAML::Exception& e) {
        throw ConfigError(std::string("malformed scenario YAML: ") + e.what());
    }
    if (!root.IsMap()) throw ConfigError("scenario file must be a YAML mapping");
    reject_unknown_keys(root, "<root>", {"schema_version", "name", "grid", "state", "potential", "time", "verify", "output"});

    ScenarioConfig cfg;
    cfg.schema_version = static_cast<int>(get_count(root, "schema_version", std::nullopt));
    if (cfg.schema_version != scenario_schema_version) {
        throw ConfigError("unsupported schema_version " + std::to_string(cfg.schema_version) + " (expected " +
                          std::to_string(scenario_schema_version) + ")");
    }
    cfg.name = get_string(root, "name", std::nullopt);

    if (const auto grid = root["grid"]) {
        reject_unknown_keys(grid, "grid", {"n", "x_min", "x_max"});
        cfg.grid.n = get_count(grid, "n", cfg.grid.n);
        cfg.grid.x_min = get_real(grid, "x_min", cfg.grid.x_min);
        cfg.grid.x_max = get_real(grid, "x_max", cfg.grid.x_max);
    }
    cfg.state = parse_state(root["state"]);
    cfg.potential = parse_potential(root["potential"]);

    const auto time = root["time"];
    if (!time) throw ConfigError("missing required section 'time'");
    reject_unknown_keys(time, "time", {"dt", "t_end", "sample_every"});
    cfg.time.dt = get_real(time, "dt", cfg.time.dt);
    cfg.time.t_end = get_real(time, "t_end");
    cfg.time.sample_every = get_count(time, "sample_every", cfg.time.sample_every);

    cfg.verify = parse_checks(root["verify"]);

    cfg.output.csv_path = cfg.name + ".csv";
    if (const auto out = root["output"]) {
        reject_unknown_keys(out, "output", {"csv_path", "precision"});
        cfg.output.csv_path = get_string(out, "csv_path", cfg.output.csv_path);
        cfg.output.precision = static_cast<int>(get_count(out, "precision", cfg.output.precision));
    }
    validate_scenario(cfg);
    return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open scenario file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_scenario(text.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

Grid make_grid(const GridSpec& spec) { return Grid(spec.n, spec.x_min, spec.x_max); }

void validate_scenario(const ScenarioConfig& cfg) {
    if (cfg.name.empty()) throw ConfigError("scenario name must not be empty");
    (void)make_grid(cfg.grid);
    validate(cfg.state);
    validate(cfg.potential);
    if (!(cfg.time.dt > 0.0)) throw ConfigError("time.dt must be positive");
    if (!(cfg.time.t_end > 0.0)) throw ConfigError("time.t_end must be positive");
    if (cfg.time.sample_every < 1) throw ConfigError("time.sample_every must be >= 1");
    if (cfg.output.precision < 1 || cfg.output.precision > 17) {
        throw ConfigError("output.precision must lie in [1, 17]");
    }

    const auto gaussian = as_gaussian(cfg.state);
    for (const auto& check : cfg.verify) {
        const std::string name(to_string(check.kind));
        auto incompatible = [&](const std::string& why) {
            throw ConfigError("check '" + name + "' is incompatible with scenario '" + cfg.name + "': " + why);
        };
        switch (check.kind) {
        case CheckKind::coherent_constant_SJ:
            if (!gaussian || gaussian->gamma != 1.0) incompatible("needs a coherent state (Gaussian with gamma = 1)");
            if (!default_units(cfg.potential)) incompatible("needs a harmonic potential with mass = omega = 1");
            break;
        case CheckKind::squeezed_SJ_curve:
        case CheckKind::sj_bounds:
            if (!gaussian) incompatible("needs a Gaussian (squeezed) state");
            if (!default_units(cfg.potential)) incompatible("needs a harmonic potential with mass = omega = 1");
            if (check.kind == CheckKind::sj_bounds && cfg.time.t_end < std::numbers::pi / 2) {
                incompatible("needs t_end >= pi/2 to cover a full period of S_J");
            }
            break;
        case CheckKind::eur_chain: break;
        case CheckKind::free_monotone:
            if (!std::holds_alternative<FreePotential>(cfg.potential)) incompatible("needs a free potential");
            if (!gaussian) incompatible("needs a Gaussian initial state");
            break;
        case CheckKind::cat_periodicity:
            if (!default_units(cfg.potential)) incompatible("needs a harmonic potential with mass = omega = 1");
            if (cfg.time.t_end < 4.0 * std::numbers::pi - 1e-9) {
                incompatible("needs t_end >= 4*pi to compare S_J(t) with S_J(t + 2*pi) over [0, 2*pi]");
            }
            break;
        }
    }
}

} // namespace wavelab
