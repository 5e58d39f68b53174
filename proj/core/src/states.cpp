#include "wavelab/states.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "wavelab/errors.hpp"

namespace wavelab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw ConfigError(std::string("state parameter ") + name + " must be finite");
}

void require_width(double gamma) {
    require_finite(gamma, "gamma");
    if (gamma <= 0.0) throw ConfigError("state width gamma must be positive, got " + std::to_string(gamma));
}

Complex gaussian_amplitude(const GaussianState& g, double x) {
    const double norm = std::pow(g.gamma * g.gamma * std::numbers::pi, -0.25);
    const double s = x - g.x0;
    return norm * std::exp(-s * s / (2.0 * g.gamma * g.gamma)) * std::polar(1.0, g.p0 * s);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

void validate(const StateSpec& spec) {
    std::visit(overloaded{
                   [](const GaussianState& s) {
                       require_finite(s.x0, "x0");
                       require_finite(s.p0, "p0");
                       require_width(s.gamma);
                   },
                   [](const CoherentState& s) {
                       require_finite(s.q0, "q0");
                       require_finite(s.p0, "p0");
                   },
                   [](const SqueezedState& s) { require_width(s.gamma); },
                   [](const CatState& s) {
                       require_finite(s.q0, "q0");
                       require_finite(s.p0, "p0");
                       require_finite(s.relative_phase, "relative_phase");
                   },
               },
               spec);
}

std::optional<GaussianState> as_gaussian(const StateSpec& spec) {
    return std::visit(overloaded{
                          [](const GaussianState& s) -> std::optional<GaussianState> { return s; },
                          [](const CoherentState& s) -> std::optional<GaussianState> {
                              return GaussianState{s.q0, s.p0, 1.0};
                          },
                          [](const SqueezedState& s) -> std::optional<GaussianState> {
                              return GaussianState{0.0, 0.0, s.gamma};
                          },
                          [](const CatState&) -> std::optional<GaussianState> { return std::nullopt; },
                      },
                      spec);
}

std::string describe(const StateSpec& spec) {
    return std::visit(overloaded{
                          [](const GaussianState& s) {
                              return "gaussian{x0=" + fmt(s.x0) + ", p0=" + fmt(s.p0) + ", gamma=" + fmt(s.gamma) + "}";
                          },
                          [](const CoherentState& s) { return "coherent{q0=" + fmt(s.q0) + ", p0=" + fmt(s.p0) + "}"; },
                          [](const SqueezedState& s) { return "squeezed{gamma=" + fmt(s.gamma) + "}"; },
                          [](const CatState& s) {
                              return "cat{q0=" + fmt(s.q0) + ", p0=" + fmt(s.p0) + ", phase=" + fmt(s.relative_phase) +
                                     "}";
                          },
                      },
                      spec);
}

WaveFunction make_state(const StateSpec& spec, const Grid& grid) {
    validate(spec);
    std::vector<Complex> amps(grid.size());
    if (const auto g = as_gaussian(spec)) {
        for (std::size_t j = 0; j < grid.size(); ++j) amps[j] = gaussian_amplitude(*g, grid.x(j));
    } else {
        const auto& cat = std::get<CatState>(spec);
        const GaussianState plus{cat.q0, cat.p0, 1.0};
        const GaussianState minus{cat.q0, -cat.p0, 1.0};
        const Complex weight = std::polar(1.0, cat.relative_phase);
        double raw_norm = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            amps[j] = gaussian_amplitude(plus, grid.x(j)) + weight * gaussian_amplitude(minus, grid.x(j));
            raw_norm += std::norm(amps[j]);
        }
        // each component has unit norm; a vanishing sum means they cancel
        if (raw_norm * grid.dx() < 1e-12) {
            throw ConfigError(describe(spec) + ": the two coherent components cancel");
        }
    }
    WaveFunction wf = [&] {
        try {
            return WaveFunction::normalized(grid, Representation::position, std::move(amps));
        } catch (const NumericalError& e) {
            throw ConfigError(describe(spec) + " cannot be normalized on this grid: " + e.what());
        }
    }();
    const double edge = wf.edge_amplitude();
    if (edge > edge_amplitude_limit) {
        throw ConfigError(describe(spec) + " leaks past the grid edge (|psi| = " + fmt(edge) + " at [" +
                          fmt(grid.x_min()) + ", " + fmt(grid.x_max()) + "]); widen the grid");
    }
    return wf;
}

} // namespace wavelab
