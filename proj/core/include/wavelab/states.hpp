#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <variant>

#include "wavelab/grid.hpp"

namespace wavelab {

/// psi(x) = (gamma^2 pi)^{-1/4} exp(-(x - x0)^2 / (2 gamma^2)) exp(i p0 (x - x0)).
/// Position spread gamma/sqrt(2), momentum spread 1/(gamma sqrt(2)).
struct GaussianState {
    double x0 = 0.0;
    double p0 = 0.0;
    double gamma = 1.0;
};

/// Displaced oscillator ground state (hbar = m = omega = 1): a GaussianState with gamma = 1.
struct CoherentState {
    double q0 = 0.0;
    double p0 = 0.0;
};

/// Centred Gaussian of width gamma; gamma = 1 is the oscillator ground state.
struct SqueezedState {
    double gamma = 1.0;
};

/// Normalized psi_coh(q0, p0) + e^{i phase} psi_coh(q0, -p0): two coherent
/// packets at the same centre with opposite mean momenta.
struct CatState {
    double q0 = 0.0;
    double p0 = 0.0;
    double relative_phase = std::numbers::pi;
};

using StateSpec = std::variant<GaussianState, CoherentState, SqueezedState, CatState>;

/// Throws ConfigError for gamma <= 0 or non-finite parameters.
void validate(const StateSpec& spec);

/// Gaussian-family states reduced to their (x0, p0, gamma) form; nullopt for cat states.
std::optional<GaussianState> as_gaussian(const StateSpec& spec);

std::string describe(const StateSpec& spec);

/// Largest |psi| tolerated at either grid edge for a freshly built state.
inline constexpr double edge_amplitude_limit = 1e-8;

/// Samples the state on the grid in position representation and normalizes
/// it. Throws ConfigError for invalid parameters or when the state has not
/// decayed below edge_amplitude_limit at the grid edges.
WaveFunction make_state(const StateSpec& spec, const Grid& grid);

} // namespace wavelab
