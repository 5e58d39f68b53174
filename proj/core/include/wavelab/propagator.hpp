#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "wavelab/fourier.hpp"
#include "wavelab/grid.hpp"

namespace wavelab {

struct FreePotential {
    double mass = 1.0;
};

/// V(x) = m omega^2 x^2 / 2.
struct HarmonicPotential {
    double mass = 1.0;
    double omega = 1.0;
};

/// Values on a uniform table over [x_min, x_max); sampled piecewise-constant
/// (cell containing x, clamped at the ends).
struct TabulatedPotential {
    double x_min = 0.0;
    double x_max = 0.0;
    std::vector<double> values;
    double mass = 1.0;
};

using Potential = std::variant<FreePotential, HarmonicPotential, TabulatedPotential>;

/// Throws ConfigError for nonpositive mass/frequency or malformed tables.
void validate(const Potential& v);
double mass(const Potential& v);
double evaluate(const Potential& v, double x);
std::vector<double> sample(const Potential& v, const Grid& grid);
std::string describe(const Potential& v);

/// Second-order Strang splitting for H = P^2/2m + V(X):
///   psi <- e^{-i V dt/2} F^{-1} e^{-i p^2 dt/2m} F e^{-i V dt/2} psi.
/// Both factors are diagonal phases, so the norm is preserved to round-off.
/// dt may be negative (backward evolution).
class SplitOperatorPropagator {
public:
    SplitOperatorPropagator(const Grid& grid, const Potential& potential, double dt);

    /// Advances a position-representation wavefunction by dt in place.
    /// Throws NumericalError if the result contains NaN/Inf.
    void step(WaveFunction& wf);

    double dt() const noexcept { return dt_; }
    const Grid& grid() const noexcept { return grid_; }
    /// |dt| p_max^2 / 2m, the kinetic phase at the momentum-lattice edge.
    double max_kinetic_phase() const noexcept { return max_kinetic_phase_; }

private:
    Grid grid_;
    double dt_;
    double max_kinetic_phase_;
    SpectralTransform transform_;
    std::vector<Complex> half_potential_;
    std::vector<Complex> kinetic_;
};

/// One Strang step; builds a throwaway propagator.
WaveFunction step(const WaveFunction& wf, const Potential& potential, double dt);

struct Trajectory {
    std::vector<double> times;
    std::vector<WaveFunction> states;
    double dt = 0.0;
    std::string scheme;
    std::vector<std::string> warnings;
};

/// Runtime advisories collected while evolving (edge leakage, kinetic phase wrap).
struct EvolutionLog {
    std::size_t steps = 0;
    double final_time = 0.0;
    std::vector<std::string> warnings;
};

using SampleObserver = std::function<void(double t, const WaveFunction& wf)>;

/// Steps wf0 from t = 0 to t_end with step dt, calling observer at t = 0,
/// at every sample_every-th step, and at the final time. The final step is
/// shortened so the last sample lands on t_end exactly.
EvolutionLog evolve_observed(const WaveFunction& wf0, const Potential& potential, double dt, double t_end,
                             std::size_t sample_every, const SampleObserver& observer);

/// evolve_observed collecting every sample.
Trajectory evolve(const WaveFunction& wf0, const Potential& potential, double dt, double t_end,
                  std::size_t sample_every);

/// <P^2>/2m from the momentum density plus <V> from the position density.
double energy(const WaveFunction& wf, const Potential& potential);

inline constexpr const char* strang_scheme = "strang(V/2,T,V/2)";

} // namespace wavelab
