#include "wavelab/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "wavelab/errors.hpp"
#include "wavelab/states.hpp"

namespace wavelab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string("potential ") + what + " must be positive");
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// Momentum weight beyond which the per-step kinetic phase exceeds pi.
double wrapped_momentum_weight(const WaveFunction& wf, double dt, double m) {
    SpectralTransform transform(wf.grid());
    const WaveFunction phi = transform.forward(wf);
    double weight = 0.0;
    for (std::size_t k = 0; k < phi.size(); ++k) {
        const double p = wf.grid().p(k);
        if (std::abs(dt) * p * p / (2.0 * m) > std::numbers::pi) weight += std::norm(phi[k]);
    }
    return weight * wf.grid().dp();
}

} // namespace

void validate(const Potential& v) {
    std::visit(overloaded{
                   [](const FreePotential& f) { require_positive(f.mass, "mass"); },
                   [](const HarmonicPotential& h) {
                       require_positive(h.mass, "mass");
                       require_positive(h.omega, "omega");
                   },
                   [](const TabulatedPotential& t) {
                       require_positive(t.mass, "mass");
                       if (t.values.empty()) throw ConfigError("tabulated potential has no values");
                       if (!(t.x_max > t.x_min)) throw ConfigError("tabulated potential needs x_max > x_min");
                       for (double val : t.values) {
                           if (!std::isfinite(val)) throw ConfigError("tabulated potential values must be finite");
                       }
                   },
               },
               v);
}

double mass(const Potential& v) {
    return std::visit([](const auto& p) { return p.mass; }, v);
}

double evaluate(const Potential& v, double x) {
    return std::visit(overloaded{
                          [](const FreePotential&) { return 0.0; },
                          [x](const HarmonicPotential& h) { return 0.5 * h.mass * h.omega * h.omega * x * x; },
                          [x](const TabulatedPotential& t) {
                              const double cell = (t.x_max - t.x_min) / static_cast<double>(t.values.size());
                              const double pos = std::floor((x - t.x_min) / cell);
                              const auto last = static_cast<double>(t.values.size() - 1);
                              return t.values[static_cast<std::size_t>(std::clamp(pos, 0.0, last))];
                          },
                      },
                      v);
}

std::vector<double> sample(const Potential& v, const Grid& grid) {
    std::vector<double> out(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) out[j] = evaluate(v, grid.x(j));
    return out;
}

std::string describe(const Potential& v) {
    return std::visit(overloaded{
                          [](const FreePotential& f) { return "free{m=" + fmt(f.mass) + "}"; },
                          [](const HarmonicPotential& h) {
                              return "harmonic{m=" + fmt(h.mass) + ", omega=" + fmt(h.omega) + "}";
                          },
                          [](const TabulatedPotential& t) {
                              return "tabulated{" + std::to_string(t.values.size()) + " values on [" + fmt(t.x_min) +
                                     ", " + fmt(t.x_max) + "), m=" + fmt(t.mass) + "}";
                          },
                      },
                      v);
}

SplitOperatorPropagator::SplitOperatorPropagator(const Grid& grid, const Potential& potential, double dt)
    : grid_(grid), dt_(dt), transform_(grid) {
    validate(potential);
    if (!std::isfinite(dt) || dt == 0.0) throw ConfigError("time step must be finite and nonzero");
    const double m = mass(potential);
    const double p_max = std::abs(grid.p_min());
    max_kinetic_phase_ = std::abs(dt) * p_max * p_max / (2.0 * m);

    const auto v = sample(potential, grid);
    half_potential_.resize(grid.size());
    kinetic_.resize(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) half_potential_[j] = std::polar(1.0, -0.5 * v[j] * dt);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double p = grid.p(k);
        kinetic_[k] = std::polar(1.0, -p * p * dt / (2.0 * m));
    }
}

void SplitOperatorPropagator::step(WaveFunction& wf) {
    wf.require(Representation::position, "step");
    if (!(wf.grid() == grid_)) throw ContractError("step: wavefunction grid does not match propagator grid");
    auto& amps = wf.mutable_amplitudes();
    const std::size_t n = amps.size();
    for (std::size_t j = 0; j < n; ++j) amps[j] *= half_potential_[j];
    transform_.forward(amps);
    for (std::size_t k = 0; k < n; ++k) amps[k] *= kinetic_[k];
    transform_.inverse(amps);
    bool finite = true;
    for (std::size_t j = 0; j < n; ++j) {
        amps[j] *= half_potential_[j];
        finite &= std::isfinite(amps[j].real()) && std::isfinite(amps[j].imag());
    }
    if (!finite) throw NumericalError("non-finite amplitude after time step");
}

WaveFunction step(const WaveFunction& wf, const Potential& potential, double dt) {
    SplitOperatorPropagator propagator(wf.grid(), potential, dt);
    WaveFunction out = wf;
    propagator.step(out);
    return out;
}

EvolutionLog evolve_observed(const WaveFunction& wf0, const Potential& potential, double dt, double t_end,
                             std::size_t sample_every, const SampleObserver& observer) {
    wf0.require(Representation::position, "evolve");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("evolve: dt must be positive");
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw ConfigError("evolve: t_end must be nonnegative");
    if (sample_every < 1) throw ConfigError("evolve: sample_every must be >= 1");

    const auto full_steps = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
    const double remainder = t_end - static_cast<double>(full_steps) * dt;
    const bool has_tail = remainder > 1e-9 * dt;

    EvolutionLog log;
    SplitOperatorPropagator propagator(wf0.grid(), potential, dt);
    if (propagator.max_kinetic_phase() > std::numbers::pi) {
        const double weight = wrapped_momentum_weight(wf0, dt, mass(potential));
        if (weight > 1e-8) {
            log.warnings.push_back("kinetic phase per step reaches " + fmt(propagator.max_kinetic_phase()) +
                                   " rad and the state carries momentum weight " + fmt(weight) +
                                   " where it exceeds pi; reduce dt");
        }
    }

    bool leak_reported = false;
    auto emit = [&](double t, const WaveFunction& wf) {
        const double edge = wf.edge_amplitude();
        if (!leak_reported && edge > edge_amplitude_limit) {
            log.warnings.push_back("|psi| = " + fmt(edge) + " at the grid edge at t = " + fmt(t) +
                                   "; periodic wrap-around may contaminate results");
            leak_reported = true;
        }
        observer(t, wf);
    };

    WaveFunction wf = wf0;
    emit(0.0, wf);
    for (std::size_t k = 1; k <= full_steps; ++k) {
        try {
            propagator.step(wf);
        } catch (const NumericalError& e) {
            throw NumericalError(std::string(e.what()) + " at t = " + fmt(static_cast<double>(k) * dt));
        }
        if (k % sample_every == 0 || (k == full_steps && !has_tail)) emit(static_cast<double>(k) * dt, wf);
    }
    log.steps = full_steps;
    log.final_time = static_cast<double>(full_steps) * dt;
    if (has_tail) {
        SplitOperatorPropagator tail(wf0.grid(), potential, remainder);
        tail.step(wf);
        ++log.steps;
        log.final_time = t_end;
        emit(t_end, wf);
    }
    return log;
}

Trajectory evolve(const WaveFunction& wf0, const Potential& potential, double dt, double t_end,
                  std::size_t sample_every) {
    Trajectory traj;
    traj.dt = dt;
    traj.scheme = strang_scheme;
    auto log = evolve_observed(wf0, potential, dt, t_end, sample_every, [&](double t, const WaveFunction& wf) {
        traj.times.push_back(t);
        traj.states.push_back(wf);
    });
    traj.warnings = std::move(log.warnings);
    return traj;
}

double energy(const WaveFunction& wf, const Potential& potential) {
    wf.require(Representation::position, "energy");
    const Grid& grid = wf.grid();
    const WaveFunction phi = fourier_transform(wf);
    const double m = mass(potential);
    double kinetic = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double p = grid.p(k);
        kinetic += p * p * std::norm(phi[k]);
    }
    kinetic *= grid.dp() / (2.0 * m);
    double pot = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) pot += evaluate(potential, grid.x(j)) * std::norm(wf[j]);
    pot *= grid.dx();
    return kinetic + pot;
}

} // namespace wavelab
