#include "wavelab/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "wavelab/errors.hpp"

namespace wavelab {

std::string_view to_string(Representation rep) {
    return rep == Representation::position ? "position" : "momentum";
}

Grid::Grid(std::size_t n, double x_min, double x_max) : n_(n), x_min_(x_min) {
    if (n < 8 || !std::has_single_bit(n)) {
        throw ConfigError("grid point count must be a power of two >= 8, got " + std::to_string(n));
    }
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
        throw ConfigError("grid interval must satisfy x_max > x_min, got [" + std::to_string(x_min) + ", " +
                          std::to_string(x_max) + "]");
    }
    dx_ = (x_max - x_min) / static_cast<double>(n);
    dp_ = 2.0 * std::numbers::pi / (static_cast<double>(n) * dx_);
    p_min_ = -std::numbers::pi / dx_;
}

std::vector<double> Grid::positions() const {
    std::vector<double> out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = x(j);
    return out;
}

std::vector<double> Grid::momenta() const {
    std::vector<double> out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = p(k);
    return out;
}

Grid build_grid(std::size_t n, double x_min, double x_max) { return Grid(n, x_min, x_max); }

WaveFunction::WaveFunction(Grid grid, Representation rep, std::vector<Complex> amplitudes)
    : grid_(grid), rep_(rep), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != grid_.size()) {
        throw ContractError("wavefunction has " + std::to_string(amplitudes_.size()) +
                            " amplitudes for a grid of " + std::to_string(grid_.size()));
    }
}

WaveFunction WaveFunction::normalized(Grid grid, Representation rep, std::vector<Complex> amplitudes) {
    WaveFunction wf(grid, rep, std::move(amplitudes));
    const double nrm = wf.norm();
    if (!std::isfinite(nrm)) throw NumericalError("non-finite amplitudes in wavefunction");
    if (nrm == 0.0) throw NumericalError("cannot normalize a zero wavefunction");
    const double scale = 1.0 / std::sqrt(nrm);
    for (auto& a : wf.amplitudes_) a *= scale;
    return wf;
}

double WaveFunction::norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes_) sum += std::norm(a);
    return sum * spacing();
}

double WaveFunction::edge_amplitude(std::size_t width) const {
    width = std::min(width, amplitudes_.size() / 2);
    double worst = 0.0;
    for (std::size_t i = 0; i < width; ++i) {
        worst = std::max({worst, std::abs(amplitudes_[i]), std::abs(amplitudes_[amplitudes_.size() - 1 - i])});
    }
    return worst;
}

void WaveFunction::require(Representation rep, std::string_view operation) const {
    if (rep_ != rep) {
        throw ContractError(std::string(operation) + " expects a " + std::string(to_string(rep)) +
                            "-representation wavefunction, got " + std::string(to_string(rep_)));
    }
}

Density::Density(Grid grid, Representation axis, std::vector<double> values)
    : grid_(grid), axis_(axis), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        throw ContractError("density has " + std::to_string(values_.size()) + " values for a grid of " +
                            std::to_string(grid_.size()));
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw NumericalError("non-finite density value");
        if (v < 0.0) throw NumericalError("negative density value " + std::to_string(v));
    }
    const double m = mass();
    if (std::abs(m - 1.0) > mass_tolerance) {
        throw NumericalError("density does not have unit mass (mass = " + std::to_string(m) + ")");
    }
}

double Density::mass() const {
    double sum = 0.0;
    for (double v : values_) sum += v;
    return sum * spacing();
}

Density density(const WaveFunction& wf) {
    std::vector<double> values(wf.size());
    const auto amps = wf.amplitudes();
    std::transform(amps.begin(), amps.end(), values.begin(), [](const Complex& a) { return std::norm(a); });
    return Density(wf.grid(), wf.representation(), std::move(values));
}

Moments moments(const Density& d) {
    const double h = d.spacing();
    double mean = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) mean += d.coordinate(i) * d[i];
    mean *= h;
    double variance = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double dev = d.coordinate(i) - mean;
        variance += dev * dev * d[i];
    }
    variance *= h;
    if (std::isnan(variance) || variance < -1e-12) {
        throw NumericalError("negative variance " + std::to_string(variance) + " from density quadrature");
    }
    return {mean, std::max(variance, 0.0)};
}

} // namespace wavelab
