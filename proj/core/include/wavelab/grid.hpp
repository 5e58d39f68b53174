#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace wavelab {

using Complex = std::complex<double>;

enum class Representation { position, momentum };

std::string_view to_string(Representation rep);

/// Uniform lattice x_j = x_min + j*dx, j in [0, n), together with its
/// conjugate momentum lattice p_k = -pi/dx + k*dp, dp = 2*pi/(n*dx).
///
/// Units are hbar = 1 throughout. The lattice is periodic for the purposes
/// of the discrete transform, so states must decay well before the edges.
class Grid {
public:
    /// Throws ConfigError unless n is a power of two >= 8 and x_max > x_min.
    Grid(std::size_t n, double x_min, double x_max);

    std::size_t size() const noexcept { return n_; }
    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_min_ + static_cast<double>(n_) * dx_; }
    double dx() const noexcept { return dx_; }
    double dp() const noexcept { return dp_; }
    double p_min() const noexcept { return p_min_; }

    double x(std::size_t j) const noexcept { return x_min_ + static_cast<double>(j) * dx_; }
    double p(std::size_t k) const noexcept { return p_min_ + static_cast<double>(k) * dp_; }

    double spacing(Representation rep) const noexcept {
        return rep == Representation::position ? dx_ : dp_;
    }
    double coordinate(Representation rep, std::size_t i) const noexcept {
        return rep == Representation::position ? x(i) : p(i);
    }

    std::vector<double> positions() const;
    std::vector<double> momenta() const;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t n_;
    double x_min_;
    double dx_;
    double dp_;
    double p_min_;
};

Grid build_grid(std::size_t n, double x_min, double x_max);

/// Complex amplitudes on a Grid in a given representation. Amplitudes are
/// continuum-scaled: sum |psi_j|^2 * spacing approximates the L2 norm.
class WaveFunction {
public:
    WaveFunction(Grid grid, Representation rep, std::vector<Complex> amplitudes);

    /// Builds and rescales to unit norm. Throws NumericalError on zero norm
    /// or non-finite amplitudes.
    static WaveFunction normalized(Grid grid, Representation rep, std::vector<Complex> amplitudes);

    const Grid& grid() const noexcept { return grid_; }
    Representation representation() const noexcept { return rep_; }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    std::vector<Complex>& mutable_amplitudes() noexcept { return amplitudes_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }
    const Complex& operator[](std::size_t i) const noexcept { return amplitudes_[i]; }

    double spacing() const noexcept { return grid_.spacing(rep_); }
    double norm() const;

    /// Largest |psi| over the first and last `width` lattice points.
    double edge_amplitude(std::size_t width = 1) const;

    void require(Representation rep, std::string_view operation) const;

private:
    Grid grid_;
    Representation rep_;
    std::vector<Complex> amplitudes_;
};

/// Nonnegative profile with unit mass on one axis of a Grid.
class Density {
public:
    /// Throws NumericalError on negative, non-finite, or non-unit-mass input.
    Density(Grid grid, Representation axis, std::vector<double> values);

    const Grid& grid() const noexcept { return grid_; }
    Representation axis() const noexcept { return axis_; }
    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    double spacing() const noexcept { return grid_.spacing(axis_); }
    double coordinate(std::size_t i) const noexcept { return grid_.coordinate(axis_, i); }
    double mass() const;

    static constexpr double mass_tolerance = 1e-9;

private:
    Grid grid_;
    Representation axis_;
    std::vector<double> values_;
};

Density density(const WaveFunction& wf);

struct Moments {
    double mean;
    double variance;
};

/// Rectangle-rule mean and variance. Throws NumericalError if the variance
/// comes out below -1e-12; tiny negative round-off is clamped to zero.
Moments moments(const Density& d);

} // namespace wavelab
