#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "quadrature_oracles.hpp"
#include "wavelab/entropy.hpp"
#include "wavelab/errors.hpp"
#include "wavelab/oracles.hpp"
#include "wavelab/states.hpp"

namespace wavelab {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double e = std::numbers::e;

Density gaussian_density(const Grid& g, double mean, double variance) {
    std::vector<double> v(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double s = g.x(j) - mean;
        v[j] = std::exp(-s * s / (2 * variance)) / std::sqrt(2 * pi * variance);
    }
    return Density(g, Representation::position, std::move(v));
}

Density uniform_unit_interval(const Grid& g) {
    std::vector<double> v(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) v[j] = (g.x(j) >= 0.0 && g.x(j) < 1.0) ? 1.0 : 0.0;
    return Density(g, Representation::position, std::move(v));
}

TEST(DifferentialEntropy, GroundStateGaussian) {
    EXPECT_NEAR(differential_entropy(gaussian_density(Grid(1024, -12, 12), 0, 0.5)), 1.0723649, 5e-8);
    EXPECT_NEAR(differential_entropy(gaussian_density(Grid(1024, -12, 12), 0, 0.5)), 0.5 * (1 + std::log(pi)), 1e-12);
}

TEST(DifferentialEntropy, UniformUnitInterval) {
    // 1024 points on [-4, 4): the unit interval holds exactly 128 cells
    EXPECT_NEAR(differential_entropy(uniform_unit_interval(Grid(1024, -4, 4))), 0.0, 1e-15);
}

TEST(DifferentialEntropy, WideGaussianAgainstDenseQuadrature) {
    const double variance = 2.0;
    const double reference = testing::direct_entropy(
        [=](double x) { return std::exp(-x * x / (2 * variance)) / std::sqrt(2 * pi * variance); }, -30, 30);
    EXPECT_NEAR(reference, 0.5 * std::log(4 * pi * e), 1e-10);
    EXPECT_NEAR(reference, 1.7655121, 5e-8);
    EXPECT_NEAR(differential_entropy(gaussian_density(Grid(2048, -30, 30), 0, variance)), reference, 1e-10);
}

TEST(DifferentialEntropy, TranslationByLatticeMultiple) {
    const Grid g(1024, -12, 12);
    const Density a = gaussian_density(g, 0.0, 0.7);
    const Density b = gaussian_density(g, 40 * g.dx(), 0.7);
    EXPECT_NEAR(differential_entropy(a), differential_entropy(b), 1e-12);
}

TEST(DifferentialEntropy, FloorHandlesUnderflowedTails) {
    const Grid g(1024, -40, 40);
    // density underflows to exactly zero over most of the box
    const Density d = gaussian_density(g, 0.0, 0.05);
    EXPECT_NEAR(differential_entropy(d), oracle::gaussian_entropy(0.05), 1e-9);
}

TEST(DifferentialEntropy, GridRefinement) {
    const double coarse = differential_entropy(gaussian_density(Grid(512, -12, 12), 0.3, 0.8));
    const double fine = differential_entropy(gaussian_density(Grid(1024, -12, 12), 0.3, 0.8));
    EXPECT_NEAR(coarse, fine, 1e-8);
}

TEST(EntropyReport, CoherentSaturatesEveryInequality) {
    const EntropyReport r = entropy_report(make_state(CoherentState{1, 0}, Grid(1024, -12, 12)));
    EXPECT_NEAR(r.position_entropy, 0.5 * (1 + std::log(pi)), 1e-9);
    EXPECT_NEAR(r.momentum_entropy, 0.5 * (1 + std::log(pi)), 1e-9);
    EXPECT_NEAR(r.joint_entropy, 1 + std::log(pi), 1e-9);
    EXPECT_NEAR(r.dx * r.dp, 0.5, 1e-9);
    EXPECT_NEAR(r.power_product, 1.0, 1e-9);
    EXPECT_NEAR(r.eur_slack, 0.0, 1e-9);
    EXPECT_NEAR(r.heisenberg_slack, 0.0, 1e-9);
    EXPECT_NEAR(r.position_mean, 1.0, 1e-12);
}

TEST(EntropyReport, SqueezedAtTimeZero) {
    const EntropyReport r = entropy_report(make_state(SqueezedState{2}, Grid(1024, -16, 16)), 0.0);
    EXPECT_NEAR(r.joint_entropy, 1 + std::log(pi), 1e-9);
    EXPECT_NEAR(r.position_entropy, oracle::gaussian_entropy(2.0), 1e-9);
    EXPECT_NEAR(r.momentum_entropy, oracle::gaussian_entropy(0.125), 1e-9);
    EXPECT_NEAR(r.power_product, 1.0, 1e-9);
    EXPECT_NEAR(r.heisenberg_slack, 0.0, 1e-9);
}

TEST(EntropyReport, CatStateIsStrictlyAboveBound) {
    const EntropyReport r = entropy_report(make_state(CatState{2, 2}, Grid(1024, -12, 12)));
    EXPECT_GT(r.eur_slack, 1e-3);
    EXPECT_GT(r.heisenberg_slack, 0.0);
    EXPECT_GT(r.power_product, 1.0);
    EXPECT_NEAR(r.joint_entropy, r.position_entropy + r.momentum_entropy, 1e-15);
}

TEST(EntropyReport, ChainHoldsForRandomAdmissibleStates) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> centre(-2.5, 2.5);
    std::uniform_real_distribution<double> width(0.4, 2.5);
    std::uniform_real_distribution<double> phase(0, 2 * pi);
    const Grid g(2048, -24, 24);
    for (int i = 0; i < 30; ++i) {
        const StateSpec spec = (i % 2 == 0) ? StateSpec{GaussianState{centre(rng), centre(rng), width(rng)}}
                                            : StateSpec{CatState{centre(rng), centre(rng), phase(rng)}};
        const EntropyReport r = entropy_report(make_state(spec, g));
        EXPECT_GE(r.eur_slack, -1e-6) << describe(spec);
        EXPECT_GE(r.heisenberg_slack, -1e-6) << describe(spec);
        EXPECT_GE(r.power_product, 1 - 1e-6) << describe(spec);
        if (i % 2 == 0) EXPECT_NEAR(r.power_product, 1.0, 1e-9) << describe(spec);
    }
}

TEST(EntropyReport, RequiresPositionRepresentation) {
    const Grid g(16, -4, 4);
    const WaveFunction wf(g, Representation::momentum, std::vector<Complex>(16, 0.0));
    EXPECT_THROW(entropy_report(wf), ContractError);
}

TEST(GaussianEntropyBound, EqualityForGaussian) {
    const auto b = gaussian_entropy_bound(gaussian_density(Grid(1024, -12, 12), 0.0, 0.5));
    EXPECT_NEAR(b.entropy, 1.0723649, 5e-8);
    EXPECT_NEAR(b.entropy, b.bound, 1e-8);
}

TEST(GaussianEntropyBound, UniformIsStrictlyBelow) {
    const auto b = gaussian_entropy_bound(uniform_unit_interval(Grid(4096, -4, 4)));
    EXPECT_NEAR(b.entropy, 0.0, 1e-15);
    // lattice variance of 512 equally weighted cells: (1 - 1/512^2)/12
    EXPECT_NEAR(b.bound, 0.5 * std::log(2 * pi * e / 12), 1e-5);
    EXPECT_NEAR(b.bound, 0.1765, 1e-4);
    EXPECT_LT(b.entropy, b.bound);
}

TEST(GaussianEntropyBound, CatIsStrictlyBelow) {
    const auto b = gaussian_entropy_bound(density(make_state(CatState{2, 2}, Grid(1024, -12, 12))));
    EXPECT_LT(b.entropy, b.bound - 1e-3);
}

TEST(GaussianEntropyBound, ZeroVarianceIsAnError) {
    const Grid g(8, -4, 4);
    std::vector<double> v(8, 0.0);
    v[3] = 1.0;
    EXPECT_THROW(gaussian_entropy_bound(Density(g, Representation::position, v)), NumericalError);
}

} // namespace
} // namespace wavelab
