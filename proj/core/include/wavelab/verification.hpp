#pragma once

#include <span>
#include <string>
#include <vector>

#include "wavelab/entropy.hpp"
#include "wavelab/scenario_config.hpp"

namespace wavelab {

struct VerificationOutcome {
    std::string check;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    /// Time of the worst deviation.
    double locus = 0.0;
    std::string detail;
};

using Series = std::span<const EntropyReport>;

/// max |S_J(t) - (1 + ln pi)|.
VerificationOutcome check_coherent_constant(Series series, double tolerance);

/// max |S_J(t) - squeezed_joint_entropy(gamma, t)|.
VerificationOutcome check_squeezed_curve(Series series, double gamma, double tolerance);

/// Observed min/max of S_J against sj_bounds(gamma); deviation is the larger
/// of the two endpoint mismatches.
VerificationOutcome check_sj_bounds(Series series, double gamma, double tolerance);

/// Largest violation of S_q + S_p >= 1 + ln pi, dX dP >= 1/2 and
/// power_product >= 1 (zero when all hold).
VerificationOutcome check_eur_chain(Series series, double tolerance);

/// Largest decrease S_J(t_k) - S_J(t_{k+1}) between consecutive samples (zero if non-decreasing).
VerificationOutcome check_free_monotone(Series series, double tolerance);

/// max |S_J(t) - S_J(t + period)| over samples with t + period inside the
/// series; the shifted value is interpolated with a cubic through the
/// neighbouring samples.
VerificationOutcome check_periodicity(Series series, double period, double tolerance, std::string name = "cat_periodicity");

/// Cubic Lagrange interpolation of S_J at time t (t inside the sampled range).
double interpolate_joint_entropy(Series series, double t);

/// Sample times of strict interior local maxima of S_J.
std::vector<double> joint_entropy_maxima(Series series);

/// Runs every check requested by the scenario.
std::vector<VerificationOutcome> verify(const ScenarioConfig& cfg, Series series);

} // namespace wavelab
