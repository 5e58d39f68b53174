#pragma once

#include "wavelab/fourier.hpp"
#include "wavelab/grid.hpp"

namespace wavelab {

/// Densities below this value contribute nothing to -sum rho ln rho (0 ln 0 = 0).
inline constexpr double entropy_floor = 1e-300;

/// Rectangle-rule -\int rho ln rho, in nats. Throws NumericalError on NaN.
double differential_entropy(const Density& d);

/// Per-sample information-theoretic diagnostics of a pure state.
///
/// joint_entropy is S_q + S_p (the Leipnik entropy without its additive
/// constant). The slacks are nonnegative for every admissible state:
///   eur_slack        = S_q + S_p - (1 + ln pi)
///   heisenberg_slack = dX dP - 1/2
///   power_product    = 2 pi e dX dP exp(-(S_q + S_p))  >= 1,
/// with power_product == 1 exactly for Gaussian states.
struct EntropyReport {
    double t = 0.0;
    double position_entropy = 0.0;
    double momentum_entropy = 0.0;
    double joint_entropy = 0.0;
    double dx = 0.0;
    double dp = 0.0;
    double power_product = 0.0;
    double eur_slack = 0.0;
    double heisenberg_slack = 0.0;
    /// Position variance, kept alongside dX for oracle comparisons.
    double position_variance = 0.0;
    double position_mean = 0.0;
};

EntropyReport entropy_report(const WaveFunction& wf, double t = 0.0);
/// Same, reusing a transform built for wf's grid.
EntropyReport entropy_report(const WaveFunction& wf, SpectralTransform& transform, double t = 0.0);

struct EntropyBound {
    double entropy;
    /// (1/2) ln(2 pi e variance): the entropy of the Gaussian with the same variance.
    double bound;
};

/// Throws NumericalError if the density has zero variance.
EntropyBound gaussian_entropy_bound(const Density& d);

} // namespace wavelab
