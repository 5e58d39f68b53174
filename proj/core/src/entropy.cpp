#include "wavelab/entropy.hpp"

#include <cmath>
#include <numbers>

#include "wavelab/errors.hpp"

namespace wavelab {

double differential_entropy(const Density& d) {
    double sum = 0.0;
    for (double v : d.values()) {
        if (std::isnan(v)) throw NumericalError("NaN in density passed to differential_entropy");
        if (v >= entropy_floor) sum -= v * std::log(v);
    }
    return sum * d.spacing();
}

EntropyReport entropy_report(const WaveFunction& wf, double t) {
    wf.require(Representation::position, "entropy_report");
    SpectralTransform transform(wf.grid());
    return entropy_report(wf, transform, t);
}

EntropyReport entropy_report(const WaveFunction& wf, SpectralTransform& transform, double t) {
    wf.require(Representation::position, "entropy_report");
    const Density rho = density(wf);
    const Density rho_tilde = density(transform.forward(wf));
    const Moments mx = moments(rho);
    const Moments mp = moments(rho_tilde);

    EntropyReport r;
    r.t = t;
    r.position_entropy = differential_entropy(rho);
    r.momentum_entropy = differential_entropy(rho_tilde);
    r.joint_entropy = r.position_entropy + r.momentum_entropy;
    r.position_mean = mx.mean;
    r.position_variance = mx.variance;
    r.dx = std::sqrt(mx.variance);
    r.dp = std::sqrt(mp.variance);
    r.power_product = 2.0 * std::numbers::pi * std::numbers::e * r.dx * r.dp * std::exp(-r.joint_entropy);
    r.eur_slack = r.joint_entropy - (1.0 + std::log(std::numbers::pi));
    r.heisenberg_slack = r.dx * r.dp - 0.5;
    return r;
}

EntropyBound gaussian_entropy_bound(const Density& d) {
    const Moments m = moments(d);
    if (m.variance <= 0.0) throw NumericalError("gaussian_entropy_bound: density has zero variance");
    return {differential_entropy(d), 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * m.variance)};
}

} // namespace wavelab
