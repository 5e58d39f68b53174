#include "wavelab/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "wavelab/errors.hpp"
#include "wavelab/oracles.hpp"

namespace wavelab {

namespace {

VerificationOutcome make_outcome(std::string name, double deviation, double tolerance, double locus,
                                 std::string detail = {}) {
    return {std::move(name), deviation, tolerance, deviation <= tolerance, locus, std::move(detail)};
}

void require_samples(Series series, std::size_t minimum, const char* check) {
    if (series.size() < minimum) {
        throw ContractError(std::string(check) + " needs at least " + std::to_string(minimum) + " samples");
    }
}

} // namespace

VerificationOutcome check_coherent_constant(Series series, double tolerance) {
    require_samples(series, 1, "coherent_constant_SJ");
    const double target = oracle::eur_bound();
    double worst = -1.0;
    double locus = 0.0;
    for (const auto& r : series) {
        const double dev = std::abs(r.joint_entropy - target);
        if (dev > worst) {
            worst = dev;
            locus = r.t;
        }
    }
    return make_outcome("coherent_constant_SJ", worst, tolerance, locus);
}

VerificationOutcome check_squeezed_curve(Series series, double gamma, double tolerance) {
    require_samples(series, 1, "squeezed_SJ_curve");
    double worst = -1.0;
    double locus = 0.0;
    for (const auto& r : series) {
        const double dev = std::abs(r.joint_entropy - oracle::squeezed_joint_entropy(gamma, r.t));
        if (dev > worst) {
            worst = dev;
            locus = r.t;
        }
    }
    return make_outcome("squeezed_SJ_curve", worst, tolerance, locus);
}

VerificationOutcome check_sj_bounds(Series series, double gamma, double tolerance) {
    require_samples(series, 1, "sj_bounds");
    const auto [lo_it, hi_it] = std::minmax_element(series.begin(), series.end(), [](const auto& a, const auto& b) {
        return a.joint_entropy < b.joint_entropy;
    });
    const auto bounds = oracle::sj_bounds(gamma);
    const double dev_min = std::abs(lo_it->joint_entropy - bounds.min);
    const double dev_max = std::abs(hi_it->joint_entropy - bounds.max);
    char detail[160];
    std::snprintf(detail, sizeof detail, "observed [%.7f, %.7f] vs bounds [%.7f, %.7f]", lo_it->joint_entropy,
                  hi_it->joint_entropy, bounds.min, bounds.max);
    return dev_min >= dev_max ? make_outcome("sj_bounds", dev_min, tolerance, lo_it->t, detail)
                              : make_outcome("sj_bounds", dev_max, tolerance, hi_it->t, detail);
}

VerificationOutcome check_eur_chain(Series series, double tolerance) {
    require_samples(series, 1, "eur_chain");
    double worst = 0.0;
    double locus = series.front().t;
    for (const auto& r : series) {
        const double violation = std::max({0.0, -r.eur_slack, -r.heisenberg_slack, 1.0 - r.power_product});
        if (violation > worst) {
            worst = violation;
            locus = r.t;
        }
    }
    return make_outcome("eur_chain", worst, tolerance, locus);
}

VerificationOutcome check_free_monotone(Series series, double tolerance) {
    require_samples(series, 2, "free_monotone");
    double worst = 0.0;
    double locus = series.front().t;
    for (std::size_t k = 0; k + 1 < series.size(); ++k) {
        const double drop = series[k].joint_entropy - series[k + 1].joint_entropy;
        if (drop > worst) {
            worst = drop;
            locus = series[k + 1].t;
        }
    }
    return make_outcome("free_monotone", worst, tolerance, locus);
}

double interpolate_joint_entropy(Series series, double t) {
    require_samples(series, 4, "interpolate_joint_entropy");
    const double slack = 1e-12 * std::max(1.0, std::abs(series.back().t));
    if (t < series.front().t - slack || t > series.back().t + slack) {
        throw ContractError("interpolation time outside the sampled range");
    }
    auto upper = std::upper_bound(series.begin(), series.end(), t, [](double v, const auto& r) { return v < r.t; });
    auto i = static_cast<std::ptrdiff_t>(std::distance(series.begin(), upper)) - 1;
    const auto last_start = static_cast<std::ptrdiff_t>(series.size()) - 4;
    const auto start = std::clamp<std::ptrdiff_t>(i - 1, 0, last_start);
    double value = 0.0;
    for (std::ptrdiff_t a = start; a < start + 4; ++a) {
        double weight = 1.0;
        for (std::ptrdiff_t b = start; b < start + 4; ++b) {
            if (a != b) weight *= (t - series[b].t) / (series[a].t - series[b].t);
        }
        value += weight * series[a].joint_entropy;
    }
    return value;
}

VerificationOutcome check_periodicity(Series series, double period, double tolerance, std::string name) {
    require_samples(series, 4, "periodicity check");
    const double t_last = series.back().t;
    double worst = -1.0;
    double locus = 0.0;
    for (const auto& r : series) {
        const double shifted = r.t + period;
        if (shifted > t_last + 1e-9) break;
        const double dev = std::abs(r.joint_entropy - interpolate_joint_entropy(series, std::min(shifted, t_last)));
        if (dev > worst) {
            worst = dev;
            locus = r.t;
        }
    }
    if (worst < 0.0) throw ContractError("periodicity check: series shorter than one period");
    return make_outcome(std::move(name), worst, tolerance, locus);
}

std::vector<double> joint_entropy_maxima(Series series) {
    std::vector<double> out;
    for (std::size_t k = 1; k + 1 < series.size(); ++k) {
        const double v = series[k].joint_entropy;
        if (v > series[k - 1].joint_entropy && v >= series[k + 1].joint_entropy) out.push_back(series[k].t);
    }
    return out;
}

std::vector<VerificationOutcome> verify(const ScenarioConfig& cfg, Series series) {
    std::vector<VerificationOutcome> outcomes;
    const auto gaussian = as_gaussian(cfg.state);
    for (const auto& check : cfg.verify) {
        switch (check.kind) {
        case CheckKind::coherent_constant_SJ: outcomes.push_back(check_coherent_constant(series, check.tolerance)); break;
        case CheckKind::squeezed_SJ_curve:
            outcomes.push_back(check_squeezed_curve(series, gaussian.value().gamma, check.tolerance));
            break;
        case CheckKind::sj_bounds:
            outcomes.push_back(check_sj_bounds(series, gaussian.value().gamma, check.tolerance));
            break;
        case CheckKind::eur_chain: outcomes.push_back(check_eur_chain(series, check.tolerance)); break;
        case CheckKind::free_monotone: outcomes.push_back(check_free_monotone(series, check.tolerance)); break;
        case CheckKind::cat_periodicity:
            outcomes.push_back(check_periodicity(series, 2.0 * std::numbers::pi, check.tolerance));
            break;
        }
    }
    return outcomes;
}

} // namespace wavelab
