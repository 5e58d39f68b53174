#include "wavelab/oracles.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "wavelab/errors.hpp"

namespace wavelab::oracle {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double e = std::numbers::e;

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError(std::string(name) + " must be positive and finite, got " + std::to_string(v));
    }
}

constexpr std::array<std::pair<CurveKind, std::string_view>, 7> curve_names{{
    {CurveKind::coherent_Sq, "coherent_Sq"},
    {CurveKind::coherent_Sp, "coherent_Sp"},
    {CurveKind::coherent_center, "coherent_center"},
    {CurveKind::squeezed_sigma2, "squeezed_sigma2"},
    {CurveKind::squeezed_sigma2_tilde, "squeezed_sigma2_tilde"},
    {CurveKind::squeezed_SJ, "squeezed_SJ"},
    {CurveKind::free_sigma2, "free_sigma2"},
}};

} // namespace

double eur_bound() { return 1.0 + std::log(pi); }

double gaussian_entropy(double variance) {
    require_positive(variance, "variance");
    return 0.5 * std::log(2.0 * pi * e * variance);
}

double coherent_center(double q0, double p0, double t) { return q0 * std::cos(t) + p0 * std::sin(t); }

double coherent_density_value(double q0, double p0, double t, double x) {
    const double s = x - coherent_center(q0, p0, t);
    return std::exp(-s * s) / std::sqrt(pi);
}

Density coherent_density_at(double q0, double p0, double t, const Grid& grid) {
    std::vector<double> values(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) values[j] = coherent_density_value(q0, p0, t, grid.x(j));
    return Density(grid, Representation::position, std::move(values));
}

double coherent_entropy() { return 0.5 * (1.0 + std::log(pi)); }

double squeezed_sigma2(double gamma, double t) {
    require_positive(gamma, "gamma");
    const double s = std::sin(t);
    const double c = std::cos(t);
    return 0.5 * (s * s / (gamma * gamma) + gamma * gamma * c * c);
}

double squeezed_sigma2_tilde(double gamma, double t) {
    require_positive(gamma, "gamma");
    const double s = std::sin(t);
    const double c = std::cos(t);
    return 0.5 * (gamma * gamma * s * s + c * c / (gamma * gamma));
}

double squeezed_joint_entropy(double gamma, double t) {
    return std::log(2.0 * pi * e) + 0.5 * std::log(squeezed_sigma2(gamma, t) * squeezed_sigma2_tilde(gamma, t));
}

Bounds sj_bounds(double gamma) {
    require_positive(gamma, "gamma");
    const double g4 = std::pow(gamma, 4);
    const double lo = eur_bound();
    return {lo, lo + 0.5 * std::log((g4 + 1.0 / g4 + 2.0) / 4.0)};
}

double free_gaussian_sigma2(double gamma, double mass, double t) {
    require_positive(gamma, "gamma");
    require_positive(mass, "mass");
    return 0.5 * gamma * gamma + t * t / (2.0 * mass * mass * gamma * gamma);
}

std::optional<CurveKind> parse_curve_kind(std::string_view name) {
    for (const auto& [kind, label] : curve_names) {
        if (label == name) return kind;
    }
    return std::nullopt;
}

std::string_view to_string(CurveKind kind) {
    for (const auto& [k, label] : curve_names) {
        if (k == kind) return label;
    }
    return "unknown";
}

double OracleCurve::operator()(double t) const {
    switch (kind) {
    case CurveKind::coherent_Sq:
    case CurveKind::coherent_Sp: return coherent_entropy();
    case CurveKind::coherent_center: return coherent_center(q0, p0, t);
    case CurveKind::squeezed_sigma2: return squeezed_sigma2(gamma, t);
    case CurveKind::squeezed_sigma2_tilde: return squeezed_sigma2_tilde(gamma, t);
    case CurveKind::squeezed_SJ: return squeezed_joint_entropy(gamma, t);
    case CurveKind::free_sigma2: return free_gaussian_sigma2(gamma, mass, t);
    }
    return std::nan("");
}

} // namespace wavelab::oracle
