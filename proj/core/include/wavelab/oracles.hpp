#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "wavelab/grid.hpp"

// Closed-form oscillator and free-particle results in units hbar = m = omega = 1
// (free_gaussian_sigma2 takes a general mass).
namespace wavelab::oracle {

/// 1 + ln(pi): lower bound of S_q + S_p, attained by every Gaussian minimum-uncertainty state.
double eur_bound();

/// Differential entropy (1/2) ln(2 pi e sigma^2) of a Gaussian density with the given variance.
double gaussian_entropy(double variance);

/// Centre q(t) = q0 cos t + p0 sin t of a coherent-state density.
double coherent_center(double q0, double p0, double t);

/// pi^{-1/2} exp(-(x - q(t))^2).
double coherent_density_value(double q0, double p0, double t, double x);

/// The coherent-state position density sampled on the grid.
Density coherent_density_at(double q0, double p0, double t, const Grid& grid);

/// Position and momentum entropies of a coherent state, (1/2)(1 + ln pi) at all times.
double coherent_entropy();

/// sigma^2(t) = [(1/gamma^2) sin^2 t + gamma^2 cos^2 t] / 2.
double squeezed_sigma2(double gamma, double t);

/// Momentum variance [gamma^2 sin^2 t + (1/gamma^2) cos^2 t] / 2 = squeezed_sigma2(1/gamma, t).
double squeezed_sigma2_tilde(double gamma, double t);

/// S_J(t) = ln(2 pi e) + (1/2) ln[sigma^2(t) sigma~^2(t)], period pi/2.
double squeezed_joint_entropy(double gamma, double t);

struct Bounds {
    double min;
    double max;
};

/// Range of squeezed_joint_entropy over t:
/// [1 + ln pi, 1 + ln pi + (1/2) ln((gamma^4 + gamma^-4 + 2)/4)].
Bounds sj_bounds(double gamma);

/// Variance gamma^2/2 + t^2/(2 m^2 gamma^2) of a freely spreading
/// minimum-uncertainty Gaussian.
double free_gaussian_sigma2(double gamma, double mass, double t);

enum class CurveKind {
    coherent_Sq,
    coherent_Sp,
    coherent_center,
    squeezed_sigma2,
    squeezed_sigma2_tilde,
    squeezed_SJ,
    free_sigma2,
};

std::optional<CurveKind> parse_curve_kind(std::string_view name);
std::string_view to_string(CurveKind kind);

/// A closed-form scalar curve t -> value with its parameters bound.
struct OracleCurve {
    CurveKind kind;
    double gamma = 1.0;
    double q0 = 0.0;
    double p0 = 0.0;
    double mass = 1.0;

    double operator()(double t) const;
};

} // namespace wavelab::oracle
