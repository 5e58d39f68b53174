#pragma once

// Test-only reference computations that do not touch the FFT path or the
// lattice rectangle rule used by the library.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace wavelab::testing {

/// Composite Simpson rule on [a, b] with `intervals` (even) subintervals.
template <class F>
auto simpson(F&& f, double a, double b, int intervals) {
    const double h = (b - a) / intervals;
    auto sum = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
    return sum * (h / 3.0);
}

/// (2 pi)^{-1/2} \int psi(x) e^{-i p x} dx by dense Simpson quadrature.
inline std::complex<double> direct_fourier(const std::function<std::complex<double>(double)>& psi, double p,
                                           double half_width = 30.0, int intervals = 200000) {
    auto integrand = [&](double x) { return psi(x) * std::polar(1.0, -p * x); };
    return simpson(integrand, -half_width, half_width, intervals) / std::sqrt(2.0 * std::numbers::pi);
}

/// -\int rho ln rho by dense Simpson quadrature of a closed-form density.
inline double direct_entropy(const std::function<double(double)>& rho, double a, double b, int intervals = 200000) {
    auto integrand = [&](double x) {
        const double v = rho(x);
        return v > 1e-300 ? -v * std::log(v) : 0.0;
    };
    return simpson(integrand, a, b, intervals);
}

} // namespace wavelab::testing
