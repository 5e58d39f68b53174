#pragma once

#include <memory>
#include <span>

#include "wavelab/grid.hpp"

namespace wavelab {

/// Unitary continuum Fourier transform sampled on a Grid,
///
///   (F psi)(p) = (2 pi)^{-1/2} \int psi(x) e^{-i p x} dx,
///
/// evaluated with one FFT plus the x_min offset and centred-momentum phase
/// corrections, so momentum amplitudes approximate continuum values pointwise
/// and sum |F psi|^2 dp = sum |psi|^2 dx exactly.
///
/// Owns FFTW plans and a scratch buffer. Not safe to use one instance from
/// several threads at once; construct one per thread instead.
class SpectralTransform {
public:
    explicit SpectralTransform(const Grid& grid);
    ~SpectralTransform();
    SpectralTransform(SpectralTransform&&) noexcept;
    SpectralTransform& operator=(SpectralTransform&&) noexcept;
    SpectralTransform(const SpectralTransform&) = delete;
    SpectralTransform& operator=(const SpectralTransform&) = delete;

    const Grid& grid() const noexcept;

    /// Position amplitudes -> momentum amplitudes, in place.
    void forward(std::span<Complex> amplitudes);
    /// Momentum amplitudes -> position amplitudes, in place.
    void inverse(std::span<Complex> amplitudes);

    WaveFunction forward(const WaveFunction& wf);
    WaveFunction inverse(const WaveFunction& wf);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

WaveFunction fourier_transform(const WaveFunction& wf);
WaveFunction inverse_fourier_transform(const WaveFunction& wf);

} // namespace wavelab
