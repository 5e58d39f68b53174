#include "wavelab/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "wavelab/errors.hpp"

namespace wavelab {

namespace {

// The FFTW planner is not re-entrant; execution of distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

struct SpectralTransform::Impl {
    Grid grid;
    fftw_complex* buffer = nullptr;
    fftw_plan forward_plan = nullptr;
    fftw_plan backward_plan = nullptr;
    // forward: F_k = post_k * FFT[(-1)^j psi_j]_k, post_k = dx/sqrt(2pi) e^{-i p_k x_min}
    std::vector<Complex> post;
    // inverse: psi_j = (-1)^j * dp/sqrt(2pi) * IFFT[e^{+i p_k x_min} F_k]_j
    std::vector<Complex> pre_inverse;

    explicit Impl(const Grid& g) : grid(g) {
        const std::size_t n = grid.size();
        const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
        post.resize(n);
        pre_inverse.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double phase = grid.p(k) * grid.x_min();
            post[k] = grid.dx() * inv_sqrt_2pi * std::polar(1.0, -phase);
            pre_inverse[k] = grid.dp() * inv_sqrt_2pi * std::polar(1.0, phase);
        }
        std::lock_guard lock(planner_mutex());
        buffer = fftw_alloc_complex(n);
        if (buffer == nullptr) throw std::bad_alloc();
        const int len = static_cast<int>(n);
        forward_plan = fftw_plan_dft_1d(len, buffer, buffer, FFTW_FORWARD, FFTW_ESTIMATE);
        backward_plan = fftw_plan_dft_1d(len, buffer, buffer, FFTW_BACKWARD, FFTW_ESTIMATE);
        if (forward_plan == nullptr || backward_plan == nullptr) {
            release();
            throw NumericalError("FFTW failed to create a plan for n = " + std::to_string(n));
        }
    }

    ~Impl() {
        std::lock_guard lock(planner_mutex());
        release();
    }

    void release() {
        if (forward_plan != nullptr) fftw_destroy_plan(forward_plan);
        if (backward_plan != nullptr) fftw_destroy_plan(backward_plan);
        if (buffer != nullptr) fftw_free(buffer);
        forward_plan = backward_plan = nullptr;
        buffer = nullptr;
    }

    Complex* data() { return reinterpret_cast<Complex*>(buffer); }

    void check_size(std::span<Complex> amplitudes) const {
        if (amplitudes.size() != grid.size()) {
            throw ContractError("transform of " + std::to_string(amplitudes.size()) +
                                " amplitudes on a grid of " + std::to_string(grid.size()));
        }
    }

    void forward(std::span<Complex> amplitudes) {
        check_size(amplitudes);
        Complex* buf = data();
        const std::size_t n = amplitudes.size();
        for (std::size_t j = 0; j < n; ++j) buf[j] = (j % 2 == 0) ? amplitudes[j] : -amplitudes[j];
        fftw_execute(forward_plan);
        for (std::size_t k = 0; k < n; ++k) amplitudes[k] = post[k] * buf[k];
    }

    void inverse(std::span<Complex> amplitudes) {
        check_size(amplitudes);
        Complex* buf = data();
        const std::size_t n = amplitudes.size();
        for (std::size_t k = 0; k < n; ++k) buf[k] = pre_inverse[k] * amplitudes[k];
        fftw_execute(backward_plan);
        for (std::size_t j = 0; j < n; ++j) amplitudes[j] = (j % 2 == 0) ? buf[j] : -buf[j];
    }
};

SpectralTransform::SpectralTransform(const Grid& grid) : impl_(std::make_unique<Impl>(grid)) {}
SpectralTransform::~SpectralTransform() = default;
SpectralTransform::SpectralTransform(SpectralTransform&&) noexcept = default;
SpectralTransform& SpectralTransform::operator=(SpectralTransform&&) noexcept = default;

const Grid& SpectralTransform::grid() const noexcept { return impl_->grid; }

void SpectralTransform::forward(std::span<Complex> amplitudes) { impl_->forward(amplitudes); }
void SpectralTransform::inverse(std::span<Complex> amplitudes) { impl_->inverse(amplitudes); }

WaveFunction SpectralTransform::forward(const WaveFunction& wf) {
    wf.require(Representation::position, "fourier_transform");
    if (!(wf.grid() == impl_->grid)) throw ContractError("fourier_transform: wavefunction grid mismatch");
    std::vector<Complex> amps(wf.amplitudes().begin(), wf.amplitudes().end());
    impl_->forward(amps);
    return WaveFunction(wf.grid(), Representation::momentum, std::move(amps));
}

WaveFunction SpectralTransform::inverse(const WaveFunction& wf) {
    wf.require(Representation::momentum, "inverse_fourier_transform");
    if (!(wf.grid() == impl_->grid)) throw ContractError("inverse_fourier_transform: wavefunction grid mismatch");
    std::vector<Complex> amps(wf.amplitudes().begin(), wf.amplitudes().end());
    impl_->inverse(amps);
    return WaveFunction(wf.grid(), Representation::position, std::move(amps));
}

WaveFunction fourier_transform(const WaveFunction& wf) {
    wf.require(Representation::position, "fourier_transform");
    SpectralTransform transform(wf.grid());
    return transform.forward(wf);
}

WaveFunction inverse_fourier_transform(const WaveFunction& wf) {
    wf.require(Representation::momentum, "inverse_fourier_transform");
    SpectralTransform transform(wf.grid());
    return transform.inverse(wf);
}

} // namespace wavelab
