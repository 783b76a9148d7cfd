#include "el2d/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>

namespace el2d {

struct Grid::Plans {
    double* rbuf = nullptr;
    fftw_complex* cbuf = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

Grid::Grid(int n_points, double length)
    : n_(n_points), length_(length), plans_(std::make_unique<Plans>()) {
    if (n_ < 8 || n_ % 2 != 0) throw BadParams("grid: N must be even and >= 8");
    if (!(length_ > 0.0)) throw BadParams("grid: L must be positive");

    const double scale = 2.0 * M_PI / length_;
    k1_deriv_.resize(n_);
    k1_full_.resize(n_);
    for (int i = 0; i < n_; ++i) {
        const int m = (i <= n_ / 2) ? i : i - n_;
        k1_full_[i] = scale * m;
        k1_deriv_[i] = (i == n_ / 2) ? 0.0 : scale * m;
    }
    k2_deriv_.resize(spec_cols());
    k2_full_.resize(spec_cols());
    for (int j = 0; j < spec_cols(); ++j) {
        k2_full_[j] = scale * j;
        k2_deriv_[j] = (j == n_ / 2) ? 0.0 : scale * j;
    }

    plans_->rbuf = fftw_alloc_real(size());
    plans_->cbuf = fftw_alloc_complex(spec_size());
    // FFTW_ESTIMATE keeps planning deterministic and leaves the buffers intact.
    plans_->fwd = fftw_plan_dft_r2c_2d(n_, n_, plans_->rbuf, plans_->cbuf, FFTW_ESTIMATE);
    plans_->bwd = fftw_plan_dft_c2r_2d(n_, n_, plans_->cbuf, plans_->rbuf, FFTW_ESTIMATE);
    if (!plans_->fwd || !plans_->bwd) throw Error("grid: FFTW plan creation failed");
}

Grid::~Grid() {
    if (plans_) {
        if (plans_->fwd) fftw_destroy_plan(plans_->fwd);
        if (plans_->bwd) fftw_destroy_plan(plans_->bwd);
        if (plans_->rbuf) fftw_free(plans_->rbuf);
        if (plans_->cbuf) fftw_free(plans_->cbuf);
    }
}

void Grid::forward(std::span<const double> in, std::complex<double>* out) const {
    std::memcpy(plans_->rbuf, in.data(), size() * sizeof(double));
    fftw_execute(plans_->fwd);
    // std::complex<double> is layout-compatible with fftw_complex
    std::memcpy(static_cast<void*>(out), plans_->cbuf, spec_size() * sizeof(fftw_complex));
}

void Grid::inverse(std::span<const std::complex<double>> in, double* out) const {
    std::memcpy(plans_->cbuf, in.data(), spec_size() * sizeof(fftw_complex));
    fftw_execute(plans_->bwd);
    const double inv = 1.0 / double(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = plans_->rbuf[i] * inv;
}

} // namespace el2d
