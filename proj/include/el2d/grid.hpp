#ifndef EL2D_GRID_HPP
#define EL2D_GRID_HPP

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "el2d/errors.hpp"

namespace el2d {

/// Uniform N x N periodic grid on [0,L)^2 with FFTW real-to-complex plans.
/// Sample layout is row-major with x1 as the slow index: idx = i1*N + i2,
/// x_a = L*i_a/N. Spectra are N x (N/2+1) complex, the halved axis is x2.
///
/// Two wavenumber tables are kept: k*_deriv zeroes the Nyquist frequency
/// (used for every differentiation multiplier, so d/dx of a real field stays
/// real and operator compositions commute mode-by-mode), while k*_full keeps
/// it (used where only |k| matters, e.g. the mollifier).
///
/// Transforms run through plan-owned buffers; a Grid must not be used from
/// two threads at once.
class Grid {
public:
    Grid(int n_points, double length);
    ~Grid();
    Grid(const Grid&) = delete;
    Grid& operator=(const Grid&) = delete;

    int n() const { return n_; }
    double length() const { return length_; }
    int spec_cols() const { return n_ / 2 + 1; }
    std::size_t size() const { return std::size_t(n_) * n_; }
    std::size_t spec_size() const { return std::size_t(n_) * spec_cols(); }
    double dx() const { return length_ / n_; }
    double cell_area() const { return dx() * dx(); }
    double x1(int i) const { return length_ * i / n_; }
    double x2(int j) const { return length_ * j / n_; }

    double k1_deriv(int i) const { return k1_deriv_[i]; }
    double k2_deriv(int j) const { return k2_deriv_[j]; }
    double k1_full(int i) const { return k1_full_[i]; }
    double k2_full(int j) const { return k2_full_[j]; }

    /// Raw forward DFT (unnormalised): real N*N -> complex N*(N/2+1).
    void forward(std::span<const double> in, std::complex<double>* out) const;
    /// Inverse transform, normalised by 1/N^2.
    void inverse(std::span<const std::complex<double>> in, double* out) const;

private:
    int n_;
    double length_;
    std::vector<double> k1_deriv_, k2_deriv_, k1_full_, k2_full_;
    struct Plans;
    std::unique_ptr<Plans> plans_;
};

} // namespace el2d

#endif
