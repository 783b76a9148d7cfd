#ifndef EL2D_FIELD_HPP
#define EL2D_FIELD_HPP

#include <complex>
#include <span>
#include <vector>

#include "el2d/grid.hpp"

namespace el2d {

/// Real multi-component sample array on a Grid. Components are stored
/// contiguously, each row-major (idx = i1*N + i2). The grid must outlive
/// the field.
class Field {
public:
    Field() = default;
    Field(const Grid& g, int comps)
        : grid_(&g), comps_(comps), data_(std::size_t(comps) * g.size(), 0.0) {}

    const Grid& grid() const { return *grid_; }
    int comps() const { return comps_; }
    std::size_t plane_size() const { return grid_->size(); }

    double* comp(int c) { return data_.data() + std::size_t(c) * plane_size(); }
    const double* comp(int c) const { return data_.data() + std::size_t(c) * plane_size(); }
    std::span<const double> comp_span(int c) const { return {comp(c), plane_size()}; }

    double& at(int c, int i1, int i2) { return comp(c)[std::size_t(i1) * grid_->n() + i2]; }
    double at(int c, int i1, int i2) const { return comp(c)[std::size_t(i1) * grid_->n() + i2]; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    Field& operator+=(const Field& o);
    Field& operator-=(const Field& o);
    Field& operator*=(double s);
    /// this += s*o
    void axpy(double s, const Field& o);

    bool all_finite() const;

private:
    const Grid* grid_ = nullptr;
    int comps_ = 0;
    std::vector<double> data_;
};

/// Complex spectrum of a Field, same component layout, planes of
/// N x (N/2+1) coefficients (raw DFT normalisation).
class SpectralField {
public:
    SpectralField() = default;
    SpectralField(const Grid& g, int comps)
        : grid_(&g), comps_(comps), data_(std::size_t(comps) * g.spec_size(), {0.0, 0.0}) {}

    const Grid& grid() const { return *grid_; }
    int comps() const { return comps_; }
    std::size_t plane_size() const { return grid_->spec_size(); }

    std::complex<double>* comp(int c) { return data_.data() + std::size_t(c) * plane_size(); }
    const std::complex<double>* comp(int c) const {
        return data_.data() + std::size_t(c) * plane_size();
    }
    std::span<const std::complex<double>> comp_span(int c) const { return {comp(c), plane_size()}; }

    std::vector<std::complex<double>>& data() { return data_; }
    const std::vector<std::complex<double>>& data() const { return data_; }

private:
    const Grid* grid_ = nullptr;
    int comps_ = 0;
    std::vector<std::complex<double>> data_;
};

// quadrature and norms (trapezoid on the torus = cell_area * sum)
double integral(const Field& f, int c = 0);
double l2_norm(const Field& f);      // sqrt(cell_area * sum over all comps)
double linf_norm(const Field& f);    // grid max of the pointwise euclidean norm
double linf_comp(const Field& f, int c);

} // namespace el2d

#endif
