#include "el2d/field.hpp"

#include <cmath>

namespace el2d {

Field& Field::operator+=(const Field& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Field& Field::operator-=(const Field& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Field& Field::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

void Field::axpy(double s, const Field& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * o.data_[i];
}

bool Field::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

double integral(const Field& f, int c) {
    double s = 0.0;
    const double* p = f.comp(c);
    for (std::size_t i = 0; i < f.plane_size(); ++i) s += p[i];
    return s * f.grid().cell_area();
}

double l2_norm(const Field& f) {
    double s = 0.0;
    for (double v : f.data()) s += v * v;
    return std::sqrt(s * f.grid().cell_area());
}

double linf_norm(const Field& f) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.plane_size(); ++i) {
        double s = 0.0;
        for (int c = 0; c < f.comps(); ++c) {
            const double v = f.comp(c)[i];
            s += v * v;
        }
        m = std::max(m, s);
    }
    return std::sqrt(m);
}

double linf_comp(const Field& f, int c) {
    double m = 0.0;
    const double* p = f.comp(c);
    for (std::size_t i = 0; i < f.plane_size(); ++i) m = std::max(m, std::abs(p[i]));
    return m;
}

} // namespace el2d
