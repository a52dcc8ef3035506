#include "multiwave/field.hpp"

#include <cmath>

namespace mw {
namespace {

void check_shape(const GridSpec& grid, int hdim, std::size_t size, const char* what) {
    if (hdim < 1) throw_invalid(std::string(what) + ": hdim must be >= 1");
    if (size != grid.total() * static_cast<std::size_t>(hdim))
        throw_invalid(std::string(what) + ": value count does not match grid x hdim");
}

}  // namespace

Field::Field(GridSpec g, int h)
    : grid(std::move(g)), hdim(h), values(grid.total() * static_cast<std::size_t>(h)) {
    if (h < 1) throw_invalid("field hdim must be >= 1");
}

void Field::validate(const char* what) const {
    check_shape(grid, hdim, values.size(), what);
    if (!all_finite(values)) throw_invalid(std::string(what) + ": non-finite entries");
}

double Field::max_fiber_norm() const {
    double m = 0.0;
    const std::size_t n = points();
    for (std::size_t s = 0; s < n; ++s) {
        double f = 0.0;
        for (int c = 0; c < hdim; ++c) f += std::norm(at(s, c));
        m = std::max(m, f);
    }
    return std::sqrt(m);
}

SpectralField::SpectralField(GridSpec g, int h)
    : grid(std::move(g)), hdim(h), values(grid.total() * static_cast<std::size_t>(h)) {
    if (h < 1) throw_invalid("spectral field hdim must be >= 1");
}

void SpectralField::validate(const char* what) const {
    check_shape(grid, hdim, values.size(), what);
    if (!all_finite(values)) throw_invalid(std::string(what) + ": non-finite entries");
}

Field operator+(const Field& x, const Field& y) {
    Field r = x;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += y.values[i];
    return r;
}

Field operator-(const Field& x, const Field& y) {
    Field r = x;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= y.values[i];
    return r;
}

Field operator*(cplx s, const Field& x) {
    Field r = x;
    for (cplx& v : r.values) v *= s;
    return r;
}

SpectralField operator-(const SpectralField& x, const SpectralField& y) {
    SpectralField r = x;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= y.values[i];
    return r;
}

}  // namespace mw
