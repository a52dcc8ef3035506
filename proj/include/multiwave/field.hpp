#ifndef MULTIWAVE_FIELD_HPP
#define MULTIWAVE_FIELD_HPP

#include <vector>

#include "multiwave/grid.hpp"
#include "multiwave/types.hpp"

namespace mw {

// H-valued sample field on a periodic grid. values are indexed
// (spatial point, component), component fastest: values[s*hdim + c].
struct Field {
    GridSpec grid;
    int hdim{1};
    std::vector<cplx> values;

    Field() = default;
    Field(GridSpec g, int h);

    std::size_t points() const { return grid.total(); }
    cplx& at(std::size_t s, int c) { return values[s * static_cast<std::size_t>(hdim) + c]; }
    const cplx& at(std::size_t s, int c) const { return values[s * static_cast<std::size_t>(hdim) + c]; }

    void validate(const char* what = "field") const;  // shape + finiteness
    double max_fiber_norm() const;
};

// Same storage, indexed by integer frequency vector (FFT layout).
struct SpectralField {
    GridSpec grid;
    int hdim{1};
    std::vector<cplx> values;

    SpectralField() = default;
    SpectralField(GridSpec g, int h);

    std::size_t modes() const { return grid.total(); }
    cplx& at(std::size_t m, int c) { return values[m * static_cast<std::size_t>(hdim) + c]; }
    const cplx& at(std::size_t m, int c) const { return values[m * static_cast<std::size_t>(hdim) + c]; }

    void validate(const char* what = "spectral field") const;
};

Field operator+(const Field& x, const Field& y);
Field operator-(const Field& x, const Field& y);
Field operator*(cplx s, const Field& x);
SpectralField operator-(const SpectralField& x, const SpectralField& y);

}  // namespace mw

#endif
