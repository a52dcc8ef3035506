#ifndef MULTIWAVE_GRID_HPP
#define MULTIWAVE_GRID_HPP

#include <cstddef>
#include <vector>

#include "multiwave/types.hpp"

namespace mw {

// Periodic spatial grid: per-dimension sample counts (powers of two >= 4) over
// a box of per-dimension period L_i. Spatial samples are x_i = j * L_i / N_i.
struct GridSpec {
    int ndim{0};
    std::vector<int> points;   // per-dimension counts
    std::vector<double> box;   // per-dimension periods

    static constexpr std::size_t default_cap = std::size_t{1} << 24;

    static GridSpec make(std::vector<int> points, std::vector<double> box,
                         std::size_t total_cap = default_cap);

    std::size_t total() const;
    double volume() const;
    double cell_volume() const;
    double min_box_length() const;

    // linear index <-> per-dimension indices, row-major (dim 0 slowest)
    void unravel(std::size_t linear, int* idx) const;

    // integer frequency for a per-dimension sample index (FFT layout):
    // idx < N/2 -> idx, else idx - N
    int freq_of_index(int idx, int dim) const;
    // physical frequency xi_d = 2*pi*k_d / L_d
    double xi_of_index(int idx, int dim) const;
    // |xi|^2 for a linear mode index
    double xi_squared(std::size_t linear) const;
    // integer frequency vector of a linear mode index
    std::vector<int> freq_vector(std::size_t linear) const;

    bool operator==(const GridSpec& other) const;
};

std::string format_freq(const std::vector<int>& k);

}  // namespace mw

#endif
