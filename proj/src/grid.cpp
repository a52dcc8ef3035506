#include "multiwave/grid.hpp"

#include <cmath>
#include <sstream>

namespace mw {
namespace {

bool power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

GridSpec GridSpec::make(std::vector<int> points, std::vector<double> box, std::size_t total_cap) {
    if (points.empty()) throw_invalid("grid needs at least one dimension");
    if (points.size() != box.size())
        throw_invalid("grid points/box dimension mismatch");
    std::size_t total = 1;
    for (std::size_t d = 0; d < points.size(); ++d) {
        if (points[d] < 4 || !power_of_two(points[d]))
            throw_invalid("grid sample counts must be powers of two >= 4 (got " +
                          std::to_string(points[d]) + ")");
        if (!(box[d] > 0.0) || !std::isfinite(box[d]))
            throw_invalid("grid box lengths must be strictly positive");
        total *= static_cast<std::size_t>(points[d]);
        if (total > total_cap)
            throw_invalid("grid total point count exceeds cap " + std::to_string(total_cap));
    }
    GridSpec g;
    g.ndim = static_cast<int>(points.size());
    g.points = std::move(points);
    g.box = std::move(box);
    return g;
}

std::size_t GridSpec::total() const {
    std::size_t t = 1;
    for (int p : points) t *= static_cast<std::size_t>(p);
    return t;
}

double GridSpec::volume() const {
    double v = 1.0;
    for (double l : box) v *= l;
    return v;
}

double GridSpec::cell_volume() const {
    double v = 1.0;
    for (int d = 0; d < ndim; ++d) v *= box[d] / points[d];
    return v;
}

double GridSpec::min_box_length() const {
    double m = box[0];
    for (double l : box) m = std::min(m, l);
    return m;
}

void GridSpec::unravel(std::size_t linear, int* idx) const {
    for (int d = ndim - 1; d >= 0; --d) {
        idx[d] = static_cast<int>(linear % static_cast<std::size_t>(points[d]));
        linear /= static_cast<std::size_t>(points[d]);
    }
}

int GridSpec::freq_of_index(int idx, int dim) const {
    const int n = points[dim];
    return idx < n / 2 ? idx : idx - n;
}

double GridSpec::xi_of_index(int idx, int dim) const {
    return 2.0 * M_PI * freq_of_index(idx, dim) / box[dim];
}

double GridSpec::xi_squared(std::size_t linear) const {
    double s = 0.0;
    for (int d = ndim - 1; d >= 0; --d) {
        const int idx = static_cast<int>(linear % static_cast<std::size_t>(points[d]));
        linear /= static_cast<std::size_t>(points[d]);
        const double xi = xi_of_index(idx, d);
        s += xi * xi;
    }
    return s;
}

std::vector<int> GridSpec::freq_vector(std::size_t linear) const {
    std::vector<int> idx(static_cast<std::size_t>(ndim));
    unravel(linear, idx.data());
    std::vector<int> k(static_cast<std::size_t>(ndim));
    for (int d = 0; d < ndim; ++d) k[d] = freq_of_index(idx[d], d);
    return k;
}

bool GridSpec::operator==(const GridSpec& other) const {
    return ndim == other.ndim && points == other.points && box == other.box;
}

std::string format_freq(const std::vector<int>& k) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) os << ",";
        os << k[i];
    }
    os << ")";
    return os.str();
}

}  // namespace mw
