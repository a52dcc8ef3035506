#include "multiwave/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "multiwave/grid.hpp"

namespace mw {
namespace {

// FFTW plan cache. Planning is not thread-safe, execution on fresh arrays is
// (new-array execute requires matching alignment, which fftw_malloc gives).
struct PlanKey {
    std::vector<int> points;
    int hdim;
    int sign;
    bool operator<(const PlanKey& o) const {
        if (points != o.points) return points < o.points;
        if (hdim != o.hdim) return hdim < o.hdim;
        return sign < o.sign;
    }
};

class PlanCache {
public:
    fftw_plan get(const GridSpec& grid, int hdim, int sign) {
        PlanKey key{grid.points, hdim, sign};
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        const std::size_t n = grid.total() * static_cast<std::size_t>(hdim);
        fftw_complex* buf = fftw_alloc_complex(n);
        fftw_plan plan = fftw_plan_many_dft(grid.ndim, grid.points.data(), hdim, buf, nullptr,
                                            hdim, 1, buf, nullptr, hdim, 1, sign, FFTW_ESTIMATE);
        fftw_free(buf);
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

struct FftwBuffer {
    fftw_complex* data;
    explicit FftwBuffer(std::size_t n) : data(fftw_alloc_complex(n)) {
        if (!data) throw_internal_alloc();
    }
    ~FftwBuffer() { fftw_free(data); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;

    [[noreturn]] static void throw_internal_alloc() {
        throw Error(ErrorCode::internal, "fftw allocation failed");
    }
};

void transform_in_place(const GridSpec& grid, int hdim, int sign, std::vector<cplx>& values) {
    const std::size_t n = values.size();
    fftw_plan plan = plan_cache().get(grid, hdim, sign);
    FftwBuffer buf(n);
    for (std::size_t i = 0; i < n; ++i) {
        buf.data[i][0] = values[i].real();
        buf.data[i][1] = values[i].imag();
    }
    fftw_execute_dft(plan, buf.data, buf.data);
    const double scale = 1.0 / std::sqrt(static_cast<double>(grid.total()));
    for (std::size_t i = 0; i < n; ++i) values[i] = cplx(buf.data[i][0], buf.data[i][1]) * scale;
}

double exponent_weight_inhom(double xi2, double s) { return std::pow(1.0 + xi2, 0.5 * s); }

}  // namespace

SpectralField forward_transform(const Field& f) {
    f.validate("forward transform input");
    SpectralField g(f.grid, f.hdim);
    g.values = f.values;
    transform_in_place(f.grid, f.hdim, FFTW_FORWARD, g.values);
    return g;
}

Field inverse_transform(const SpectralField& g) {
    g.validate("inverse transform input");
    Field f(g.grid, g.hdim);
    f.values = g.values;
    transform_in_place(g.grid, g.hdim, FFTW_BACKWARD, f.values);
    return f;
}

SpectralField apply_multiplier(const SpectralField& g, const ScalarMultiplier& m) {
    g.validate("multiplier input");
    SpectralField out(g.grid, g.hdim);
    const std::size_t modes = g.modes();
    std::vector<double> xi(static_cast<std::size_t>(g.grid.ndim));
    std::vector<int> idx(static_cast<std::size_t>(g.grid.ndim));
    for (std::size_t s = 0; s < modes; ++s) {
        g.grid.unravel(s, idx.data());
        for (int d = 0; d < g.grid.ndim; ++d) xi[d] = g.grid.xi_of_index(idx[d], d);
        const cplx w = m(xi.data(), g.grid.ndim);
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
            throw_invalid("multiplier non-finite at k=" + format_freq(g.grid.freq_vector(s)));
        for (int c = 0; c < g.hdim; ++c) out.at(s, c) = w * g.at(s, c);
    }
    return out;
}

SpectralField apply_multiplier(const SpectralField& g, const MatrixMultiplier& m) {
    g.validate("multiplier input");
    SpectralField out(g.grid, g.hdim);
    const std::size_t modes = g.modes();
    std::vector<double> xi(static_cast<std::size_t>(g.grid.ndim));
    std::vector<int> idx(static_cast<std::size_t>(g.grid.ndim));
    CVec fiber(static_cast<std::size_t>(g.hdim));
    for (std::size_t s = 0; s < modes; ++s) {
        g.grid.unravel(s, idx.data());
        for (int d = 0; d < g.grid.ndim; ++d) xi[d] = g.grid.xi_of_index(idx[d], d);
        const CMat w = m(xi.data(), g.grid.ndim);
        if (w.dim != g.hdim)
            throw_invalid("matrix multiplier dimension mismatch");
        if (!w.all_finite())
            throw_invalid("multiplier non-finite at k=" + format_freq(g.grid.freq_vector(s)));
        for (int c = 0; c < g.hdim; ++c) fiber[c] = g.at(s, c);
        const CVec y = w * fiber;
        for (int c = 0; c < g.hdim; ++c) out.at(s, c) = y[c];
    }
    return out;
}

double l2_norm(const Field& f) {
    double s = 0.0;
    for (const cplx& z : f.values) s += std::norm(z);
    return std::sqrt(s * f.grid.cell_volume());
}

double spectral_l2_norm(const SpectralField& g) {
    double s = 0.0;
    for (const cplx& z : g.values) s += std::norm(z);
    return std::sqrt(s * g.grid.cell_volume());
}

double sobolev_norm(const SpectralField& g, const SobolevSpec& spec) {
    g.validate("sobolev norm input");
    const std::size_t modes = g.modes();
    double acc = 0.0;
    for (std::size_t s = 0; s < modes; ++s) {
        const double xi2 = g.grid.xi_squared(s);
        double w;
        if (spec.homogeneous) {
            if (xi2 == 0.0) {
                if (spec.s > 0.0) {
                    continue;  // |0|^s = 0
                } else if (spec.s == 0.0) {
                    w = 1.0;
                } else {
                    double zero_mode = 0.0;
                    for (int c = 0; c < g.hdim; ++c) zero_mode += std::norm(g.at(s, c));
                    double total = 0.0;
                    for (const cplx& z : g.values) total += std::norm(z);
                    if (zero_mode > 1e-26 * std::max(total, 1e-300))
                        throw_invalid(
                            "homogeneous Sobolev norm with s < 0 requires a vanishing zero mode");
                    continue;
                }
            } else {
                w = std::pow(xi2, 0.5 * spec.s);
            }
        } else {
            w = exponent_weight_inhom(xi2, spec.s);
        }
        double fiber = 0.0;
        for (int c = 0; c < g.hdim; ++c) fiber += std::norm(g.at(s, c));
        acc += w * w * fiber;
    }
    return std::sqrt(acc * g.grid.cell_volume());
}

double sobolev_norm(const Field& f, const SobolevSpec& spec) {
    return sobolev_norm(forward_transform(f), spec);
}

double sobolev_seminorm_drop_zero_mode(const SpectralField& g, double s) {
    const std::size_t modes = g.modes();
    double acc = 0.0;
    for (std::size_t m = 0; m < modes; ++m) {
        const double xi2 = g.grid.xi_squared(m);
        if (xi2 == 0.0) continue;
        const double w = std::pow(xi2, 0.5 * s);
        double fiber = 0.0;
        for (int c = 0; c < g.hdim; ++c) fiber += std::norm(g.at(m, c));
        acc += w * w * fiber;
    }
    return std::sqrt(acc * g.grid.cell_volume());
}

double lr_norm(const Field& f, double r) {
    if (r < 1.0) throw_invalid("spatial exponent r must be >= 1");
    const std::size_t n = f.points();
    if (std::isinf(r)) {
        return f.max_fiber_norm();
    }
    double acc = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
        double fiber = 0.0;
        for (int c = 0; c < f.hdim; ++c) fiber += std::norm(f.at(s, c));
        acc += std::pow(fiber, 0.5 * r);
    }
    return std::pow(acc * f.grid.cell_volume(), 1.0 / r);
}

double time_lq_norm(const std::vector<double>& times, const std::vector<double>& space_norms,
                    double q) {
    if (q < 1.0) throw_invalid("time exponent q must be >= 1");
    if (times.size() != space_norms.size()) throw_invalid("time/norm sample count mismatch");
    if (times.size() < 2) throw_invalid("time norm needs >= 2 samples");
    const double dt = times[1] - times[0];
    if (!(dt > 0)) throw_invalid("time grid must be increasing");
    for (std::size_t i = 1; i + 1 < times.size(); ++i) {
        if (std::abs((times[i + 1] - times[i]) - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
            throw_invalid("time grid must be uniform");
    }
    if (std::isinf(q)) {
        double m = 0.0;
        for (double v : space_norms) m = std::max(m, v);
        return m;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < space_norms.size(); ++i) {
        const double w = (i == 0 || i + 1 == space_norms.size()) ? 0.5 : 1.0;
        acc += w * std::pow(space_norms[i], q);
    }
    return std::pow(acc * dt, 1.0 / q);
}

double mixed_norm(const std::vector<double>& times, const std::vector<Field>& snapshots, double q,
                  double r) {
    if (times.size() != snapshots.size()) throw_invalid("mixed norm sample count mismatch");
    std::vector<double> norms(times.size());
    for (std::size_t i = 0; i < snapshots.size(); ++i) norms[i] = lr_norm(snapshots[i], r);
    return time_lq_norm(times, norms, q);
}

double l2s_norm(const std::vector<cplx>& v, double s) {
    if (!all_finite(v)) throw_invalid("l2s norm: non-finite entries");
    double acc = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const double w = std::exp2(s * static_cast<double>(j + 1));
        acc += w * w * std::norm(v[j]);
    }
    return std::sqrt(acc);
}

}  // namespace mw
