#include "multiwave/strichartz.hpp"

#include <algorithm>
#include <cmath>

#include "multiwave/parallel.hpp"

namespace mw {
namespace {

void fit_line(const std::vector<double>& xs, const std::vector<double>& ys, double& slope,
              double& intercept, double& sse) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    slope = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
    intercept = (sy - slope * sx) / n;
    sse = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (intercept + slope * xs[i]);
        sse += r * r;
    }
}

// weighted mode array in the eigenbasis: values[mode*d + i] already rotated
struct EigenModeData {
    std::vector<cplx> values;  // [mode * d + i]
    std::vector<double> omega; // [mode * d + i], sqrt(lambda_i + |xi|^2)
};

EigenModeData rotate_and_frequencies(const SpectralField& g, const OperatorSpec& op) {
    const int d = op.hdim();
    const std::size_t modes = g.modes();
    EigenModeData out;
    out.values.resize(g.values.size());
    out.omega.resize(g.values.size());
    for (std::size_t s = 0; s < modes; ++s) {
        op.to_eigenbasis(g.values.data() + s * static_cast<std::size_t>(d),
                         out.values.data() + s * static_cast<std::size_t>(d));
        const double xi2 = g.grid.xi_squared(s);
        for (int i = 0; i < d; ++i)
            out.omega[s * static_cast<std::size_t>(d) + i] =
                std::sqrt(op.eigenvalues()[static_cast<std::size_t>(i)] + xi2);
    }
    return out;
}

void check_compact_support(const Field& f) {
    // the box is periodic; data must be numerically negligible on the seam
    // (any coordinate index 0)
    const std::size_t n = f.points();
    std::vector<int> idx(static_cast<std::size_t>(f.grid.ndim));
    double boundary = 0.0;
    double peak = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
        double m2 = 0.0;
        for (int c = 0; c < f.hdim; ++c) m2 += std::norm(f.at(s, c));
        peak = std::max(peak, m2);
        f.grid.unravel(s, idx.data());
        bool seam = false;
        for (int d = 0; d < f.grid.ndim; ++d) seam = seam || idx[d] == 0;
        if (seam) boundary = std::max(boundary, m2);
    }
    if (peak > 0.0 && std::sqrt(boundary) > 1e-8 * std::sqrt(peak))
        throw_invalid("dispersive check requires compactly-supported data inside the box");
}

// Homogeneous Sobolev norm in the torus convention: positive orders give the
// usual multiplier norm, order zero is plain L2, negative orders drop the
// zero mode (seminorm on the mean-zero complement).
double homogeneous_norm_torus(const SpectralField& g, double s) {
    if (s > 0.0) return sobolev_norm(g, SobolevSpec{s, true});
    if (s == 0.0) return spectral_l2_norm(g);
    return sobolev_seminorm_drop_zero_mode(g, s);
}

SpectralField weighted_spectral(const SpectralField& g, const OperatorSpec& op, double theta) {
    // A^theta applied fiberwise (in the eigenbasis of A)
    const int d = op.hdim();
    if (theta == 0.0) return g;
    SpectralField out(g.grid, d);
    const std::size_t modes = g.modes();
    std::vector<cplx> w(static_cast<std::size_t>(d));
    for (std::size_t s = 0; s < modes; ++s) {
        op.to_eigenbasis(g.values.data() + s * static_cast<std::size_t>(d), w.data());
        for (int i = 0; i < d; ++i)
            w[static_cast<std::size_t>(i)] *=
                std::pow(op.eigenvalues()[static_cast<std::size_t>(i)], theta);
        op.from_eigenbasis(w.data(), out.values.data() + s * static_cast<std::size_t>(d));
    }
    return out;
}

}  // namespace

DecayFit fit_decay(const std::vector<double>& times, const std::vector<double>& values,
                   DecayModel model) {
    std::vector<double> xs, ys;
    xs.reserve(times.size());
    ys.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(values[i] > 0.0) || !(times[i] > 0.0)) continue;
        xs.push_back(model == DecayModel::power ? std::log(times[i]) : std::log1p(times[i]));
        ys.push_back(std::log(values[i]));
    }
    DecayFit fit;
    fit.model = model;
    if (xs.size() < 2) {
        fit.sse = std::numeric_limits<double>::infinity();
        return fit;
    }
    double slope, intercept, sse;
    fit_line(xs, ys, slope, intercept, sse);
    fit.exponent = -slope;
    fit.log_c = intercept;
    fit.sse = sse;
    return fit;
}

DecayFit fit_best_decay(const std::vector<double>& times, const std::vector<double>& values) {
    const DecayFit a = fit_decay(times, values, DecayModel::power);
    const DecayFit b = fit_decay(times, values, DecayModel::one_plus_t);
    return a.sse <= b.sse ? a : b;
}

DispersiveSeries dispersive_ratio(const OperatorSpec& op, double alpha, double p, const Field& data,
                                  const std::vector<double>& times, int threads) {
    if (!(p >= 2.0)) throw_invalid("dispersive check requires 2 <= p <= inf");
    if (!(alpha >= 0.0 && alpha < 1.0)) throw_invalid("dispersive check requires 0 <= alpha < 1");
    data.validate("dispersive data");
    if (data.hdim != op.hdim()) throw_invalid("data hdim must match the operator");
    check_compact_support(data);

    const double wrap_bound = data.grid.min_box_length() / 4.0;
    for (double t : times) {
        if (!(t > 0.0)) throw_invalid("dispersive times must be positive");
        if (t > wrap_bound)
            throw_invalid("dispersive time " + std::to_string(t) +
                          " beyond the wraparound bound L/4 = " + std::to_string(wrap_bound));
    }

    const int n = data.grid.ndim;
    const double pprime = std::isinf(p) ? 1.0 : p / (p - 1.0);
    DispersiveSeries series;
    series.times = times;
    series.claimed_exponent = n * (0.5 - (std::isinf(p) ? 0.0 : 1.0 / p)) + alpha;
    series.data_dual_norm = lr_norm(data, pprime);

    const SpectralField data_hat = forward_transform(data);
    const EigenModeData modes = rotate_and_frequencies(data_hat, op);
    const int d = op.hdim();
    const std::size_t flat = modes.values.size();

    // A^alpha weights in the eigenbasis
    std::vector<double> weight(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        weight[static_cast<std::size_t>(i)] =
            std::pow(op.eigenvalues()[static_cast<std::size_t>(i)], alpha);

    series.norms.resize(times.size());
    series.ratios.resize(times.size());

    parallel_for(times.size(), threads, [&](std::size_t begin, std::size_t end) {
        SpectralField snapshot(data.grid, d);
        std::vector<cplx> fiber(static_cast<std::size_t>(d));
        for (std::size_t j = begin; j < end; ++j) {
            const double t = times[j];
            for (std::size_t s = 0; s < flat / static_cast<std::size_t>(d); ++s) {
                const std::size_t base = s * static_cast<std::size_t>(d);
                for (int i = 0; i < d; ++i)
                    fiber[static_cast<std::size_t>(i)] =
                        modes.values[base + i] * weight[static_cast<std::size_t>(i)] *
                        std::cos(t * modes.omega[base + i]);
                op.from_eigenbasis(fiber.data(), snapshot.values.data() + base);
            }
            const double norm = lr_norm(inverse_transform(snapshot), p);
            series.norms[j] = norm;
            series.ratios[j] =
                std::pow(t, series.claimed_exponent) * norm / series.data_dual_norm;
        }
    });

    series.power_fit = fit_decay(series.times, series.norms, DecayModel::power);
    series.norm_fit = fit_best_decay(series.times, series.norms);
    series.ratio_slope = series.claimed_exponent - series.power_fit.exponent;
    series.max_ratio = *std::max_element(series.ratios.begin(), series.ratios.end());
    return series;
}

EstimateReport strichartz_report(const LinearProblem& problem, const MultipointSpec& spec,
                                 const GapRelation& gap, const std::vector<double>& times,
                                 const SolveOptions& options) {
    const AdmissibilityVerdict v = classify_pair(gap.n, gap.pair.q, gap.pair.r);
    if (!v.admissible) throw_invalid("strichartz report requires an admissible pair (q, r)");
    if (problem.grid.ndim != gap.n) throw_invalid("gap relation dimension mismatch");

    SpectralTrajectory traj = solve_linear(problem, spec, times, nullptr, options);

    const double q = gap.pair.q.to_double();
    const double r = gap.pair.r.to_double();
    const double gamma = gap.gamma.to_double();
    const OperatorSpec& op = *problem.op;

    // LHS: mixed norm of A^alpha u
    std::vector<double> space_norms(times.size());
    double sup_l2 = 0.0;
    double sup_sobolev = 0.0;
    for (std::size_t j = 0; j < times.size(); ++j) {
        const SpectralField wu = weighted_spectral(traj.u_hat[j], op, gap.alpha);
        space_norms[j] = lr_norm(inverse_transform(wu), r);
        sup_l2 = std::max(sup_l2, spectral_l2_norm(wu));
        const SpectralField wut = weighted_spectral(traj.ut_hat[j], op, gap.alpha);
        sup_sobolev = std::max(sup_sobolev, homogeneous_norm_torus(wut, gamma - 1.0));
    }
    const double lhs = time_lq_norm(times, space_norms, q) + sup_l2 + sup_sobolev;

    // RHS: data norms
    const SpectralField aphi = [&] {
        SpectralField g = forward_transform(problem.phi);
        SpectralField out(g.grid, g.hdim);
        CVec fiber(static_cast<std::size_t>(g.hdim));
        for (std::size_t s = 0; s < g.modes(); ++s) {
            for (int c = 0; c < g.hdim; ++c) fiber[static_cast<std::size_t>(c)] = g.at(s, c);
            const CVec a = op.apply(fiber);
            for (int c = 0; c < g.hdim; ++c) out.at(s, c) = a[static_cast<std::size_t>(c)];
        }
        return out;
    }();
    const SpectralField apsi = [&] {
        SpectralField g = forward_transform(problem.psi);
        SpectralField out(g.grid, g.hdim);
        CVec fiber(static_cast<std::size_t>(g.hdim));
        for (std::size_t s = 0; s < g.modes(); ++s) {
            for (int c = 0; c < g.hdim; ++c) fiber[static_cast<std::size_t>(c)] = g.at(s, c);
            const CVec a = op.apply(fiber);
            for (int c = 0; c < g.hdim; ++c) out.at(s, c) = a[static_cast<std::size_t>(c)];
        }
        return out;
    }();

    double rhs = homogeneous_norm_torus(aphi, gamma) +
                 homogeneous_norm_torus(apsi, gamma - 1.0);
    if (!problem.source.empty()) {
        const double qtp = gap.dual_pair.q.conjugate().to_double();
        const double rtp = gap.dual_pair.r.conjugate().to_double();
        rhs += mixed_norm(problem.source.times, problem.source.snapshots, qtp, rtp);
    }

    EstimateReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.ratio = rhs > 0.0 ? lhs / rhs : 0.0;
    return rep;
}

BilinearFormResult bilinear_form(const OperatorSpec& op, double alpha,
                                 const std::vector<double>& times,
                                 const std::vector<Field>& f_snapshots,
                                 const std::vector<Field>& g_snapshots, ExponentPair pair) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw_invalid("bilinear form requires 0 <= alpha < 1");
    if (times.size() != f_snapshots.size() || times.size() != g_snapshots.size())
        throw_invalid("bilinear form: snapshot counts mismatch");
    if (times.size() < 2) throw_invalid("bilinear form needs >= 2 samples");
    const GridSpec& grid = f_snapshots.front().grid;
    for (std::size_t j = 0; j < times.size(); ++j) {
        if (!(f_snapshots[j].grid == grid) || !(g_snapshots[j].grid == grid))
            throw_invalid("bilinear form: snapshots must share one grid");
    }
    const double dt = times[1] - times[0];
    const int d = op.hdim();
    const std::size_t flat = grid.total() * static_cast<std::size_t>(d);

    // (A^{alpha/2} U(s))^* F(s) = U(s) A^{alpha/2} F(s); stored in eigenbasis.
    auto prepare = [&](const std::vector<Field>& snaps) {
        std::vector<std::vector<cplx>> out(times.size());
        for (std::size_t j = 0; j < times.size(); ++j) {
            const EigenModeData md = rotate_and_frequencies(forward_transform(snaps[j]), op);
            std::vector<cplx> v(flat);
            for (std::size_t idx = 0; idx < flat; ++idx) {
                const int i = static_cast<int>(idx % static_cast<std::size_t>(d));
                const double w = std::pow(op.eigenvalues()[static_cast<std::size_t>(i)],
                                          0.5 * alpha);
                v[idx] = md.values[idx] * w * std::cos(times[j] * md.omega[idx]);
            }
            out[j] = std::move(v);
        }
        return out;
    };
    const std::vector<std::vector<cplx>> pf = prepare(f_snapshots);
    const std::vector<std::vector<cplx>> pg = prepare(g_snapshots);

    const double cellvol = grid.cell_volume();
    auto inner = [&](std::size_t sj, std::size_t tj) {
        cplx acc{};
        const std::vector<cplx>& a = pf[sj];
        const std::vector<cplx>& b = pg[tj];
        for (std::size_t i = 0; i < flat; ++i) acc += std::conj(a[i]) * b[i];
        return acc * cellvol;
    };

    cplx total{};
    for (std::size_t tj = 0; tj < times.size(); ++tj) {
        // inner trapezoid over s in [0, t_j]
        if (tj == 0) continue;
        cplx is{};
        for (std::size_t sj = 0; sj <= tj; ++sj) {
            const double w = (sj == 0 || sj == tj) ? 0.5 : 1.0;
            is += w * inner(sj, tj);
        }
        is *= dt;
        const double wt = (tj == times.size() - 1) ? 0.5 : 1.0;
        total += wt * is * dt;
    }

    BilinearFormResult res;
    res.value = total;
    const double qp = pair.q.conjugate().to_double();
    const double rp = pair.r.conjugate().to_double();
    res.f_norm = mixed_norm(times, f_snapshots, qp, rp);
    res.g_norm = mixed_norm(times, g_snapshots, qp, rp);
    const double denom = res.f_norm * res.g_norm;
    res.bound_constant = denom > 0.0 ? std::abs(total) / denom : 0.0;
    return res;
}

double strichartz_norm(const std::vector<double>& times, const std::vector<Field>& snapshots,
                       int n, const std::vector<ExponentPair>& pairs) {
    if (pairs.empty()) throw_invalid("strichartz norm needs a nonempty pair set");
    double best = 0.0;
    for (const ExponentPair& p : pairs) {
        const AdmissibilityVerdict v = classify_pair(n, p.q, p.r);
        if (!v.admissible)
            throw_invalid("strichartz norm pair (" + p.q.str() + ", " + p.r.str() +
                          ") is not admissible");
        best = std::max(best, mixed_norm(times, snapshots, p.q.to_double(), p.r.to_double()));
    }
    return best;
}

}  // namespace mw
