#include "multiwave/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "multiwave/parallel.hpp"

namespace mw {
namespace {

// Per-mode right-hand side of the first-order system y = (u, v):
//   u' = v,  v' = -(A + |xi|^2) u + F^(t).
struct ModeOde {
    const CMat* a;  // operator matrix in the original basis
    double xi2;
    int d;

    void eval(const cplx* y, const cplx* f, cplx* dy) const {
        for (int c = 0; c < d; ++c) dy[c] = y[d + c];
        for (int r = 0; r < d; ++r) {
            cplx acc{};
            for (int c = 0; c < d; ++c) acc += (*a)(r, c) * y[c];
            acc += xi2 * y[r];
            dy[d + r] = -acc + (f ? f[r] : cplx{});
        }
    }
};

struct SourceInterp {
    const std::vector<double>* times{nullptr};
    const std::vector<std::vector<cplx>>* values{nullptr};  // per time, flat [mode*d + c]
    double dt{0.0};

    bool active() const { return times && !times->empty(); }

    void at(double t, std::size_t mode_base, int d, cplx* out) const {
        const double pos = t / dt + 1e-9;
        const std::size_t j = std::min(times->size() - 2,
                                       pos <= 0.0 ? std::size_t{0} : static_cast<std::size_t>(pos));
        const double theta = (t - (*times)[j]) / dt;
        for (int c = 0; c < d; ++c)
            out[c] = (1.0 - theta) * (*values)[j][mode_base + static_cast<std::size_t>(c)] +
                     theta * (*values)[j + 1][mode_base + static_cast<std::size_t>(c)];
    }
};

// One classical RK4 step of the mode system; f0/fh/f1 are the source fiber at
// t, t + dt/2, t + dt (null when no source).
void rk4_step(const ModeOde& ode, double dt, cplx* y, const cplx* f0, const cplx* fh,
              const cplx* f1, cplx* k1, cplx* k2, cplx* k3, cplx* k4, cplx* tmp) {
    const int n = 2 * ode.d;
    ode.eval(y, f0, k1);
    for (int i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
    ode.eval(tmp, fh, k2);
    for (int i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
    ode.eval(tmp, fh, k3);
    for (int i = 0; i < n; ++i) tmp[i] = y[i] + dt * k3[i];
    ode.eval(tmp, f1, k4);
    for (int i = 0; i < n; ++i) y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

std::size_t steps_for(double horizon, double dt, const char* what) {
    const double raw = horizon / dt;
    const std::size_t n = static_cast<std::size_t>(std::llround(raw));
    if (n == 0 || std::abs(static_cast<double>(n) * dt - horizon) > 1e-9 * std::max(1.0, horizon))
        throw_invalid(std::string(what) + ": dt must divide the horizon");
    return n;
}

void check_stability(const LinearProblem& problem, double dt) {
    const double bound = rk4_stability_bound(problem);
    if (dt > bound)
        throw_invalid("rk4 dt = " + std::to_string(dt) + " violates the stability bound " +
                      std::to_string(bound));
}

std::vector<std::vector<cplx>> spectral_source(const LinearProblem& problem) {
    std::vector<std::vector<cplx>> out;
    out.reserve(problem.source.snapshots.size());
    for (const Field& f : problem.source.snapshots)
        out.push_back(forward_transform(f).values);
    return out;
}

}  // namespace

double rk4_stability_bound(const LinearProblem& problem) {
    double max_xi2 = 0.0;
    const std::size_t modes = problem.grid.total();
    for (std::size_t s = 0; s < modes; ++s) max_xi2 = std::max(max_xi2, problem.grid.xi_squared(s));
    return 0.5 / std::sqrt(problem.op->spectral_radius() + max_xi2);
}

SpectralTrajectory rk4_integrate(const LinearProblem& problem, const Field& u0, const Field& u1,
                                 double dt, const std::vector<double>& output_times, int threads) {
    problem.validate();
    u0.validate("rk4 u0");
    u1.validate("rk4 u1");
    if (!(u0.grid == problem.grid) || !(u1.grid == problem.grid) || u0.hdim != problem.op->hdim() ||
        u1.hdim != problem.op->hdim())
        throw_invalid("rk4 initial data must match the problem grid/hdim");
    check_stability(problem, dt);
    const std::size_t nsteps = steps_for(problem.horizon, dt, "rk4");
    if (output_times.empty()) throw_invalid("rk4 needs at least one output time");

    // map output times onto step indices
    std::vector<std::size_t> out_step(output_times.size());
    for (std::size_t i = 0; i < output_times.size(); ++i) {
        const double pos = output_times[i] / dt;
        const std::size_t j = static_cast<std::size_t>(std::llround(pos));
        if (j > nsteps || std::abs(static_cast<double>(j) * dt - output_times[i]) >
                              1e-9 * std::max(1.0, problem.horizon))
            throw_invalid("rk4 output times must land on dt steps");
        out_step[i] = j;
    }

    const int d = problem.op->hdim();
    const std::size_t modes = problem.grid.total();
    const std::size_t flat = modes * static_cast<std::size_t>(d);

    // state layout: per mode contiguous y = (u fiber, v fiber)
    std::vector<cplx> state(2 * flat);
    {
        const SpectralField u0h = forward_transform(u0);
        const SpectralField u1h = forward_transform(u1);
        for (std::size_t s = 0; s < modes; ++s)
            for (int c = 0; c < d; ++c) {
                state[s * 2 * d + c] = u0h.at(s, c);
                state[s * 2 * d + d + c] = u1h.at(s, c);
            }
    }

    std::vector<std::vector<cplx>> src_hat;
    SourceInterp interp;
    if (!problem.source.empty()) {
        const double cover = problem.horizon;
        problem.source.validate(problem.grid, d, cover);
        src_hat = spectral_source(problem);
        interp.times = &problem.source.times;
        interp.values = &src_hat;
        interp.dt = problem.source.times[1] - problem.source.times[0];
    }

    std::vector<std::vector<cplx>> u_out(output_times.size(), std::vector<cplx>(flat));
    std::vector<std::vector<cplx>> ut_out(output_times.size(), std::vector<cplx>(flat));

    parallel_for(modes, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<cplx> k1(2 * d), k2(2 * d), k3(2 * d), k4(2 * d), tmp(2 * d);
        std::vector<cplx> f0(d), fh(d), f1v(d);
        for (std::size_t s = begin; s < end; ++s) {
            ModeOde ode{&problem.op->matrix(), problem.grid.xi_squared(s), d};
            cplx* y = state.data() + s * 2 * d;
            const std::size_t base = s * static_cast<std::size_t>(d);
            std::size_t next_out = 0;
            auto snapshot = [&](std::size_t step) {
                while (next_out < out_step.size() && out_step[next_out] == step) {
                    for (int c = 0; c < d; ++c) {
                        u_out[next_out][base + c] = y[c];
                        ut_out[next_out][base + c] = y[d + c];
                    }
                    ++next_out;
                }
            };
            snapshot(0);
            for (std::size_t step = 0; step < nsteps; ++step) {
                const double t = static_cast<double>(step) * dt;
                const cplx* pf0 = nullptr;
                const cplx* pfh = nullptr;
                const cplx* pf1 = nullptr;
                if (interp.active()) {
                    interp.at(t, base, d, f0.data());
                    interp.at(t + 0.5 * dt, base, d, fh.data());
                    interp.at(t + dt, base, d, f1v.data());
                    pf0 = f0.data();
                    pfh = fh.data();
                    pf1 = f1v.data();
                }
                rk4_step(ode, dt, y, pf0, pfh, pf1, k1.data(), k2.data(), k3.data(), k4.data(),
                         tmp.data());
                snapshot(step + 1);
            }
        }
    });

    SpectralTrajectory traj;
    traj.grid = problem.grid;
    traj.hdim = d;
    traj.times = output_times;
    for (std::size_t i = 0; i < output_times.size(); ++i) {
        SpectralField u(problem.grid, d), ut(problem.grid, d);
        u.values = std::move(u_out[i]);
        ut.values = std::move(ut_out[i]);
        traj.u_hat.push_back(std::move(u));
        traj.ut_hat.push_back(std::move(ut));
    }
    return traj;
}

InitialPair shooting_multipoint(const LinearProblem& problem, const MultipointSpec& spec,
                                double dt, ShootingReport* report, int threads,
                                double singular_tol) {
    problem.validate();
    spec.validate_horizon(problem.horizon);
    check_stability(problem, dt);
    const int d = problem.op->hdim();
    const int dim2 = 2 * d;
    const std::size_t modes = problem.grid.total();
    const std::size_t m = spec.count();

    // every lambda_k must land on an RK4 step
    std::vector<std::size_t> lambda_step(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double pos = spec.lambdas[k] / dt;
        const std::size_t j = static_cast<std::size_t>(std::llround(pos));
        if (std::abs(static_cast<double>(j) * dt - spec.lambdas[k]) > 1e-9)
            throw_invalid("shooting: lambda_k must land on dt steps");
        lambda_step[k] = j;
    }
    const std::size_t nsteps =
        m ? *std::max_element(lambda_step.begin(), lambda_step.end()) : std::size_t{0};

    const SpectralField phi_hat = forward_transform(problem.phi);
    const SpectralField psi_hat = forward_transform(problem.psi);

    std::vector<std::vector<cplx>> src_hat;
    SourceInterp interp;
    if (!problem.source.empty()) {
        problem.source.validate(problem.grid, d,
                               std::max(problem.horizon, m ? spec.max_lambda() : 0.0));
        src_hat = spectral_source(problem);
        interp.times = &problem.source.times;
        interp.values = &src_hat;
        interp.dt = problem.source.times[1] - problem.source.times[0];
    }

    std::vector<cplx> out_u0(modes * static_cast<std::size_t>(d));
    std::vector<cplx> out_u1(modes * static_cast<std::size_t>(d));
    std::vector<double> min_sv(modes, 1.0);
    std::vector<char> singular(modes, 0);

    // modes sharing |xi|^2 share the propagated basis columns
    std::map<double, std::vector<std::size_t>> groups;
    for (std::size_t s = 0; s < modes; ++s) groups[problem.grid.xi_squared(s)].push_back(s);
    std::vector<std::pair<double, std::vector<std::size_t>>> group_list(groups.begin(),
                                                                        groups.end());

    parallel_for(group_list.size(), threads, [&](std::size_t gbegin, std::size_t gend) {
        std::vector<cplx> k1(dim2), k2(dim2), k3(dim2), k4(dim2), tmp(dim2);
        std::vector<cplx> f0(d), fh(d), f1v(d);
        for (std::size_t g = gbegin; g < gend; ++g) {
            const double xi2 = group_list[g].first;
            const std::vector<std::size_t>& members = group_list[g].second;
            ModeOde ode{&problem.op->matrix(), xi2, d};

            // propagate the 2d basis columns (homogeneous) to every lambda_k
            std::vector<Eigen::MatrixXcd> p_at(m, Eigen::MatrixXcd::Zero(dim2, dim2));
            for (int col = 0; col < dim2; ++col) {
                std::vector<cplx> y(dim2, cplx{});
                y[col] = 1.0;
                auto record = [&](std::size_t step) {
                    for (std::size_t k = 0; k < m; ++k)
                        if (lambda_step[k] == step)
                            for (int rr = 0; rr < dim2; ++rr) p_at[k](rr, col) = y[rr];
                };
                record(0);
                for (std::size_t step = 0; step < nsteps; ++step) {
                    rk4_step(ode, dt, y.data(), nullptr, nullptr, nullptr, k1.data(), k2.data(),
                             k3.data(), k4.data(), tmp.data());
                    record(step + 1);
                }
            }

            // assembled multipoint map, shared across the group
            Eigen::MatrixXcd map = Eigen::MatrixXcd::Identity(dim2, dim2);
            for (std::size_t k = 0; k < m; ++k) {
                for (int col = 0; col < dim2; ++col) {
                    for (int r = 0; r < d; ++r)
                        map(r, col) -= spec.alphas[k] * p_at[k](r, col);
                    for (int r = 0; r < d; ++r)
                        map(d + r, col) -= spec.betas[k] * p_at[k](d + r, col);
                }
            }

            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(map, Eigen::ComputeThinU | Eigen::ComputeThinV);
            const double sv = svd.singularValues()(dim2 - 1);
            Eigen::PartialPivLU<Eigen::MatrixXcd> lu(map);

            for (std::size_t s : members) {
                min_sv[s] = sv;
                if (sv < singular_tol) {
                    singular[s] = 1;
                    continue;
                }

                // inhomogeneous zero-data column for this mode's own source
                std::vector<Eigen::VectorXcd> d_at(m, Eigen::VectorXcd::Zero(dim2));
                if (interp.active()) {
                    std::vector<cplx> y(dim2, cplx{});
                    const std::size_t base = s * static_cast<std::size_t>(d);
                    for (std::size_t step = 0; step < nsteps; ++step) {
                        const double t = static_cast<double>(step) * dt;
                        interp.at(t, base, d, f0.data());
                        interp.at(t + 0.5 * dt, base, d, fh.data());
                        interp.at(t + dt, base, d, f1v.data());
                        rk4_step(ode, dt, y.data(), f0.data(), fh.data(), f1v.data(), k1.data(),
                                 k2.data(), k3.data(), k4.data(), tmp.data());
                        for (std::size_t k = 0; k < m; ++k)
                            if (lambda_step[k] == step + 1)
                                for (int rr = 0; rr < dim2; ++rr) d_at[k](rr) = y[rr];
                    }
                }

                Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(dim2);
                for (int c = 0; c < d; ++c) {
                    rhs(c) = phi_hat.at(s, c);
                    rhs(d + c) = psi_hat.at(s, c);
                }
                for (std::size_t k = 0; k < m; ++k) {
                    for (int r = 0; r < d; ++r) rhs(r) += spec.alphas[k] * d_at[k](r);
                    for (int r = 0; r < d; ++r) rhs(d + r) += spec.betas[k] * d_at[k](d + r);
                }

                const Eigen::VectorXcd x = lu.solve(rhs);
                const std::size_t base = s * static_cast<std::size_t>(d);
                for (int c = 0; c < d; ++c) {
                    out_u0[base + c] = x(c);
                    out_u1[base + c] = x(d + c);
                }
            }
        }
    });

    ShootingReport rep;
    rep.min_singular_value = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < modes; ++s) {
        rep.min_singular_value = std::min(rep.min_singular_value, min_sv[s]);
        if (singular[s]) rep.singular_modes.push_back(problem.grid.freq_vector(s));
    }
    if (report) *report = rep;
    if (!rep.singular_modes.empty()) {
        std::ostringstream os;
        os << "shooting: numerically singular multipoint map at ";
        for (std::size_t i = 0; i < std::min<std::size_t>(rep.singular_modes.size(), 8); ++i) {
            if (i) os << ", ";
            os << "k=" << format_freq(rep.singular_modes[i]);
        }
        throw_numerical(os.str());
    }

    InitialPair pair;
    pair.u0 = SpectralField(problem.grid, d);
    pair.u1 = SpectralField(problem.grid, d);
    pair.u0.values = std::move(out_u0);
    pair.u1.values = std::move(out_u1);
    return pair;
}

CompareReport compare_trajectories(const SpectralTrajectory& a, const SpectralTrajectory& b) {
    if (!(a.grid == b.grid) || a.hdim != b.hdim) throw_invalid("compare: grid/hdim mismatch");
    if (a.times.size() != b.times.size()) throw_invalid("compare: time axis mismatch");
    for (std::size_t i = 0; i < a.times.size(); ++i)
        if (std::abs(a.times[i] - b.times[i]) > 1e-12 * std::max(1.0, std::abs(a.times[i])))
            throw_invalid("compare: time axis mismatch");

    CompareReport rep;
    std::vector<double> l2_series(a.times.size());
    for (std::size_t i = 0; i < a.times.size(); ++i) {
        const Field fa = a.u_physical(i);
        const Field fb = b.u_physical(i);
        const Field diff = fa - fb;
        rep.sup_diff = std::max(rep.sup_diff, diff.max_fiber_norm());
        rep.sup_ref = std::max(rep.sup_ref, fa.max_fiber_norm());
        const double l2 = l2_norm(diff);
        rep.l2_diff = std::max(rep.l2_diff, l2);
        l2_series[i] = l2;
    }
    if (a.times.size() >= 2) rep.mixed_diff = time_lq_norm(a.times, l2_series, 2.0);
    return rep;
}

}  // namespace mw
