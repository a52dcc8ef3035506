#include "multiwave/linear_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "multiwave/parallel.hpp"

namespace mw {
namespace {

constexpr double gauss_node = 0.5773502691896257645;  // 1/sqrt(3)

struct ScalarPrefix {
    // Prefix integrals of cos(omega tau) F(tau) and sin(omega tau) F(tau)
    // over the source grid, per-step 2-point Gauss with linear source
    // interpolation. Empty when there is no source.
    std::vector<cplx> ic;
    std::vector<cplx> is;
};

// One scalar mode component: everything is a function of mu = lambda_i + |xi|^2.
struct ScalarMode {
    double omega{1.0};
    double mu{1.0};

    void segment(double ta, double tb, double sa, double dt_src, cplx fa, cplx fb, cplx& ic,
                 cplx& is) const {
        const double half = 0.5 * (tb - ta);
        const double mid = 0.5 * (ta + tb);
        for (int g = 0; g < 2; ++g) {
            const double tau = mid + (g == 0 ? -gauss_node : gauss_node) * half;
            const double theta = (tau - sa) / dt_src;
            const cplx f = (1.0 - theta) * fa + theta * fb;
            ic += half * std::cos(omega * tau) * f;
            is += half * std::sin(omega * tau) * f;
        }
    }

    void build_prefix(const std::vector<double>& times, const cplx* values, std::size_t stride,
                      ScalarPrefix& out) const {
        const std::size_t nt = times.size();
        out.ic.assign(nt, cplx{});
        out.is.assign(nt, cplx{});
        const double dt = times[1] - times[0];
        for (std::size_t j = 0; j + 1 < nt; ++j) {
            cplx ic = out.ic[j];
            cplx is = out.is[j];
            segment(times[j], times[j + 1], times[j], dt, values[j * stride],
                    values[(j + 1) * stride], ic, is);
            out.ic[j + 1] = ic;
            out.is[j + 1] = is;
        }
    }

    void prefix_at(const std::vector<double>& times, const cplx* values, std::size_t stride,
                   const ScalarPrefix& pre, double t, cplx& ic, cplx& is) const {
        const double dt = times[1] - times[0];
        const double pos = t / dt + 1e-9;
        std::size_t j = pos <= 0.0 ? 0 : std::min(times.size() - 1, static_cast<std::size_t>(pos));
        ic = pre.ic[j];
        is = pre.is[j];
        if (t - times[j] > 1e-12 * std::max(1.0, t) && j + 1 < times.size()) {
            segment(times[j], t, times[j], dt, values[j * stride], values[(j + 1) * stride], ic, is);
        }
    }

    // int_0^t sin(omega (t - tau))/omega F dtau and int_0^t cos(omega (t-tau)) F dtau
    void duhamel(double t, cplx ic, cplx is, cplx& du, cplx& dut) const {
        const double c = std::cos(omega * t);
        const double s = std::sin(omega * t);
        du = (s * ic - c * is) / omega;
        dut = c * ic + s * is;
    }
};

struct ScalarSystem {
    cplx a11{1.0}, a12{0.0}, a21{0.0}, a22{1.0};
    cplx det{1.0};
};

ScalarSystem assemble_scalar(const MultipointSpec& spec, const ScalarMode& mode) {
    ScalarSystem sys;
    for (std::size_t k = 0; k < spec.count(); ++k) {
        const double c = std::cos(mode.omega * spec.lambdas[k]);
        const double s = std::sin(mode.omega * spec.lambdas[k]) / mode.omega;
        sys.a11 -= spec.alphas[k] * c;
        sys.a12 -= spec.alphas[k] * s;
        sys.a21 += spec.betas[k] * (mode.mu * s);
        sys.a22 -= spec.betas[k] * c;
    }
    sys.det = sys.a11 * sys.a22 - sys.a12 * sys.a21;
    return sys;
}

struct ModeScratch {
    ScalarPrefix prefix;
    std::vector<cplx> fiber_in;
};

}  // namespace

void SourceSamples::validate(const GridSpec& grid, int hdim, double cover) const {
    if (empty()) return;
    if (times.size() != snapshots.size()) throw_invalid("source times/snapshots mismatch");
    if (times.size() < 2) throw_invalid("source needs >= 2 time samples");
    if (std::abs(times.front()) > 1e-12) throw_invalid("source time grid must start at 0");
    const double dt = times[1] - times[0];
    if (!(dt > 0)) throw_invalid("source time grid must be increasing");
    for (std::size_t i = 1; i + 1 < times.size(); ++i)
        if (std::abs((times[i + 1] - times[i]) - dt) > 1e-9 * dt)
            throw_invalid("source time grid must be uniform");
    if (times.back() < cover * (1.0 - 1e-12))
        throw_invalid("source time grid must cover [0, " + std::to_string(cover) + "]");
    for (const Field& f : snapshots) {
        if (!(f.grid == grid) || f.hdim != hdim)
            throw_invalid("source snapshot grid/hdim mismatch");
        f.validate("source snapshot");
    }
}

void LinearProblem::validate() const {
    if (!op) throw_invalid("linear problem needs an operator");
    if (!(horizon > 0.0)) throw_invalid("horizon must be positive");
    if (!(phi.grid == grid) || !(psi.grid == grid))
        throw_invalid("phi/psi must live on the problem grid");
    if (phi.hdim != op->hdim() || psi.hdim != op->hdim())
        throw_invalid("data hdim must match the operator dimension");
    phi.validate("phi");
    psi.validate("psi");
}

std::vector<double> uniform_times(double t0, double t1, std::size_t count) {
    if (count < 2) throw_invalid("need at least 2 time samples");
    std::vector<double> t(count);
    const double dt = (t1 - t0) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) t[i] = t0 + dt * static_cast<double>(i);
    t.back() = t1;
    return t;
}

namespace {

struct SolveWork {
    const LinearProblem* problem;
    const MultipointSpec* spec;
    const std::vector<double>* times;
    const SolveOptions* options;

    GridSpec grid;
    int d{1};
    std::size_t modes{0};

    // data rotated into the eigenbasis of A, flattened [mode * d + i]
    std::vector<cplx> phi_e;
    std::vector<cplx> psi_e;
    std::vector<double> src_times;
    std::vector<std::vector<cplx>> src_e;  // per time sample

    // outputs
    std::vector<std::vector<cplx>> u_out;   // per output time
    std::vector<std::vector<cplx>> ut_out;
    std::vector<std::vector<cplx>> u_lam;   // per lambda_k
    std::vector<std::vector<cplx>> ut_lam;

    std::vector<double> min_scalar_det;  // per mode
    std::vector<double> abs_det;         // per mode, |prod_i det_i|
    std::vector<char> singular;          // per mode
};

std::vector<cplx> rotate_full(const SpectralField& g, const OperatorSpec& op) {
    const int d = op.hdim();
    std::vector<cplx> out(g.values.size());
    if (d == 1) {
        out = g.values;
        // still apply the 1x1 rotation so all paths share one convention
        const cplx v = std::conj(op.eigenvectors()(0, 0));
        for (cplx& z : out) z *= v;
        return out;
    }
    const std::size_t modes = g.modes();
    for (std::size_t s = 0; s < modes; ++s)
        op.to_eigenbasis(g.values.data() + s * static_cast<std::size_t>(d),
                         out.data() + s * static_cast<std::size_t>(d));
    return out;
}

void solve_modes(SolveWork& work) {
    const OperatorSpec& op = *work.problem->op;
    const MultipointSpec& spec = *work.spec;
    const SolveOptions& options = *work.options;
    const int d = work.d;
    const std::size_t nt_out = work.times->size();
    const std::size_t m = spec.count();
    const bool has_source = !work.src_times.empty();

    parallel_for(work.modes, options.threads, [&](std::size_t begin, std::size_t end) {
        ModeScratch scratch;
        std::vector<cplx> u_rot(static_cast<std::size_t>(d));
        // per-(time, component) staging before the back-rotation
        std::vector<cplx> stage_u(nt_out * static_cast<std::size_t>(d));
        std::vector<cplx> stage_ut(nt_out * static_cast<std::size_t>(d));
        std::vector<cplx> stage_u_lam(m * static_cast<std::size_t>(d));
        std::vector<cplx> stage_ut_lam(m * static_cast<std::size_t>(d));

        for (std::size_t s = begin; s < end; ++s) {
            const double xi2 = work.grid.xi_squared(s);
            double min_det = std::numeric_limits<double>::infinity();
            cplx det_prod = 1.0;
            bool mode_singular = false;

            for (int i = 0; i < d; ++i) {
                ScalarMode mode;
                mode.mu = op.eigenvalues()[static_cast<std::size_t>(i)] + xi2;
                mode.omega = std::sqrt(mode.mu);
                const std::size_t base = s * static_cast<std::size_t>(d) + static_cast<std::size_t>(i);

                const cplx* src = nullptr;
                std::size_t stride = 0;
                if (has_source) {
                    // gather this component's source series
                    scratch.fiber_in.resize(work.src_times.size());
                    for (std::size_t j = 0; j < work.src_times.size(); ++j)
                        scratch.fiber_in[j] = work.src_e[j][base];
                    src = scratch.fiber_in.data();
                    stride = 1;
                    mode.build_prefix(work.src_times, src, stride, scratch.prefix);
                }

                const ScalarSystem sys = assemble_scalar(spec, mode);
                const double abs_d = std::abs(sys.det);
                min_det = std::min(min_det, abs_d);
                det_prod *= sys.det;
                if (!(abs_d * options.condition_cap > 1.0)) {
                    mode_singular = true;
                    continue;
                }

                cplx f1 = work.phi_e[base];
                cplx f2 = work.psi_e[base];
                if (has_source && !spec.is_cauchy()) {
                    for (std::size_t k = 0; k < m; ++k) {
                        cplx ic, is;
                        mode.prefix_at(work.src_times, src, stride, scratch.prefix,
                                       spec.lambdas[k], ic, is);
                        cplx du, dut;
                        mode.duhamel(spec.lambdas[k], ic, is, du, dut);
                        f1 += spec.alphas[k] * du;
                        f2 += spec.betas[k] * dut;
                        if (options.half_source_term) {
                            const double dt = work.src_times[1] - work.src_times[0];
                            const double pos = spec.lambdas[k] / dt + 1e-9;
                            const std::size_t j = std::min(work.src_times.size() - 2,
                                                           static_cast<std::size_t>(pos));
                            const double theta = (spec.lambdas[k] - work.src_times[j]) / dt;
                            const cplx f = (1.0 - theta) * src[j] + theta * src[j + 1];
                            f2 += 0.5 * spec.betas[k] * f;
                        }
                    }
                }

                const cplx u0 = (sys.a22 * f1 - sys.a12 * f2) / sys.det;
                const cplx u1 = (sys.a11 * f2 - sys.a21 * f1) / sys.det;

                auto evaluate = [&](double t, cplx& u, cplx& ut) {
                    const double c = std::cos(mode.omega * t);
                    const double sn = std::sin(mode.omega * t);
                    u = c * u0 + sn / mode.omega * u1;
                    ut = -mode.mu * (sn / mode.omega) * u0 + c * u1;
                    if (has_source) {
                        cplx ic, is;
                        mode.prefix_at(work.src_times, src, stride, scratch.prefix, t, ic, is);
                        cplx du, dut;
                        mode.duhamel(t, ic, is, du, dut);
                        u += du;
                        ut += dut;
                    }
                };

                for (std::size_t j = 0; j < nt_out; ++j) {
                    cplx u, ut;
                    evaluate((*work.times)[j], u, ut);
                    stage_u[j * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)] = u;
                    stage_ut[j * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)] = ut;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    cplx u, ut;
                    evaluate(spec.lambdas[k], u, ut);
                    stage_u_lam[k * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)] = u;
                    stage_ut_lam[k * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)] = ut;
                }
            }

            work.min_scalar_det[s] = min_det;
            work.abs_det[s] = std::abs(det_prod);
            work.singular[s] = mode_singular ? 1 : 0;
            if (mode_singular) continue;

            // rotate fibers back to the original basis and store
            auto store = [&](const std::vector<cplx>& stage, std::vector<std::vector<cplx>>& out,
                             std::size_t count) {
                for (std::size_t j = 0; j < count; ++j) {
                    const cplx* w = stage.data() + j * static_cast<std::size_t>(d);
                    op.from_eigenbasis(w, u_rot.data());
                    for (int c = 0; c < d; ++c)
                        out[j][s * static_cast<std::size_t>(d) + static_cast<std::size_t>(c)] =
                            u_rot[static_cast<std::size_t>(c)];
                }
            };
            store(stage_u, work.u_out, nt_out);
            store(stage_ut, work.ut_out, nt_out);
            store(stage_u_lam, work.u_lam, m);
            store(stage_ut_lam, work.ut_lam, m);
        }
    });
}

SolveWork prepare_work(const LinearProblem& problem, const MultipointSpec& spec,
                       const std::vector<double>& times, const SolveOptions& options) {
    problem.validate();
    spec.validate_horizon(problem.horizon);
    const double cover = std::max(problem.horizon, spec.count() ? spec.max_lambda() : 0.0);
    problem.source.validate(problem.grid, problem.op->hdim(), cover);
    for (double t : times)
        if (t < -1e-12 || t > problem.horizon * (1.0 + 1e-12))
            throw_invalid("output time outside [0, horizon]");

    SolveWork work;
    work.problem = &problem;
    work.spec = &spec;
    work.times = &times;
    work.options = &options;
    work.grid = problem.grid;
    work.d = problem.op->hdim();
    work.modes = problem.grid.total();

    work.phi_e = rotate_full(forward_transform(problem.phi), *problem.op);
    work.psi_e = rotate_full(forward_transform(problem.psi), *problem.op);
    if (!problem.source.empty()) {
        work.src_times = problem.source.times;
        work.src_e.reserve(problem.source.snapshots.size());
        for (const Field& f : problem.source.snapshots)
            work.src_e.push_back(rotate_full(forward_transform(f), *problem.op));
    }

    const std::size_t flat = work.modes * static_cast<std::size_t>(work.d);
    work.u_out.assign(times.size(), std::vector<cplx>(flat));
    work.ut_out.assign(times.size(), std::vector<cplx>(flat));
    work.u_lam.assign(spec.count(), std::vector<cplx>(flat));
    work.ut_lam.assign(spec.count(), std::vector<cplx>(flat));
    work.min_scalar_det.assign(work.modes, 0.0);
    work.abs_det.assign(work.modes, 0.0);
    work.singular.assign(work.modes, 0);
    return work;
}

void reduce_report(const SolveWork& work, SolveReport* report) {
    SolveReport r;
    r.mode_count = work.modes;
    r.min_abs_det = std::numeric_limits<double>::infinity();
    r.max_inv_det_norm = 0.0;
    for (std::size_t s = 0; s < work.modes; ++s) {
        r.min_abs_det = std::min(r.min_abs_det, work.abs_det[s]);
        if (work.min_scalar_det[s] > 0.0)
            r.max_inv_det_norm = std::max(r.max_inv_det_norm, 1.0 / work.min_scalar_det[s]);
        else
            r.max_inv_det_norm = std::numeric_limits<double>::infinity();
        if (work.singular[s]) r.singular_modes.push_back(work.grid.freq_vector(s));
    }
    if (report) *report = r;
    if (!r.singular_modes.empty()) {
        std::ostringstream os;
        os << "singular multipoint mode at ";
        for (std::size_t i = 0; i < std::min<std::size_t>(r.singular_modes.size(), 8); ++i) {
            if (i) os << ", ";
            os << "k=" << format_freq(r.singular_modes[i]);
        }
        if (r.singular_modes.size() > 8) os << ", ... (" << r.singular_modes.size() << " modes)";
        throw_numerical(os.str());
    }
}

}  // namespace

SpectralTrajectory solve_linear(const LinearProblem& problem, const MultipointSpec& spec,
                                const std::vector<double>& times, SolveReport* report,
                                const SolveOptions& options) {
    if (times.size() < 1) throw_invalid("solve_linear needs at least one output time");
    SolveWork work = prepare_work(problem, spec, times, options);
    solve_modes(work);
    reduce_report(work, report);

    SpectralTrajectory traj;
    traj.grid = problem.grid;
    traj.hdim = work.d;
    traj.times = times;
    traj.u_hat.reserve(times.size());
    traj.ut_hat.reserve(times.size());
    for (std::size_t j = 0; j < times.size(); ++j) {
        SpectralField u(problem.grid, work.d), ut(problem.grid, work.d);
        u.values = std::move(work.u_out[j]);
        ut.values = std::move(work.ut_out[j]);
        traj.u_hat.push_back(std::move(u));
        traj.ut_hat.push_back(std::move(ut));
    }
    traj.lambda_times = spec.lambdas;
    for (std::size_t k = 0; k < spec.count(); ++k) {
        SpectralField u(problem.grid, work.d), ut(problem.grid, work.d);
        u.values = std::move(work.u_lam[k]);
        ut.values = std::move(work.ut_lam[k]);
        traj.u_at_lambda.push_back(std::move(u));
        traj.ut_at_lambda.push_back(std::move(ut));
    }
    return traj;
}

InitialPair solve_initial_data(const LinearProblem& problem, const MultipointSpec& spec,
                               SolveReport* report, const SolveOptions& options) {
    const std::vector<double> t0{0.0};
    SpectralTrajectory traj = solve_linear(problem, spec, t0, report, options);
    return InitialPair{std::move(traj.u_hat[0]), std::move(traj.ut_hat[0])};
}

namespace {

double flat_norm(const std::vector<cplx>& v, double cellvol) {
    double s = 0.0;
    for (const cplx& z : v) s += std::norm(z);
    return std::sqrt(s * cellvol);
}

}  // namespace

ResidualReport verify_solution(const SpectralTrajectory& traj, const LinearProblem& problem,
                               const MultipointSpec& spec) {
    if (traj.samples() < 3) throw_invalid("verify_solution needs >= 3 time samples");
    if (std::abs(traj.times.front()) > 1e-12) throw_invalid("verify_solution needs times[0] = 0");
    const OperatorSpec& op = *problem.op;
    const int d = traj.hdim;
    const std::size_t modes = traj.grid.total();
    const double cellvol = traj.grid.cell_volume();
    const double dt = traj.times[1] - traj.times[0];

    ResidualReport report;

    // (i) PDE residual with 2nd-order time differencing, spectral in space.
    const bool has_source = !problem.source.empty();
    std::vector<SpectralField> src_hat;
    if (has_source) {
        src_hat.reserve(problem.source.snapshots.size());
        for (const Field& f : problem.source.snapshots) src_hat.push_back(forward_transform(f));
    }
    double res_acc = 0.0;
    double scale_acc = 0.0;
    CVec fiber(static_cast<std::size_t>(d));
    for (std::size_t j = 1; j + 1 < traj.samples(); ++j) {
        std::size_t sj = 0;
        double theta = 0.0;
        if (has_source) {
            const double sdt = problem.source.times[1] - problem.source.times[0];
            const double pos = traj.times[j] / sdt + 1e-9;
            sj = std::min(problem.source.times.size() - 2, static_cast<std::size_t>(pos));
            theta = (traj.times[j] - problem.source.times[sj]) / sdt;
        }
        for (std::size_t s = 0; s < modes; ++s) {
            const double xi2 = traj.grid.xi_squared(s);
            for (int c = 0; c < d; ++c) fiber[static_cast<std::size_t>(c)] = traj.u_hat[j].at(s, c);
            const CVec ax = op.apply(fiber);
            for (int c = 0; c < d; ++c) {
                const cplx afu =
                    ax[static_cast<std::size_t>(c)] + xi2 * fiber[static_cast<std::size_t>(c)];
                const cplx utt = (traj.u_hat[j + 1].at(s, c) - 2.0 * traj.u_hat[j].at(s, c) +
                                  traj.u_hat[j - 1].at(s, c)) /
                                 (dt * dt);
                cplx f{};
                if (has_source)
                    f = (1.0 - theta) * src_hat[sj].at(s, c) + theta * src_hat[sj + 1].at(s, c);
                const cplx r = utt + afu - f;
                res_acc += std::norm(r);
                scale_acc += std::norm(utt) + std::norm(afu) + std::norm(f);
            }
        }
    }
    report.pde_residual = std::sqrt(res_acc) / std::max(std::sqrt(scale_acc), 1e-300);

    // (ii) multipoint condition residuals
    const SpectralField& u0 = traj.u_hat.front();
    const SpectralField& ut0 = traj.ut_hat.front();
    const SpectralField phi_hat = forward_transform(problem.phi);
    const SpectralField psi_hat = forward_transform(problem.psi);
    auto lambda_snapshot = [&](std::size_t k, bool deriv) -> const SpectralField& {
        if (!traj.u_at_lambda.empty()) {
            return deriv ? traj.ut_at_lambda[k] : traj.u_at_lambda[k];
        }
        const double l = spec.lambdas[k];
        for (std::size_t j = 0; j < traj.samples(); ++j)
            if (std::abs(traj.times[j] - l) < 1e-9 * std::max(1.0, l))
                return deriv ? traj.ut_hat[j] : traj.u_hat[j];
        throw_invalid("trajectory has no snapshot at lambda_k = " + std::to_string(l));
    };

    auto condition_residual = [&](const SpectralField& at0, const SpectralField& data,
                                  const std::vector<cplx>& coeff, bool deriv) {
        std::vector<cplx> res = at0.values;
        double scale = flat_norm(at0.values, cellvol) + flat_norm(data.values, cellvol);
        for (std::size_t i = 0; i < res.size(); ++i) res[i] -= data.values[i];
        for (std::size_t k = 0; k < spec.count(); ++k) {
            if (coeff[k] == cplx{}) continue;
            const SpectralField& snap = lambda_snapshot(k, deriv);
            for (std::size_t i = 0; i < res.size(); ++i) res[i] -= coeff[k] * snap.values[i];
            scale += std::abs(coeff[k]) * flat_norm(snap.values, cellvol);
        }
        return flat_norm(res, cellvol) / std::max(scale, 1e-300);
    };
    report.cond_u_residual = condition_residual(u0, phi_hat, spec.alphas, false);
    report.cond_ut_residual = condition_residual(ut0, psi_hat, spec.betas, true);

    // (iii) energy drift for F = 0
    if (!has_source) {
        report.has_energy = true;
        double emin = std::numeric_limits<double>::infinity();
        double emax = 0.0;
        for (std::size_t j = 0; j < traj.samples(); ++j) {
            const double e = trajectory_energy(traj, op, j);
            emin = std::min(emin, e);
            emax = std::max(emax, e);
        }
        report.energy_drift = (emax - emin) / std::max(emax, 1e-300);
    }
    return report;
}

double trajectory_energy(const SpectralTrajectory& traj, const OperatorSpec& op, std::size_t i) {
    const int d = traj.hdim;
    const std::size_t modes = traj.grid.total();
    double acc = 0.0;
    CVec fiber(static_cast<std::size_t>(d));
    for (std::size_t s = 0; s < modes; ++s) {
        const double xi2 = traj.grid.xi_squared(s);
        double ut2 = 0.0;
        for (int c = 0; c < d; ++c) {
            ut2 += std::norm(traj.ut_hat[i].at(s, c));
            fiber[static_cast<std::size_t>(c)] = traj.u_hat[i].at(s, c);
        }
        const CVec au = op.apply(fiber);
        double quad = 0.0;
        for (int c = 0; c < d; ++c)
            quad += (au[static_cast<std::size_t>(c)] * std::conj(fiber[static_cast<std::size_t>(c)])).real() +
                    xi2 * std::norm(fiber[static_cast<std::size_t>(c)]);
        acc += ut2 + quad;
    }
    return acc * traj.grid.cell_volume();
}

}  // namespace mw
