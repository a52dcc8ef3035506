#include "multiwave/nonlinear.hpp"

#include <algorithm>
#include <cmath>

namespace mw {
namespace {

Rat rationalize(double x, std::int64_t max_den = 1 << 20) {
    // continued fractions; inputs are config-supplied values like 3 or 2.5
    if (!std::isfinite(x)) throw_invalid("cannot rationalize a non-finite value");
    const bool neg = x < 0;
    double v = std::abs(x);
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        const double a_f = std::floor(v);
        const std::int64_t a = static_cast<std::int64_t>(a_f);
        std::int64_t p2 = a * p1 + p0;
        std::int64_t q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double frac = v - a_f;
        if (frac < 1e-12) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) throw_invalid("cannot rationalize value");
    return Rat(neg ? -p1 : p1, q1);
}

SpectralField apply_operator_matrix(const SpectralField& g, const OperatorSpec& op) {
    SpectralField out(g.grid, g.hdim);
    const int d = g.hdim;
    if (d == 1) {
        const cplx a = op.matrix()(0, 0);
        for (std::size_t i = 0; i < g.values.size(); ++i) out.values[i] = a * g.values[i];
        return out;
    }
    CVec fiber(static_cast<std::size_t>(d));
    const std::size_t modes = g.modes();
    for (std::size_t s = 0; s < modes; ++s) {
        for (int c = 0; c < d; ++c) fiber[static_cast<std::size_t>(c)] = g.at(s, c);
        const CVec a = op.apply(fiber);
        for (int c = 0; c < d; ++c) out.at(s, c) = a[static_cast<std::size_t>(c)];
    }
    return out;
}

double vnorm_of_snapshots(const std::vector<double>& times,
                          const std::vector<SpectralField>& u_hat, const OperatorSpec& op,
                          double q, double r) {
    std::vector<double> norms(times.size());
    for (std::size_t j = 0; j < times.size(); ++j)
        norms[j] = lr_norm(inverse_transform(apply_operator_matrix(u_hat[j], op)), r);
    return time_lq_norm(times, norms, q);
}

std::vector<SpectralField> snapshot_difference(const std::vector<SpectralField>& a,
                                               const std::vector<SpectralField>& b) {
    std::vector<SpectralField> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
    return out;
}

}  // namespace

Nonlinearity Nonlinearity::scalar_power(double lambda, double k) {
    if (!(k > 1.0)) throw_invalid("nonlinearity power k must be > 1");
    return Nonlinearity{Kind::scalar_power, lambda, k};
}

Nonlinearity Nonlinearity::fiber_norm_power(double lambda, double k) {
    if (!(k > 1.0)) throw_invalid("nonlinearity power k must be > 1");
    return Nonlinearity{Kind::fiber_norm_power, lambda, k};
}

Field eval_nonlinearity(const Nonlinearity& nl, const Field& u) {
    if (nl.kind == Nonlinearity::Kind::scalar_power && u.hdim != 1)
        throw_invalid("scalar_power nonlinearity requires hdim = 1");
    Field out(u.grid, u.hdim);
    const std::size_t n = u.points();
    if (nl.kind == Nonlinearity::Kind::scalar_power) {
        for (std::size_t s = 0; s < n; ++s) {
            const cplx z = u.at(s, 0);
            const double m = std::abs(z);
            out.at(s, 0) = nl.lambda * std::pow(m, nl.k - 1.0) * z;
        }
    } else {
        for (std::size_t s = 0; s < n; ++s) {
            double m2 = 0.0;
            for (int c = 0; c < u.hdim; ++c) m2 += std::norm(u.at(s, c));
            const double w = nl.lambda * std::pow(std::sqrt(m2), nl.k - 1.0);
            for (int c = 0; c < u.hdim; ++c) out.at(s, c) = w * u.at(s, c);
        }
    }
    return out;
}

double select_window(double ball_radius, double k, double holder_p, double horizon,
                     double target) {
    if (!(ball_radius > 0.0) || !(holder_p >= 1.0) || !(k > 1.0) || !(horizon > 0.0))
        throw_invalid("select_window: need M > 0, p >= 1, k > 1, horizon > 0");
    const double mk = std::pow(ball_radius, k - 1.0);
    double t = horizon;
    for (int j = 0; j < 200; ++j) {
        if (std::pow(t, 1.0 / holder_p) * mk <= target) return t;
        t *= 0.5;
    }
    return t;
}

std::optional<double> derive_holder_p(int n, Rat gamma, double k, ExponentPair pair) {
    const double inv_q = pair.q.reciprocal().to_double();
    const double inv_r = pair.r.reciprocal().to_double();
    const double inv_rt = 1.0 - k * inv_r;
    if (inv_rt < 0.0 || inv_rt > 0.5 + 1e-12) return std::nullopt;
    const double inv_qt = 0.5 * n - 1.0 + gamma.to_double() - n * inv_rt;
    if (inv_qt < -1e-12 || inv_qt > 0.5 + 1e-12) return std::nullopt;
    const double inv_qtp = 1.0 - std::max(0.0, inv_qt);
    const double inv_p = inv_qtp - k * inv_q;
    if (inv_p <= 1e-12 || inv_p > 1.0 + 1e-12) return std::nullopt;
    return std::max(1.0, 1.0 / inv_p);
}

VNorm VNorm::make(int n, Rat gamma) {
    VNorm v;
    if (auto pair = sharp_pair_for_gamma(n, gamma)) {
        v.pair = *pair;
    } else {
        v.pair = ExponentPair{Exponent::infinity(), Exponent(Rat(2))};
    }
    v.q = v.pair.q.to_double();
    v.r = v.pair.r.to_double();
    return v;
}

double VNorm::operator()(const SpectralTrajectory& traj, const OperatorSpec& op) const {
    return vnorm_of_snapshots(traj.times, traj.u_hat, op, q, r);
}

SpectralTrajectory picard_map(const SpectralTrajectory& u, const LinearProblem& problem,
                              const MultipointSpec& spec, const Nonlinearity& nl,
                              const SolveOptions& options) {
    LinearProblem with_source = problem;
    with_source.source.times = u.times;
    with_source.source.snapshots.clear();
    with_source.source.snapshots.reserve(u.samples());
    for (std::size_t j = 0; j < u.samples(); ++j)
        with_source.source.snapshots.push_back(eval_nonlinearity(nl, u.u_physical(j)));
    return solve_linear(with_source, spec, u.times, nullptr, options);
}

namespace {

PicardConfig resolve_config(const LinearProblem& problem, const Nonlinearity& nl,
                            const PicardConfig& config) {
    PicardConfig cfg = config;
    if (cfg.gamma == Rat(0)) {
        // scaling-critical default gamma = n (1/2 - 1/k)
        cfg.gamma = Rat(problem.grid.ndim) *
                    (Rat(1, 2) - Rat(1) / rationalize(nl.k));
    }
    return cfg;
}

}  // namespace

SpectralTrajectory solve_nonlinear(const LinearProblem& problem, const MultipointSpec& spec,
                                   const Nonlinearity& nl, const PicardConfig& config_in,
                                   ConvergenceReport* report, const SolveOptions& options,
                                   bool start_from_zero) {
    const PicardConfig config = resolve_config(problem, nl, config_in);
    const VNorm vn = VNorm::make(problem.grid.ndim, config.gamma);
    ConvergenceReport rep;

    // S(0) on the full horizon bounds the ball radius before the window is known.
    const std::size_t nt = static_cast<std::size_t>(config.time_steps) + 1;
    LinearProblem base = problem;
    base.source = SourceSamples{};
    SpectralTrajectory s0_full =
        solve_linear(base, spec, uniform_times(0.0, problem.horizon, nt), nullptr, options);

    double ball = config.ball_radius;
    if (!(ball > 0.0)) ball = 2.0 * vn(s0_full, *problem.op) + 1e-12;

    double window = config.window;
    if (!(window > 0.0)) {
        double p = config.holder_p;
        if (!(p >= 1.0)) {
            const auto derived = derive_holder_p(problem.grid.ndim, config.gamma, nl.k, vn.pair);
            if (!derived)
                throw_invalid(
                    "no valid Hoelder exponent p exists for these exponents; set the window "
                    "explicitly");
            p = *derived;
        }
        window = select_window(ball, nl.k, p, problem.horizon, config.contraction_target);
    }
    window = std::min(window, problem.horizon);
    rep.window = window;
    rep.ball_radius = ball;
    rep.window_warning = window < 1e-6;
    if (!spec.is_cauchy() && spec.max_lambda() > window * (1.0 + 1e-12))
        throw_numerical("multipoint times lambda_k exceed the contraction window T = " +
                        std::to_string(window) +
                        "; conditions are only supported inside the first window");

    LinearProblem window_problem = base;
    window_problem.horizon = window;
    const std::vector<double> times = uniform_times(0.0, window, nt);

    SpectralTrajectory u = solve_linear(window_problem, spec, times, nullptr, options);
    if (start_from_zero) {
        for (auto& f : u.u_hat) std::fill(f.values.begin(), f.values.end(), cplx{});
        for (auto& f : u.ut_hat) std::fill(f.values.begin(), f.values.end(), cplx{});
        for (auto& f : u.u_at_lambda) std::fill(f.values.begin(), f.values.end(), cplx{});
        for (auto& f : u.ut_at_lambda) std::fill(f.values.begin(), f.values.end(), cplx{});
    }

    double prev_diff = -1.0;
    bool converged = false;
    for (int it = 0; it < config.max_iter; ++it) {
        SpectralTrajectory next = picard_map(u, window_problem, spec, nl, options);
        const double diff =
            vnorm_of_snapshots(times, snapshot_difference(next.u_hat, u.u_hat), *problem.op,
                               vn.q, vn.r);
        rep.diffs.push_back(diff);
        if (prev_diff > 0.0) rep.ratios.push_back(diff / prev_diff);
        prev_diff = diff;
        rep.iterations = it + 1;

        const double norm_next = vn(next, *problem.op);
        u = std::move(next);
        if (norm_next > 2.0 * ball)
            throw_numerical("picard iterate escaped the 2M ball (||u||_V = " +
                            std::to_string(norm_next) + ", M = " + std::to_string(ball) + ")");
        if (diff <= config.tol) {
            converged = true;
            break;
        }
    }
    rep.converged = converged;
    rep.final_vnorm = vn(u, *problem.op);
    rep.in_ball = rep.final_vnorm <= ball * (1.0 + 1e-9);
    if (report) *report = rep;
    return u;
}

SpectralTrajectory continue_solution(const LinearProblem& problem, const MultipointSpec& spec,
                                     const Nonlinearity& nl, const PicardConfig& config_in,
                                     double t_star, ContinuationReport* report,
                                     const SolveOptions& options) {
    if (!(t_star > 0.0)) throw_invalid("continuation target time must be positive");
    const PicardConfig config = resolve_config(problem, nl, config_in);
    const VNorm vn = VNorm::make(problem.grid.ndim, config.gamma);

    ContinuationReport crep;
    SpectralTrajectory total;
    double t_done = 0.0;
    double running_ball = config.ball_radius;
    MultipointSpec window_spec = spec;
    LinearProblem window_problem = problem;

    while (t_done < t_star * (1.0 - 1e-12)) {
        const double remaining = t_star - t_done;
        PicardConfig wconfig = config;
        wconfig.ball_radius = running_ball;
        window_problem.horizon = remaining;

        ConvergenceReport wrep;
        SpectralTrajectory piece;
        try {
            piece = solve_nonlinear(window_problem, window_spec, nl, wconfig, &wrep, options);
        } catch (const Error&) {
            if (report) {
                crep.completed = false;
                *report = crep;
            }
            throw;
        }
        crep.last_window = wrep;
        if (wrep.window < 1e-6) {
            crep.completed = false;
            if (report) *report = crep;
            throw_numerical("continuation window shrank below 1e-6 at t = " +
                            std::to_string(t_done) + "; blow-up suspected");
        }
        if (!wrep.converged) {
            crep.completed = false;
            if (report) *report = crep;
            throw_numerical("picard iteration did not converge within max_iter during "
                            "continuation");
        }

        // stitch (skip the duplicated first sample after the first window)
        const std::size_t skip = total.times.empty() ? 0 : 1;
        if (total.times.empty()) {
            total.grid = piece.grid;
            total.hdim = piece.hdim;
        }
        for (std::size_t j = skip; j < piece.samples(); ++j) {
            total.times.push_back(t_done + piece.times[j]);
            total.u_hat.push_back(piece.u_hat[j]);
            total.ut_hat.push_back(piece.ut_hat[j]);
        }
        t_done += wrep.window;
        crep.window_ends.push_back(t_done);

        running_ball = std::max(running_ball, 2.0 * vn(piece, *problem.op) + 1e-12);

        // later windows are classical Cauchy continuations from the end state
        window_spec = MultipointSpec::cauchy();
        window_problem.phi = inverse_transform(piece.u_hat.back());
        window_problem.psi = inverse_transform(piece.ut_hat.back());
    }
    crep.completed = true;
    if (report) *report = crep;
    return total;
}

}  // namespace mw
