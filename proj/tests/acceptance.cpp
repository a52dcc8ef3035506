// Acceptance suite: runs every verification criterion end to end and prints
// one PASS/FAIL line per criterion. Exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "multiwave/exponents.hpp"
#include "multiwave/io.hpp"
#include "multiwave/linear_solver.hpp"
#include "multiwave/nonlinear.hpp"
#include "multiwave/oracle.hpp"
#include "multiwave/scenario.hpp"
#include "multiwave/strichartz.hpp"
#include "test_helpers.hpp"

using namespace mw;
using namespace mwtest;

namespace {

int g_threads = 2;

struct Outcome {
    bool pass{false};
    std::string detail;
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

OperatorSpec scalar_op(double a) {
    CMat m(1);
    m(0, 0) = a;
    return OperatorSpec::build(m);
}

OperatorSpec random_hermitian_op(int d, std::mt19937_64& rng) {
    CMat m(d);
    for (int i = 0; i < d; ++i) {
        m(i, i) = 0.8 + 1.7 * uniform01(rng);
        for (int j = i + 1; j < d; ++j) {
            const cplx z(0.15 * uniform(rng, -1, 1), 0.15 * uniform(rng, -1, 1));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return OperatorSpec::build(m);
}

struct EnsembleInstance {
    OperatorSpec op;
    LinearProblem problem;
    MultipointSpec spec;
};

// shared randomized linear ensemble: n = 2, 64^2 grid, hdim <= 3, m <= 3,
// lambda_k on multiples of 1/16 so the shooting oracle can land on them
EnsembleInstance make_instance(int index) {
    std::mt19937_64 rng(7700 + static_cast<std::uint64_t>(index));
    const int hdim = 1 + index % 3;
    const int m = 1 + (index / 3) % 3;
    EnsembleInstance inst{random_hermitian_op(hdim, rng), {}, {}};

    const GridSpec grid = GridSpec::make({64, 64}, {2.0 * M_PI * 8, 2.0 * M_PI * 8});
    inst.problem.grid = grid;
    inst.problem.op = &inst.op;
    inst.problem.horizon = 1.0;
    inst.problem.phi = random_field(grid, hdim, 100 + static_cast<std::uint64_t>(index));
    inst.problem.psi = random_field(grid, hdim, 200 + static_cast<std::uint64_t>(index));

    std::vector<cplx> alphas, betas;
    std::vector<double> lambdas;
    std::vector<int> slots{4, 9, 16, 12, 6, 14};
    for (int k = 0; k < m; ++k) {
        alphas.push_back(cplx(uniform(rng, 0.05, 0.3), uniform(rng, -0.1, 0.1)));
        betas.push_back(cplx(uniform(rng, 0.05, 0.3), uniform(rng, -0.1, 0.1)));
        lambdas.push_back(slots[static_cast<std::size_t>((index + k) % 6)] / 16.0);
    }
    inst.spec = MultipointSpec::make(alphas, betas, lambdas);
    return inst;
}

double pair_rel_diff(const InitialPair& a, const InitialPair& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.u0.values.size(); ++i) {
        num += std::norm(a.u0.values[i] - b.u0.values[i]) +
               std::norm(a.u1.values[i] - b.u1.values[i]);
        den += std::norm(a.u0.values[i]) + std::norm(a.u1.values[i]);
    }
    return std::sqrt(num / den);
}

// ---- criterion 1: classical Cauchy reduction --------------------------------
Outcome criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const GridSpec grid = GridSpec::make({32, 32}, {2.0 * M_PI, 2.0 * M_PI});
    const OperatorSpec op = scalar_op(2.0);
    LinearProblem problem;
    problem.grid = grid;
    problem.op = &op;
    problem.phi = single_mode(grid, 1, {2, 1});
    problem.psi = Field(grid, 1);
    problem.horizon = 1.0;
    const std::vector<double> times = uniform_times(0.0, 1.0, 17);
    SolveOptions options;
    options.threads = g_threads;
    const SpectralTrajectory traj =
        solve_linear(problem, MultipointSpec::cauchy(), times, nullptr, options);

    const double omega = std::sqrt(2.0 + 5.0);  // lambda_A + |xi|^2, |xi|^2 = 4 + 1
    double worst = 0.0;
    for (std::size_t j = 0; j < times.size(); ++j) {
        const Field u = traj.u_physical(j);
        const Field expected =
            cplx(std::cos(omega * times[j]), 0.0) * single_mode(grid, 1, {2, 1});
        for (std::size_t i = 0; i < u.values.size(); ++i)
            worst = std::max(worst, std::abs(u.values[i] - expected.values[i]));
    }
    const double elapsed = seconds_since(t0);
    Outcome out;
    out.pass = worst <= 1e-12 && elapsed < 1.0;
    std::ostringstream os;
    os << "max closed-form error " << worst << " (tol 1e-12), " << elapsed << " s";
    out.detail = os.str();
    return out;
}

// ---- criterion 2: multipoint residuals on the randomized ensemble ----------
Outcome criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    SolveOptions options;
    options.threads = g_threads;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const EnsembleInstance inst = make_instance(i);
        const std::vector<double> times = uniform_times(0.0, 1.0, 17);
        const SpectralTrajectory traj = solve_linear(inst.problem, inst.spec, times, nullptr,
                                                     options);
        const ResidualReport res = verify_solution(traj, inst.problem, inst.spec);
        worst = std::max({worst, res.cond_u_residual, res.cond_ut_residual});
    }
    const double elapsed = seconds_since(t0);
    Outcome out;
    out.pass = worst <= 1e-8 && elapsed < 30.0;
    std::ostringstream os;
    os << "20 instances, worst condition residual " << worst << " (tol 1e-8), " << elapsed
       << " s (limit 30)";
    out.detail = os.str();
    return out;
}

// ---- criterion 3: oracle equivalence for the initial pairs ------------------
Outcome criterion3() {
    SolveOptions options;
    options.threads = g_threads;
    double worst = 0.0;
    const double dt = 1.0 / 1024.0;
    for (int i = 0; i < 20; ++i) {
        const EnsembleInstance inst = make_instance(i);
        const InitialPair analytic = solve_initial_data(inst.problem, inst.spec, nullptr, options);
        const InitialPair shot =
            shooting_multipoint(inst.problem, inst.spec, dt, nullptr, g_threads);
        worst = std::max(worst, pair_rel_diff(analytic, shot));
    }

    // engineered singular instance must be flagged by both paths
    const GridSpec grid = GridSpec::make({8}, {2.0 * M_PI});
    const OperatorSpec op = scalar_op(1.0);
    LinearProblem problem;
    problem.grid = grid;
    problem.op = &op;
    problem.phi = single_mode(grid, 1, {1});
    problem.psi = Field(grid, 1);
    problem.horizon = 7.0;
    const MultipointSpec bad = MultipointSpec::make({cplx(1, 0)}, {cplx(1, 0)}, {2.0 * M_PI});
    SolveReport analytic_report;
    bool analytic_flagged = false;
    try {
        (void)solve_initial_data(problem, bad, &analytic_report);
    } catch (const Error&) {
        analytic_flagged = true;
    }
    ShootingReport shooting_report;
    bool shooting_flagged = false;
    try {
        (void)shooting_multipoint(problem, bad, M_PI / 1024.0, &shooting_report);
    } catch (const Error&) {
        shooting_flagged = true;
    }
    const bool singular_agree = analytic_flagged && shooting_flagged &&
                                analytic_report.singular_modes == shooting_report.singular_modes &&
                                analytic_report.min_abs_det <= 1e-10 &&
                                shooting_report.min_singular_value <= 1e-10;

    Outcome out;
    out.pass = worst <= 1e-8 && singular_agree;
    std::ostringstream os;
    os << "worst pair disagreement " << worst << " (tol 1e-8), singular instances "
       << (singular_agree ? "co-flagged" : "NOT co-flagged");
    out.detail = os.str();
    return out;
}

// ---- criterion 4: energy conservation ---------------------------------------
Outcome criterion4() {
    const GridSpec grid = GridSpec::make({32, 32}, {2.0 * M_PI * 4, 2.0 * M_PI * 4});
    std::mt19937_64 rng(4242);
    const OperatorSpec op = random_hermitian_op(2, rng);
    LinearProblem problem;
    problem.grid = grid;
    problem.op = &op;
    problem.phi = random_field(grid, 2, 91);
    problem.psi = random_field(grid, 2, 92);
    problem.horizon = 1.0;
    const std::vector<double> times = uniform_times(0.0, 1.0, 11);
    SolveOptions options;
    options.threads = g_threads;

    const SpectralTrajectory spectral =
        solve_linear(problem, MultipointSpec::cauchy(), times, nullptr, options);
    double drift_spectral = 0.0;
    const double e0 = trajectory_energy(spectral, op, 0);
    for (std::size_t j = 1; j < times.size(); ++j)
        drift_spectral = std::max(drift_spectral,
                                  std::abs(trajectory_energy(spectral, op, j) - e0) / e0);

    const SpectralTrajectory rk4 =
        rk4_integrate(problem, problem.phi, problem.psi, 1e-3, times, g_threads);
    double drift_rk4 = 0.0;
    const double e0r = trajectory_energy(rk4, op, 0);
    for (std::size_t j = 1; j < times.size(); ++j)
        drift_rk4 = std::max(drift_rk4, std::abs(trajectory_energy(rk4, op, j) - e0r) / e0r);

    Outcome out;
    out.pass = drift_spectral <= 1e-10 && drift_rk4 <= 1e-8;
    std::ostringstream os;
    os << "spectral drift " << drift_spectral << " (tol 1e-10), rk4 drift " << drift_rk4
       << " (tol 1e-8)";
    out.detail = os.str();
    return out;
}

// ---- criterion 5: dispersive decay ------------------------------------------
Outcome criterion5() {
    const double box = 2.0 * M_PI * 64.0;
    const GridSpec grid = GridSpec::make({512, 512}, {box, box});
    const OperatorSpec op = scalar_op(1.0);
    const Field data = gaussian_bump(grid, 1, 1.25);
    const std::vector<double> times = uniform_times(10.0, 95.0, 120);

    const DispersiveSeries a0 = dispersive_ratio(op, 0.0, INFINITY, data, times, g_threads);
    const DispersiveSeries ah = dispersive_ratio(op, 0.5, INFINITY, data, times, g_threads);

    const double target = 1.0;  // n/2 for n = 2
    const double fitted = a0.power_fit.exponent;
    const double shift = ah.ratio_slope - a0.ratio_slope;

    Outcome out;
    out.pass = std::abs(fitted - target) <= 0.15 * target && std::abs(shift - 0.5) <= 0.1;
    std::ostringstream os;
    os << "fitted exponent " << fitted << " (target 1 +- 15%), alpha ratio-slope shift " << shift
       << " (target 0.5 +- 0.1)";
    out.detail = os.str();
    return out;
}

// ---- criterion 6: admissibility scan ----------------------------------------
// independent evaluator on cross-multiplied 64-bit integers
bool indep_admissible(int n, std::int64_t qn, std::int64_t qd, std::int64_t rn, std::int64_t rd,
                      bool* sharp) {
    const std::int64_t aq_n = qn == 0 ? 0 : qd;
    const std::int64_t aq_d = qn == 0 ? 1 : qn;
    const std::int64_t ar_n = rn == 0 ? 0 : rd;
    const std::int64_t ar_d = rn == 0 ? 1 : rn;
    const std::int64_t lhs = aq_n * 8 * ar_d + (n - 1) * ar_n * aq_d * 4;
    const std::int64_t rhs = (n - 1) * aq_d * 2 * ar_d;
    const bool q_ok = qn == 0 || qn >= 2 * qd;
    const bool r_ok = rn == 0 || rn >= 2 * rd;
    const bool excluded = (n == 2 && qn == 2 && qd == 1 && rn == 0);
    *sharp = (lhs == rhs);
    return q_ok && r_ok && lhs <= rhs && !excluded;
}

Outcome criterion6() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::pair<std::int64_t, std::int64_t> values[] = {
        {2, 1}, {5, 2}, {3, 1}, {4, 1}, {6, 1}, {8, 1}, {0, 1}};
    int mismatches = 0;
    int scanned = 0;
    for (int n = 2; n <= 6; ++n)
        for (const auto& [qn, qd] : values)
            for (const auto& [rn, rd] : values) {
                const Exponent q = qn == 0 ? Exponent::infinity() : Exponent(Rat(qn, qd));
                const Exponent r = rn == 0 ? Exponent::infinity() : Exponent(Rat(rn, rd));
                bool sharp_indep = false;
                const bool indep = indep_admissible(n, qn, qd, rn, rd, &sharp_indep);
                const AdmissibilityVerdict v = classify_pair(n, q, r);
                if (v.admissible != indep || (v.admissible && v.sharp != sharp_indep))
                    ++mismatches;
                ++scanned;
            }

    const AdmissibilityVerdict excl = classify_pair(2, Exponent(Rat(2)), Exponent::infinity());
    bool endpoint_ok = !excl.admissible && excl.excluded_triple;
    for (int n = 4; n <= 8; ++n) {
        const ExponentPair ep = endpoint_pair(n);
        const AdmissibilityVerdict v = classify_pair(n, ep.q, ep.r);
        endpoint_ok = endpoint_ok && v.admissible && v.sharp && v.endpoint;
    }
    const double elapsed = seconds_since(t0);

    Outcome out;
    out.pass = mismatches == 0 && endpoint_ok && elapsed < 1.0;
    std::ostringstream os;
    os << scanned << " pairs scanned, " << mismatches << " disagreements, endpoints "
       << (endpoint_ok ? "sharp" : "WRONG") << ", " << elapsed << " s";
    out.detail = os.str();
    return out;
}

// ---- criterion 7: strichartz-bound stability under refinement ---------------
Outcome criterion7() {
    const OperatorSpec op = scalar_op(1.0);
    const ExponentPair pair{Exponent(Rat(6)), Exponent(Rat(6))};
    SolveOptions options;
    options.threads = g_threads;

    double worst_change_grid = 0.0;
    double worst_change_time = 0.0;
    double max_ratio = 0.0;
    for (int inst = 0; inst < 50; ++inst) {
        std::mt19937_64 rng(3000 + static_cast<std::uint64_t>(inst));
        const double w_phi = uniform(rng, 0.5, 0.8);
        const double w_psi = uniform(rng, 0.5, 0.8);
        const double a_phi = uniform(rng, 0.4, 1.2);
        const double a_psi = uniform(rng, -0.8, 0.8);
        const double w_src = uniform(rng, 0.5, 0.8);
        const double a_src = uniform(rng, -0.5, 0.5);
        const double omega_src = uniform(rng, 0.0, 2.0);
        const double alpha = inst % 2 ? 0.5 : 0.0;
        const GapRelation gap = GapRelation::make(2, Rat(1, 2), pair, pair, alpha);

        double base = 0.0, refined_grid = 0.0, refined_time = 0.0;
        for (int variant = 0; variant < 3; ++variant) {
            const int npts = variant == 1 ? 64 : 32;
            const int steps = variant == 2 ? 32 : 16;
            const GridSpec grid = GridSpec::make({npts, npts}, {14.0, 14.0});
            LinearProblem problem;
            problem.grid = grid;
            problem.op = &op;
            problem.phi = gaussian_bump(grid, 1, w_phi, a_phi);
            problem.psi = gaussian_bump(grid, 1, w_psi, a_psi);
            problem.horizon = 1.0;
            problem.source.times = uniform_times(0.0, 1.0, static_cast<std::size_t>(steps) + 1);
            for (double t : problem.source.times)
                problem.source.snapshots.push_back(cplx(a_src * std::cos(omega_src * t), 0.0) *
                                                   gaussian_bump(grid, 1, w_src));
            const EstimateReport rep =
                strichartz_report(problem, MultipointSpec::cauchy(), gap,
                                  uniform_times(0.0, 1.0, static_cast<std::size_t>(steps) + 1),
                                  options);
            if (variant == 0) base = rep.ratio;
            if (variant == 1) refined_grid = rep.ratio;
            if (variant == 2) refined_time = rep.ratio;
        }
        max_ratio = std::max(max_ratio, base);
        worst_change_grid =
            std::max(worst_change_grid, std::max(base / refined_grid, refined_grid / base));
        worst_change_time =
            std::max(worst_change_time, std::max(base / refined_time, refined_time / base));
    }

    Outcome out;
    out.pass = worst_change_grid < 2.0 && worst_change_time < 2.0 && std::isfinite(max_ratio);
    std::ostringstream os;
    os << "50 instances, max ratio " << max_ratio << ", worst grid-refinement change x"
       << worst_change_grid << ", worst time-refinement change x" << worst_change_time
       << " (limit x2)";
    out.detail = os.str();
    return out;
}

// ---- criterion 8: picard contraction ----------------------------------------
Outcome criterion8() {
    const GridSpec grid = GridSpec::make({32, 32}, {10.0, 10.0});
    const OperatorSpec op = scalar_op(1.0);
    LinearProblem problem;
    problem.grid = grid;
    problem.op = &op;
    problem.phi = gaussian_bump(grid, 1, 0.6, 0.4);
    problem.psi = gaussian_bump(grid, 1, 0.8, 0.12);
    problem.horizon = 0.5;
    const MultipointSpec spec =
        MultipointSpec::make({cplx(0.15, 0.0)}, {cplx(0.1, 0.0)}, {1.0 / 16.0});
    const Nonlinearity nl = Nonlinearity::scalar_power(0.05, 3.0);
    SolveOptions options;
    options.threads = g_threads;

    PicardConfig config;
    config.gamma = Rat(1, 3);
    config.tol = 1e-10;
    config.time_steps = 32;
    ConvergenceReport report;
    SpectralTrajectory u;
    bool solved = true;
    std::string error;
    try {
        u = solve_nonlinear(problem, spec, nl, config, &report, options);
    } catch (const Error& e) {
        solved = false;
        error = e.what();
    }

    double max_ratio = 0.0;
    for (double r : report.ratios) max_ratio = std::max(max_ratio, r);

    bool residuals_ok = false;
    double order = 0.0;
    double cond_res = 1.0;
    if (solved && report.converged) {
        // residual verification, including the O(dt^2) PDE-residual order
        auto residual_at = [&](int steps) {
            PicardConfig c2 = config;
            c2.time_steps = steps;
            c2.window = report.window;
            ConvergenceReport r2;
            const SpectralTrajectory u2 = solve_nonlinear(problem, spec, nl, c2, &r2, options);
            LinearProblem with_source = problem;
            with_source.horizon = r2.window;
            with_source.source.times = u2.times;
            for (std::size_t j = 0; j < u2.samples(); ++j)
                with_source.source.snapshots.push_back(eval_nonlinearity(nl, u2.u_physical(j)));
            return verify_solution(u2, with_source, spec);
        };
        const ResidualReport res32 = residual_at(32);
        const ResidualReport res64 = residual_at(64);
        order = std::log2(res32.pde_residual / res64.pde_residual);
        cond_res = std::max(res32.cond_u_residual, res32.cond_ut_residual);
        residuals_ok = order >= 1.7 && cond_res <= 1e-7;
    }

    // window rule held: T^(1/p) M^(k-1) <= 1/2 by construction
    const double p = derive_holder_p(2, Rat(1, 3), 3.0, *sharp_pair_for_gamma(2, Rat(1, 3)))
                         .value_or(0.0);
    const bool window_rule =
        p > 0.0 && std::pow(report.window, 1.0 / p) *
                           std::pow(report.ball_radius, 2.0) <= 0.5 + 1e-12;

    Outcome out;
    out.pass = solved && report.converged && report.iterations <= 20 && max_ratio <= 0.55 &&
               residuals_ok && window_rule && report.in_ball;
    std::ostringstream os;
    if (!solved) {
        os << "solve failed: " << error;
    } else {
        os << "converged in " << report.iterations << " iterations (limit 20), max ratio "
           << max_ratio << " (tol 0.55), pde-residual order " << order << ", condition residual "
           << cond_res << " (tol 1e-7), window " << report.window;
    }
    out.detail = os.str();
    return out;
}

// ---- criterion 9: local-existence constants --------------------------------
Outcome criterion9() {
    const LocalExistenceConstants c = local_existence_constants(4);
    const bool exact = c.gamma == Rat(1, 6) && c.k0 == Rat(25, 13) && c.q0 == Rat(10) &&
                       c.r0 == Rat(30, 19) && !c.r0_admissible_range;

    // the program emits them through the scenario pipeline as exact rationals
    const char* cfg_text = R"cfg(
[scenario]
kind = check-admissible
[exponents]
ns = 4
qs = 2
rs = 6
local_existence_ns = 4
[output]
dir = .
)cfg";
    const std::string dir = std::filesystem::temp_directory_path() / "mw_acceptance_t5";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    RunOverrides ov;
    ov.out_dir = dir;
    const RunResult r = run_scenario(parse_config(cfg_text), ov);
    bool emitted = false;
    if (r.exit_code == 0) {
        const std::string csv = read_file(dir + "/local_existence.csv");
        emitted = csv.find("4,1/6,25/13,10,30/19,0") != std::string::npos;
    }

    Outcome out;
    out.pass = exact && emitted;
    std::ostringstream os;
    os << "gamma=" << c.gamma.str() << " k0=" << c.k0.str() << " q0=" << c.q0.str()
       << " r0=" << c.r0.str() << " r0-in-range flag=" << (c.r0_admissible_range ? "1" : "0")
       << ", csv emission " << (emitted ? "exact" : "WRONG");
    out.detail = os.str();
    return out;
}

// ---- criterion 10: rk4 order fit --------------------------------------------
Outcome criterion10() {
    const GridSpec grid = GridSpec::make({8}, {2.0 * M_PI});
    const OperatorSpec op = scalar_op(3.0);
    LinearProblem problem;
    problem.grid = grid;
    problem.op = &op;
    problem.phi = single_mode(grid, 1, {1});
    problem.psi = Field(grid, 1);
    problem.horizon = 1.0;
    const double omega = 2.0;  // sqrt(3 + 1)

    std::vector<double> dts{4e-3, 2e-3, 1e-3};
    std::vector<double> errs;
    for (double dt : dts) {
        const SpectralTrajectory traj =
            rk4_integrate(problem, problem.phi, problem.psi, dt, {1.0});
        const Field u = traj.u_physical(0);
        const Field expected = cplx(std::cos(omega), 0.0) * single_mode(grid, 1, {1});
        double err = 0.0;
        for (std::size_t i = 0; i < u.values.size(); ++i)
            err = std::max(err, std::abs(u.values[i] - expected.values[i]));
        errs.push_back(err);
    }
    // least squares slope of log err vs log dt
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < dts.size(); ++i) {
        const double x = std::log(dts[i]);
        const double y = std::log(errs[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double n = static_cast<double>(dts.size());
    const double order = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    Outcome out;
    out.pass = std::abs(order - 4.0) <= 0.2;
    std::ostringstream os;
    os << "fitted global order " << order << " (target 4.0 +- 0.2)";
    out.detail = os.str();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
        if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            g_threads = std::atoi(argv[i + 1]);
    }

    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "Cauchy reduction to the closed-form cosine solution", criterion1},
        {2, "multipoint condition residuals on the randomized ensemble", criterion2},
        {3, "analytic initial pairs agree with the shooting oracle", criterion3},
        {4, "energy conservation (spectral and rk4 paths)", criterion4},
        {5, "dispersive decay exponent and alpha shift", criterion5},
        {6, "exact-rational admissibility scan with endpoints", criterion6},
        {7, "strichartz ratio stability under refinement", criterion7},
        {8, "picard contraction, convergence, and residuals", criterion8},
        {9, "local-existence constants emitted as exact rationals", criterion9},
        {10, "rk4 global order fit", criterion10},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.id != only) continue;
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  [%2d] %s: %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                    out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    return failures;
}
