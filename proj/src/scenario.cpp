#include "multiwave/scenario.hpp"

#include <sys/stat.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "multiwave/exponents.hpp"
#include "multiwave/io.hpp"
#include "multiwave/linear_solver.hpp"
#include "multiwave/nonlinear.hpp"
#include "multiwave/oracle.hpp"
#include "multiwave/strichartz.hpp"

namespace mw {
namespace {

// Seed-derived uniforms via fixed bit manipulation so byte-identical CSV
// output does not depend on the platform's distribution implementations.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    return splitmix64(base ^ (salt * 0xD1B54A32D192ED03ull));
}

GridSpec grid_from_config(const GridConfig& grid) { return GridSpec::make(grid.points, grid.box); }

OperatorSpec operator_from_config(const OperatorConfig& op) {
    switch (op.type) {
        case OperatorConfig::Type::inline_matrix: {
            CMat m(op.hdim);
            m.a = op.matrix;
            return OperatorSpec::build(m);
        }
        case OperatorConfig::Type::diagonal: {
            CMat m(op.hdim);
            for (int i = 0; i < op.hdim; ++i) m(i, i) = op.diag[static_cast<std::size_t>(i)];
            return OperatorSpec::build(m);
        }
        case OperatorConfig::Type::sturm_liouville:
            return OperatorSpec::sturm_liouville_const(op.sl_a, op.sl_c, op.sl_points);
    }
    throw_config("invalid operator config");
}

MultipointSpec multipoint_from_config(const MultipointConfig& mp) {
    if (mp.lambdas.empty()) return MultipointSpec::cauchy();
    return MultipointSpec::make(mp.alphas, mp.betas, mp.lambdas);
}

// Gaussian bumps, compact to ~1e-14 at the box seam: centers stay 8.1 widths
// away from the boundary.
Field gaussian_field(const GridSpec& grid, int hdim, std::uint64_t seed, int bumps,
                     double width_min, double width_max, double amplitude) {
    constexpr double margin_widths = 8.1;
    std::mt19937_64 rng(seed);
    Field f(grid, hdim);
    const std::size_t n = grid.total();
    std::vector<int> idx(static_cast<std::size_t>(grid.ndim));
    std::vector<double> center(static_cast<std::size_t>(grid.ndim));
    for (int c = 0; c < hdim; ++c) {
        for (int b = 0; b < bumps; ++b) {
            const double width = width_min + uniform01(rng) * (width_max - width_min);
            for (int d = 0; d < grid.ndim; ++d) {
                const double margin = margin_widths * width;
                if (2.0 * margin >= grid.box[d])
                    throw_config("box too small for compactly supported bumps (width " +
                                 std::to_string(width) + ")");
                center[d] = margin + uniform01(rng) * (grid.box[d] - 2.0 * margin);
            }
            const double amp = amplitude * (2.0 * uniform01(rng) - 1.0);
            for (std::size_t s = 0; s < n; ++s) {
                grid.unravel(s, idx.data());
                double arg = 0.0;
                for (int d = 0; d < grid.ndim; ++d) {
                    const double x = grid.box[d] * idx[d] / grid.points[d];
                    const double dx = x - center[d];
                    arg += dx * dx;
                }
                f.at(s, c) += amp * std::exp(-arg / (2.0 * width * width));
            }
        }
    }
    return f;
}

Field single_mode_field(const GridSpec& grid, int hdim, const std::vector<int>& mode,
                        int component, cplx amplitude) {
    if (component < 0 || component >= hdim) throw_config("single_mode component out of range");
    Field f(grid, hdim);
    const std::size_t n = grid.total();
    std::vector<int> idx(static_cast<std::size_t>(grid.ndim));
    for (std::size_t s = 0; s < n; ++s) {
        grid.unravel(s, idx.data());
        double phase = 0.0;
        for (int d = 0; d < grid.ndim; ++d)
            phase += 2.0 * M_PI * mode[static_cast<std::size_t>(d)] * idx[d] / grid.points[d];
        f.at(s, component) += amplitude * std::exp(cplx(0.0, phase));
    }
    return f;
}

}  // namespace

Field make_field_from_config(const DataConfig& data, const GridConfig& grid_cfg, int hdim,
                             std::uint64_t fallback_seed, const char* what) {
    const GridSpec grid = grid_from_config(grid_cfg);
    if (!data.present) return Field(grid, hdim);  // zero field
    switch (data.type) {
        case DataConfig::Type::gaussian: {
            const std::uint64_t seed = data.seed ? *data.seed : fallback_seed;
            return gaussian_field(grid, hdim, seed, data.bumps, data.width_min, data.width_max,
                                  data.amplitude);
        }
        case DataConfig::Type::single_mode:
            return single_mode_field(grid, hdim, data.mode, data.component, data.mode_amplitude);
        case DataConfig::Type::file: {
            Field f = load_field(data.path, grid_cfg.box);
            if (!(f.grid == grid) || f.hdim != hdim)
                throw_config(std::string(what) + ": loaded field does not match the grid/hdim");
            return f;
        }
    }
    throw_config("invalid data config");
}

namespace {

struct Workspace {
    ScenarioConfig cfg;
    RunOverrides overrides;
    std::string out_dir;
    std::uint64_t seed{0};
    SolveOptions options;
    bool verify{false};
    std::vector<std::string> artifacts;

    std::string path(const std::string& name) const { return out_dir + "/" + name; }
    void emit(const CsvWriter& csv, const std::string& name) {
        csv.write(path(name));
        artifacts.push_back(path(name));
    }
};

SourceSamples source_from_config(const Workspace& ws, const GridSpec& grid, int hdim,
                                 double cover) {
    SourceSamples src;
    const SourceConfig& sc = ws.cfg.source;
    if (sc.type == SourceConfig::Type::none) return src;
    const int steps = sc.time_steps > 0 ? sc.time_steps : ws.cfg.time_steps;
    src.times = uniform_times(0.0, cover, static_cast<std::size_t>(steps) + 1);
    const std::uint64_t seed = sc.seed ? *sc.seed : derive_seed(ws.seed, 3);
    GridConfig gc;
    gc.dims = grid.ndim;
    gc.points = grid.points;
    gc.box = grid.box;
    const Field g =
        gaussian_field(grid, hdim, seed, sc.bumps, sc.width_min, sc.width_max, sc.amplitude);
    src.snapshots.reserve(src.times.size());
    for (double t : src.times) src.snapshots.push_back(cplx(std::cos(sc.omega * t), 0.0) * g);
    return src;
}

LinearProblem problem_from_config(const Workspace& ws, const OperatorSpec& op,
                                  const MultipointSpec& spec) {
    LinearProblem problem;
    problem.grid = grid_from_config(ws.cfg.grid);
    problem.op = &op;
    problem.horizon = ws.cfg.horizon;
    DataConfig phi_cfg = ws.cfg.phi;
    DataConfig psi_cfg = ws.cfg.psi;
    if (ws.overrides.seed) {
        // CLI seed override re-derives all data seeds
        phi_cfg.seed.reset();
        psi_cfg.seed.reset();
    }
    problem.phi = make_field_from_config(phi_cfg, ws.cfg.grid, op.hdim(),
                                         derive_seed(ws.seed, 1), "phi");
    problem.psi = make_field_from_config(psi_cfg, ws.cfg.grid, op.hdim(),
                                         derive_seed(ws.seed, 2), "psi");
    const double cover = std::max(ws.cfg.horizon, spec.count() ? spec.max_lambda() : 0.0);
    problem.source = source_from_config(ws, problem.grid, op.hdim(), cover);
    return problem;
}

std::string bool_cell(bool v) { return v ? "1" : "0"; }

void write_series_csv(Workspace& ws, const SpectralTrajectory& traj, const OperatorSpec& op) {
    CsvWriter csv({"t", "l2", "sup", "energy"});
    for (std::size_t j = 0; j < traj.samples(); ++j) {
        const Field u = traj.u_physical(j);
        csv.add_row({format_double(traj.times[j]), format_double(l2_norm(u)),
                     format_double(u.max_fiber_norm()),
                     format_double(trajectory_energy(traj, op, j))});
    }
    ws.emit(csv, "series.csv");
}

int run_solve_linear(Workspace& ws) {
    const OperatorSpec op = operator_from_config(ws.cfg.op);
    const MultipointSpec spec = multipoint_from_config(ws.cfg.multipoint);
    const LinearProblem problem = problem_from_config(ws, op, spec);
    const std::vector<double> times =
        uniform_times(0.0, ws.cfg.horizon, static_cast<std::size_t>(ws.cfg.time_steps) + 1);

    SolveReport report;
    const SpectralTrajectory traj = solve_linear(problem, spec, times, &report, ws.options);

    ResidualReport residuals;
    if (ws.verify) residuals = verify_solution(traj, problem, spec);

    CsvWriter csv({"modes", "min_abs_det", "max_inv_det_norm", "pde_residual", "cond_u_residual",
                   "cond_ut_residual", "energy_drift", "verified"});
    csv.add_row({std::to_string(report.mode_count), format_double(report.min_abs_det),
                 format_double(report.max_inv_det_norm), format_double(residuals.pde_residual),
                 format_double(residuals.cond_u_residual),
                 format_double(residuals.cond_ut_residual), format_double(residuals.energy_drift),
                 bool_cell(ws.verify)});
    ws.emit(csv, "report.csv");
    if (ws.cfg.output.write_series) write_series_csv(ws, traj, op);
    if (ws.cfg.output.write_fields) {
        save_field(traj.u_physical(traj.samples() - 1), ws.path("u_final.mwf"));
        ws.artifacts.push_back(ws.path("u_final.mwf"));
    }
    return 0;
}

int run_solve_nlw(Workspace& ws) {
    const OperatorSpec op = operator_from_config(ws.cfg.op);
    const MultipointSpec spec = multipoint_from_config(ws.cfg.multipoint);
    LinearProblem problem = problem_from_config(ws, op, spec);
    problem.source = SourceSamples{};  // the nonlinearity provides the source

    const Nonlinearity nl = ws.cfg.nonlinearity.kind == "scalar_power"
                                ? Nonlinearity::scalar_power(ws.cfg.nonlinearity.lambda,
                                                             ws.cfg.nonlinearity.k)
                                : Nonlinearity::fiber_norm_power(ws.cfg.nonlinearity.lambda,
                                                                 ws.cfg.nonlinearity.k);
    PicardConfig pc;
    pc.max_iter = ws.cfg.picard.max_iter;
    pc.tol = ws.cfg.picard.tol;
    pc.ball_radius = ws.cfg.picard.ball_radius;
    pc.holder_p = ws.cfg.picard.holder_p;
    pc.window = ws.cfg.picard.window;
    pc.gamma = ws.cfg.picard.gamma;
    pc.time_steps = ws.cfg.time_steps;

    SpectralTrajectory traj;
    ConvergenceReport report;
    if (ws.cfg.picard.target_time > 0.0) {
        ContinuationReport crep;
        traj = continue_solution(problem, spec, nl, pc, ws.cfg.picard.target_time, &crep,
                                 ws.options);
        report = crep.last_window;
        report.converged = crep.completed;
    } else {
        traj = solve_nonlinear(problem, spec, nl, pc, &report, ws.options);
    }

    CsvWriter iter_csv({"iter", "diff_vnorm", "ratio"});
    for (std::size_t i = 0; i < report.diffs.size(); ++i)
        iter_csv.add_row({std::to_string(i + 1), format_double(report.diffs[i]),
                          i > 0 ? format_double(report.ratios[i - 1]) : std::string("nan")});
    ws.emit(iter_csv, "picard.csv");

    ResidualReport residuals;
    if (ws.verify && ws.cfg.picard.target_time <= 0.0) {
        // residuals measured against the source induced by the converged iterate
        LinearProblem with_source = problem;
        with_source.horizon = report.window;
        with_source.source.times = traj.times;
        for (std::size_t j = 0; j < traj.samples(); ++j)
            with_source.source.snapshots.push_back(eval_nonlinearity(nl, traj.u_physical(j)));
        residuals = verify_solution(traj, with_source, spec);
    }

    CsvWriter csv({"converged", "iterations", "window", "ball_radius", "final_vnorm", "in_ball",
                   "pde_residual", "cond_u_residual", "cond_ut_residual"});
    csv.add_row({bool_cell(report.converged), std::to_string(report.iterations),
                 format_double(report.window), format_double(report.ball_radius),
                 format_double(report.final_vnorm), bool_cell(report.in_ball),
                 format_double(residuals.pde_residual), format_double(residuals.cond_u_residual),
                 format_double(residuals.cond_ut_residual)});
    ws.emit(csv, "report.csv");
    return report.converged ? 0 : 2;
}

int run_check_admissible(Workspace& ws) {
    // beta(r, r) = n/2 - 1 is emitted alongside each verdict together with the
    // sign-claim contradiction flag (the claimed "beta(r,r) <= 0 for n > 2"
    // disagrees with the formula; reported, not corrected).
    CsvWriter csv({"n", "q", "r", "verdict", "sharp", "endpoint", "excluded", "beta_rr",
                   "beta_sign_contradiction"});
    for (int n : ws.cfg.exponents.ns)
        for (const Exponent& q : ws.cfg.exponents.qs)
            for (const Exponent& r : ws.cfg.exponents.rs) {
                const AdmissibilityVerdict v = classify_pair(n, q, r);
                csv.add_row({std::to_string(n), q.str(), r.str(), bool_cell(v.admissible),
                             bool_cell(v.sharp), bool_cell(v.endpoint),
                             bool_cell(v.excluded_triple), beta_exponent(n, r, r).str(),
                             bool_cell(beta_diagonal_contradiction(n))});
            }
    ws.emit(csv, "admissible.csv");

    if (!ws.cfg.exponents.local_existence_ns.empty()) {
        CsvWriter t5({"n", "gamma", "k0", "q0", "r0", "r0_in_admissible_range"});
        for (int n : ws.cfg.exponents.local_existence_ns) {
            const LocalExistenceConstants c = local_existence_constants(n);
            t5.add_row({std::to_string(n), c.gamma.str(), c.k0.str(), c.q0.str(), c.r0.str(),
                        bool_cell(c.r0_admissible_range)});
        }
        ws.emit(t5, "local_existence.csv");
    }
    return 0;
}

int run_verify_dispersive(Workspace& ws) {
    const OperatorSpec op = operator_from_config(ws.cfg.op);
    DataConfig data_cfg = ws.cfg.phi;
    if (ws.overrides.seed) data_cfg.seed.reset();
    const Field data = make_field_from_config(data_cfg, ws.cfg.grid, op.hdim(),
                                              derive_seed(ws.seed, 1), "phi");
    const GridSpec grid = grid_from_config(ws.cfg.grid);
    double t_max = ws.cfg.dispersive.t_max;
    if (!(t_max > 0.0)) t_max = 0.95 * grid.min_box_length() / 4.0;
    const std::vector<double> times =
        uniform_times(ws.cfg.dispersive.t_min, t_max,
                      static_cast<std::size_t>(ws.cfg.dispersive.samples));

    const double p = ws.cfg.dispersive.p.to_double();
    const DispersiveSeries series =
        dispersive_ratio(op, ws.cfg.dispersive.alpha, p, data, times, ws.options.threads);

    CsvWriter csv({"t", "norm", "ratio"});
    for (std::size_t i = 0; i < series.times.size(); ++i)
        csv.add_row({format_double(series.times[i]), format_double(series.norms[i]),
                     format_double(series.ratios[i])});
    ws.emit(csv, "dispersive.csv");

    CsvWriter fit({"alpha", "p", "claimed_exponent", "power_exponent", "best_model",
                   "best_exponent", "ratio_slope", "max_ratio"});
    fit.add_row({format_double(ws.cfg.dispersive.alpha), ws.cfg.dispersive.p.str(),
                 format_double(series.claimed_exponent),
                 format_double(series.power_fit.exponent),
                 series.norm_fit.model == DecayModel::power ? "power" : "one_plus_t",
                 format_double(series.norm_fit.exponent), format_double(series.ratio_slope),
                 format_double(series.max_ratio)});
    ws.emit(fit, "dispersive_fit.csv");
    return 0;
}

int run_verify_strichartz(Workspace& ws) {
    const ExponentsConfig& ex = ws.cfg.exponents;
    const int n = ws.cfg.grid.dims;
    CsvWriter csv({"instance", "alpha", "points", "time_steps", "lhs", "rhs", "ratio"});

    std::vector<std::pair<GridConfig, int>> variants;
    variants.push_back({ws.cfg.grid, ws.cfg.time_steps});
    if (ws.cfg.strichartz.refine_grid) {
        GridConfig refined = ws.cfg.grid;
        for (int& p : refined.points) p *= 2;
        variants.push_back({refined, ws.cfg.time_steps});
    }
    if (ws.cfg.strichartz.refine_time)
        variants.push_back({ws.cfg.grid, 2 * ws.cfg.time_steps});

    const OperatorSpec op = operator_from_config(ws.cfg.op);
    const MultipointSpec spec = multipoint_from_config(ws.cfg.multipoint);

    for (int inst = 0; inst < ws.cfg.strichartz.instances; ++inst) {
        const std::uint64_t inst_seed = derive_seed(ws.seed, 100 + static_cast<std::uint64_t>(inst));
        for (double alpha : ws.cfg.strichartz.alphas) {
            const GapRelation gap = GapRelation::make(
                n, ex.gamma, ExponentPair{ex.q, ex.r}, ExponentPair{ex.qt, ex.rt}, alpha);
            for (const auto& [grid_cfg, steps] : variants) {
                Workspace wsv = ws;
                wsv.cfg.grid = grid_cfg;
                wsv.cfg.time_steps = steps;
                wsv.seed = inst_seed;
                wsv.overrides.seed = inst_seed;  // force scenario-derived data seeds
                LinearProblem problem = problem_from_config(wsv, op, spec);
                const std::vector<double> times = uniform_times(
                    0.0, ws.cfg.horizon, static_cast<std::size_t>(steps) + 1);
                const EstimateReport rep =
                    strichartz_report(problem, spec, gap, times, ws.options);
                csv.add_row({std::to_string(inst), format_double(alpha),
                             std::to_string(grid_cfg.points[0]), std::to_string(steps),
                             format_double(rep.lhs), format_double(rep.rhs),
                             format_double(rep.ratio)});
            }
        }
    }
    ws.emit(csv, "strichartz.csv");
    return 0;
}

int run_oracle_compare(Workspace& ws) {
    const OperatorSpec op = operator_from_config(ws.cfg.op);
    const MultipointSpec spec = multipoint_from_config(ws.cfg.multipoint);
    const LinearProblem problem = problem_from_config(ws, op, spec);
    const double dt = ws.cfg.oracle.dt;
    const int steps = ws.cfg.oracle.compare_steps > 0 ? ws.cfg.oracle.compare_steps
                                                      : ws.cfg.time_steps;
    const std::vector<double> times =
        uniform_times(0.0, ws.cfg.horizon, static_cast<std::size_t>(steps) + 1);

    SolveReport analytic_report;
    bool analytic_singular = false;
    InitialPair analytic;
    SpectralTrajectory analytic_traj;
    try {
        analytic_traj = solve_linear(problem, spec, times, &analytic_report, ws.options);
        analytic = solve_initial_data(problem, spec, nullptr, ws.options);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::numerical) throw;
        analytic_singular = true;
    }

    ShootingReport shoot_report;
    bool shooting_singular = false;
    InitialPair shot;
    try {
        shot = shooting_multipoint(problem, spec, dt, &shoot_report, ws.options.threads);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::numerical) throw;
        shooting_singular = true;
    }

    double pair_rel_diff = 0.0;
    CompareReport traj_cmp;
    if (!analytic_singular && !shooting_singular) {
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < analytic.u0.values.size(); ++i) {
            num += std::norm(analytic.u0.values[i] - shot.u0.values[i]) +
                   std::norm(analytic.u1.values[i] - shot.u1.values[i]);
            den += std::norm(analytic.u0.values[i]) + std::norm(analytic.u1.values[i]);
        }
        pair_rel_diff = std::sqrt(num) / std::max(std::sqrt(den), 1e-300);

        const Field u0_phys = inverse_transform(analytic.u0);
        const Field u1_phys = inverse_transform(analytic.u1);
        const SpectralTrajectory rk4 =
            rk4_integrate(problem, u0_phys, u1_phys, dt, times, ws.options.threads);
        traj_cmp = compare_trajectories(analytic_traj, rk4);
    }

    CsvWriter csv({"quantity", "value"});
    csv.add_row({"pair_rel_diff", format_double(pair_rel_diff)});
    csv.add_row({"traj_sup_diff", format_double(traj_cmp.sup_diff)});
    csv.add_row({"traj_l2_diff", format_double(traj_cmp.l2_diff)});
    csv.add_row({"traj_mixed_diff", format_double(traj_cmp.mixed_diff)});
    csv.add_row({"min_abs_det", format_double(analytic_report.min_abs_det)});
    csv.add_row({"min_singular_value", format_double(shoot_report.min_singular_value)});
    csv.add_row({"analytic_singular", bool_cell(analytic_singular)});
    csv.add_row({"shooting_singular", bool_cell(shooting_singular)});
    ws.emit(csv, "oracle.csv");
    if (analytic_singular != shooting_singular)
        throw_numerical("oracle disagreement: only one path flagged singular modes");
    return (analytic_singular || shooting_singular) ? 2 : 0;
}

void ensure_dir(const std::string& path) {
    struct stat st{};
    if (stat(path.c_str(), &st) == 0) {
        if ((st.st_mode & S_IFDIR) == 0) throw_io("output path is not a directory: " + path);
        return;
    }
    if (mkdir(path.c_str(), 0775) != 0) throw_io("cannot create output directory: " + path);
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& config, const RunOverrides& overrides) {
    RunResult result;
    Workspace ws;
    ws.cfg = config;
    ws.overrides = overrides;
    ws.out_dir = overrides.out_dir ? *overrides.out_dir : config.output.dir;
    ws.seed = overrides.seed ? *overrides.seed : config.seed;
    ws.options.threads = overrides.threads;
    ws.options.condition_cap = config.condition_cap;
    ws.options.half_source_term = config.multipoint.half_source_term;
    ws.verify = config.verify || overrides.verify;

    try {
        ensure_dir(ws.out_dir);
        int code = 0;
        switch (config.kind) {
            case ScenarioKind::solve_linear: code = run_solve_linear(ws); break;
            case ScenarioKind::solve_nlw: code = run_solve_nlw(ws); break;
            case ScenarioKind::check_admissible: code = run_check_admissible(ws); break;
            case ScenarioKind::verify_dispersive: code = run_verify_dispersive(ws); break;
            case ScenarioKind::verify_strichartz: code = run_verify_strichartz(ws); break;
            case ScenarioKind::oracle_compare: code = run_oracle_compare(ws); break;
        }
        result.exit_code = code;
        result.message = code == 0 ? "ok" : "numerical failure";
    } catch (const Error& e) {
        switch (e.code()) {
            case ErrorCode::numerical: result.exit_code = 2; break;
            case ErrorCode::internal: result.exit_code = 3; break;
            default: result.exit_code = 1; break;
        }
        result.message = std::string(error_code_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
        result.exit_code = 3;
        result.message = std::string("internal: ") + e.what();
    }
    result.artifacts = ws.artifacts;
    return result;
}

RunResult run_scenario_file(const std::string& config_path, const RunOverrides& overrides,
                            const std::optional<ScenarioKind>& kind_override) {
    try {
        ScenarioConfig cfg = parse_config_file(config_path);
        if (kind_override && *kind_override != cfg.kind) {
            RunResult r;
            r.exit_code = 1;
            r.message = std::string("config: scenario kind mismatch: config says '") +
                        scenario_kind_name(cfg.kind) + "', command requested '" +
                        scenario_kind_name(*kind_override) + "'";
            return r;
        }
        return run_scenario(cfg, overrides);
    } catch (const Error& e) {
        RunResult r;
        r.exit_code = e.code() == ErrorCode::numerical ? 2 : 1;
        r.message = std::string(error_code_name(e.code())) + ": " + e.what();
        return r;
    }
}

}  // namespace mw
