#include "multiwave/capi.h"

#include <cstring>
#include <string>

#include "multiwave/exponents.hpp"
#include "multiwave/io.hpp"
#include "multiwave/linear_solver.hpp"
#include "multiwave/operator_algebra.hpp"
#include "multiwave/scenario.hpp"

namespace {

thread_local std::string g_last_error;

mw_status status_of(const mw::Error& e) {
    switch (e.code()) {
        case mw::ErrorCode::invalid_argument: return MW_ERR_CONFIG;
        case mw::ErrorCode::config: return MW_ERR_CONFIG;
        case mw::ErrorCode::numerical: return MW_ERR_NUMERICAL;
        case mw::ErrorCode::io: return MW_ERR_IO;
        case mw::ErrorCode::internal: return MW_ERR_INTERNAL;
    }
    return MW_ERR_INTERNAL;
}

template <typename Fn>
mw_status wrap(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const mw::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MW_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return MW_ERR_INTERNAL;
    }
}

mw::Rat to_rat(mw_rational r) {
    if (r.den == 0) mw::throw_invalid("rational with zero denominator (use mw_exponent infinity only for exponents)");
    return mw::Rat(r.num, r.den);
}

mw::Exponent to_exponent(mw_rational r) {
    if (r.den == 0) return mw::Exponent::infinity();
    return mw::Exponent(mw::Rat(r.num, r.den));
}

mw_rational from_rat(mw::Rat r) { return mw_rational{r.num, r.den}; }

}  // namespace

struct mw_operator {
    mw::OperatorSpec spec;
};

struct mw_field {
    mw::Field field;
};

struct mw_trajectory {
    mw::SpectralTrajectory traj;
};

extern "C" {

const char* mw_version(void) { return "multiwave 1.0.0"; }

const char* mw_last_error(void) { return g_last_error.c_str(); }

mw_status mw_run_scenario(const char* config_path, const char* kind, const mw_run_options* options) {
    return wrap([&]() -> mw_status {
        if (!config_path) mw::throw_invalid("config_path is null");
        mw::RunOverrides ov;
        if (options) {
            if (options->out_dir) ov.out_dir = std::string(options->out_dir);
            if (options->has_seed) ov.seed = options->seed;
            ov.threads = options->threads;
            ov.verify = options->verify != 0;
        }
        std::optional<mw::ScenarioKind> kind_override;
        if (kind) {
            kind_override = mw::scenario_kind_from_name(kind);
            if (!kind_override) mw::throw_config(std::string("unknown scenario kind '") + kind + "'");
        }
        const mw::RunResult res = mw::run_scenario_file(config_path, ov, kind_override);
        if (res.exit_code != 0) {
            g_last_error = res.message;
            return res.exit_code == 2 ? MW_ERR_NUMERICAL : MW_ERR_CONFIG;
        }
        return MW_OK;
    });
}

mw_status mw_run_scenario_text(const char* config_text, const char* kind,
                               const mw_run_options* options) {
    return wrap([&]() -> mw_status {
        if (!config_text) mw::throw_invalid("config_text is null");
        mw::RunOverrides ov;
        if (options) {
            if (options->out_dir) ov.out_dir = std::string(options->out_dir);
            if (options->has_seed) ov.seed = options->seed;
            ov.threads = options->threads;
            ov.verify = options->verify != 0;
        }
        mw::ScenarioConfig cfg = mw::parse_config(config_text);
        if (kind) {
            const auto k = mw::scenario_kind_from_name(kind);
            if (!k) mw::throw_config(std::string("unknown scenario kind '") + kind + "'");
            if (*k != cfg.kind) mw::throw_config("scenario kind mismatch");
        }
        const mw::RunResult res = mw::run_scenario(cfg, ov);
        if (res.exit_code != 0) {
            g_last_error = res.message;
            return res.exit_code == 2 ? MW_ERR_NUMERICAL : MW_ERR_CONFIG;
        }
        return MW_OK;
    });
}

mw_status mw_operator_create(int hdim, const double* re, const double* im, mw_operator** out) {
    return wrap([&]() -> mw_status {
        if (!re || !out || hdim < 1) mw::throw_invalid("bad arguments to mw_operator_create");
        mw::CMat m(hdim);
        for (int i = 0; i < hdim * hdim; ++i)
            m.a[static_cast<std::size_t>(i)] = mw::cplx(re[i], im ? im[i] : 0.0);
        auto* op = new mw_operator{mw::OperatorSpec::build(m)};
        *out = op;
        return MW_OK;
    });
}

mw_status mw_operator_create_sturm_liouville(double a, double c, int points, mw_operator** out) {
    return wrap([&]() -> mw_status {
        if (!out) mw::throw_invalid("out is null");
        auto* op = new mw_operator{mw::OperatorSpec::sturm_liouville_const(a, c, points)};
        *out = op;
        return MW_OK;
    });
}

void mw_operator_destroy(mw_operator* op) { delete op; }

int mw_operator_dim(const mw_operator* op) { return op ? op->spec.hdim() : 0; }

double mw_operator_positivity_margin(const mw_operator* op) {
    return op ? op->spec.positivity_margin() : 0.0;
}

mw_status mw_operator_eigenvalues(const mw_operator* op, double* out) {
    return wrap([&]() -> mw_status {
        if (!op || !out) mw::throw_invalid("bad arguments");
        for (int i = 0; i < op->spec.hdim(); ++i) out[i] = op->spec.eigenvalues()[i];
        return MW_OK;
    });
}

mw_status mw_operator_fractional_power(const mw_operator* op, double theta, double* out_re,
                                       double* out_im) {
    return wrap([&]() -> mw_status {
        if (!op || !out_re || !out_im) mw::throw_invalid("bad arguments");
        const mw::CMat m = op->spec.fractional_power(theta);
        for (std::size_t i = 0; i < m.a.size(); ++i) {
            out_re[i] = m.a[i].real();
            out_im[i] = m.a[i].imag();
        }
        return MW_OK;
    });
}

mw_status mw_classify_pair(int n, mw_rational q, mw_rational r, mw_admissibility* out) {
    return wrap([&]() -> mw_status {
        if (!out) mw::throw_invalid("out is null");
        const mw::AdmissibilityVerdict v = mw::classify_pair(n, to_exponent(q), to_exponent(r));
        out->admissible = v.admissible ? 1 : 0;
        out->sharp = v.sharp ? 1 : 0;
        out->endpoint = v.endpoint ? 1 : 0;
        out->excluded_triple = v.excluded_triple ? 1 : 0;
        return MW_OK;
    });
}

mw_status mw_beta_exponent(int n, mw_rational r, mw_rational rt, mw_rational* out) {
    return wrap([&]() -> mw_status {
        if (!out) mw::throw_invalid("out is null");
        *out = from_rat(mw::beta_exponent(n, to_exponent(r), to_exponent(rt)));
        return MW_OK;
    });
}

mw_status mw_gap_check(int n, mw_rational gamma, mw_rational q, mw_rational r, mw_rational qt,
                       mw_rational rt, int* first_holds, int* second_holds,
                       mw_rational* residual_first, mw_rational* residual_second) {
    return wrap([&]() -> mw_status {
        const mw::GapCheckResult res = mw::gap_check(n, to_rat(gamma), to_exponent(q),
                                                     to_exponent(r), to_exponent(qt),
                                                     to_exponent(rt));
        if (first_holds) *first_holds = res.first_holds ? 1 : 0;
        if (second_holds) *second_holds = res.second_holds ? 1 : 0;
        if (residual_first) *residual_first = from_rat(res.residual_first);
        if (residual_second) *residual_second = from_rat(res.residual_second);
        return MW_OK;
    });
}

mw_status mw_local_existence_constants(int n, mw_rational* gamma, mw_rational* k0, mw_rational* q0,
                                mw_rational* r0, int* r0_in_range) {
    return wrap([&]() -> mw_status {
        const mw::LocalExistenceConstants c = mw::local_existence_constants(n);
        if (gamma) *gamma = from_rat(c.gamma);
        if (k0) *k0 = from_rat(c.k0);
        if (q0) *q0 = from_rat(c.q0);
        if (r0) *r0 = from_rat(c.r0);
        if (r0_in_range) *r0_in_range = c.r0_admissible_range ? 1 : 0;
        return MW_OK;
    });
}

mw_status mw_field_create(int ndim, const int* points, const double* box, int hdim,
                          mw_field** out) {
    return wrap([&]() -> mw_status {
        if (!points || !box || !out) mw::throw_invalid("bad arguments to mw_field_create");
        std::vector<int> pts(points, points + ndim);
        std::vector<double> b(box, box + ndim);
        auto* f = new mw_field{mw::Field(mw::GridSpec::make(pts, b), hdim)};
        *out = f;
        return MW_OK;
    });
}

void mw_field_destroy(mw_field* f) { delete f; }

size_t mw_field_value_count(const mw_field* f) { return f ? f->field.values.size() : 0; }

int mw_field_hdim(const mw_field* f) { return f ? f->field.hdim : 0; }

mw_status mw_field_set_values(mw_field* f, const double* interleaved, size_t count) {
    return wrap([&]() -> mw_status {
        if (!f || !interleaved) mw::throw_invalid("bad arguments");
        if (count != f->field.values.size()) mw::throw_invalid("value count mismatch");
        for (size_t i = 0; i < count; ++i)
            f->field.values[i] = mw::cplx(interleaved[2 * i], interleaved[2 * i + 1]);
        f->field.validate("field values");
        return MW_OK;
    });
}

mw_status mw_field_get_values(const mw_field* f, double* interleaved, size_t count) {
    return wrap([&]() -> mw_status {
        if (!f || !interleaved) mw::throw_invalid("bad arguments");
        if (count != f->field.values.size()) mw::throw_invalid("value count mismatch");
        for (size_t i = 0; i < count; ++i) {
            interleaved[2 * i] = f->field.values[i].real();
            interleaved[2 * i + 1] = f->field.values[i].imag();
        }
        return MW_OK;
    });
}

mw_status mw_field_save(const mw_field* f, const char* path) {
    return wrap([&]() -> mw_status {
        if (!f || !path) mw::throw_invalid("bad arguments");
        mw::save_field(f->field, path);
        return MW_OK;
    });
}

mw_status mw_field_load(const char* path, const double* box, int ndim, mw_field** out) {
    return wrap([&]() -> mw_status {
        if (!path || !box || !out) mw::throw_invalid("bad arguments");
        std::vector<double> b(box, box + ndim);
        auto* f = new mw_field{mw::load_field(path, b)};
        *out = f;
        return MW_OK;
    });
}

mw_status mw_solve_linear(const mw_field* phi, const mw_field* psi, const mw_operator* op,
                          const double* alpha, const double* beta, const double* lambda, int m,
                          double horizon, int time_steps, int threads, int verify,
                          mw_trajectory** out, mw_solve_stats* stats) {
    return wrap([&]() -> mw_status {
        if (!phi || !psi || !op || !out) mw::throw_invalid("bad arguments to mw_solve_linear");
        mw::MultipointSpec spec;
        if (m > 0) {
            if (!alpha || !beta || !lambda) mw::throw_invalid("multipoint arrays are null");
            std::vector<mw::cplx> as(m), bs(m);
            std::vector<double> ls(lambda, lambda + m);
            for (int k = 0; k < m; ++k) {
                as[k] = mw::cplx(alpha[2 * k], alpha[2 * k + 1]);
                bs[k] = mw::cplx(beta[2 * k], beta[2 * k + 1]);
            }
            spec = mw::MultipointSpec::make(as, bs, ls);
        }
        mw::LinearProblem problem;
        problem.grid = phi->field.grid;
        problem.op = &op->spec;
        problem.phi = phi->field;
        problem.psi = psi->field;
        problem.horizon = horizon;

        mw::SolveOptions options;
        options.threads = threads;

        mw::SolveReport report;
        const std::vector<double> times =
            mw::uniform_times(0.0, horizon, static_cast<std::size_t>(time_steps) + 1);
        auto* traj = new mw_trajectory{
            mw::solve_linear(problem, spec, times, &report, options)};
        if (stats) {
            *stats = mw_solve_stats{};
            stats->mode_count = report.mode_count;
            stats->min_abs_det = report.min_abs_det;
            stats->max_inv_det_norm = report.max_inv_det_norm;
            if (verify) {
                const mw::ResidualReport rr = mw::verify_solution(traj->traj, problem, spec);
                stats->pde_residual = rr.pde_residual;
                stats->cond_u_residual = rr.cond_u_residual;
                stats->cond_ut_residual = rr.cond_ut_residual;
                stats->energy_drift = rr.energy_drift;
            }
        }
        *out = traj;
        return MW_OK;
    });
}

void mw_trajectory_destroy(mw_trajectory* t) { delete t; }

size_t mw_trajectory_samples(const mw_trajectory* t) { return t ? t->traj.samples() : 0; }

double mw_trajectory_time(const mw_trajectory* t, size_t i) {
    return t && i < t->traj.times.size() ? t->traj.times[i] : 0.0;
}

mw_status mw_trajectory_snapshot(const mw_trajectory* t, size_t i, int deriv, mw_field** out) {
    return wrap([&]() -> mw_status {
        if (!t || !out) mw::throw_invalid("bad arguments");
        if (i >= t->traj.samples()) mw::throw_invalid("snapshot index out of range");
        auto* f = new mw_field{deriv ? t->traj.ut_physical(i) : t->traj.u_physical(i)};
        *out = f;
        return MW_OK;
    });
}

}  // extern "C"
