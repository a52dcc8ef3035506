#ifndef MULTIWAVE_LINEAR_SOLVER_HPP
#define MULTIWAVE_LINEAR_SOLVER_HPP

#include <optional>
#include <vector>

#include "multiwave/field.hpp"
#include "multiwave/multipoint.hpp"
#include "multiwave/operator_algebra.hpp"
#include "multiwave/spectral.hpp"

namespace mw {

// Time-sampled source F(t, x) on its own uniform grid.
struct SourceSamples {
    std::vector<double> times;
    std::vector<Field> snapshots;

    bool empty() const { return times.empty(); }
    void validate(const GridSpec& grid, int hdim, double cover) const;
};

struct LinearProblem {
    GridSpec grid;
    const OperatorSpec* op{nullptr};
    Field phi;
    Field psi;
    SourceSamples source;  // may be empty (F = 0)
    double horizon{1.0};

    void validate() const;
};

// Solution samples in mode space: u^ and du^/dt per time, plus exact
// snapshots at the multipoint times lambda_k for residual checks.
struct SpectralTrajectory {
    GridSpec grid;
    int hdim{1};
    std::vector<double> times;
    std::vector<SpectralField> u_hat;
    std::vector<SpectralField> ut_hat;
    std::vector<double> lambda_times;
    std::vector<SpectralField> u_at_lambda;
    std::vector<SpectralField> ut_at_lambda;

    std::size_t samples() const { return times.size(); }
    Field u_physical(std::size_t i) const { return inverse_transform(u_hat[i]); }
    Field ut_physical(std::size_t i) const { return inverse_transform(ut_hat[i]); }
};

struct SolveOptions {
    int threads{1};
    double condition_cap{1e12};       // singular-mode abort threshold on ||D^-1||
    bool half_source_term{false};   // alternate convention: extra (1/2) F^(lambda_k) in f2
};

struct SolveReport {
    std::size_t mode_count{0};
    double min_abs_det{1.0};       // min over modes of |det D(xi)|
    double max_inv_det_norm{0.0};  // max over modes of ||D(xi)^-1||
    std::vector<std::vector<int>> singular_modes;
};

// Constructive per-mode solve: transform data, assemble and Cramer-solve the
// 2x2 block system in the eigenbasis of A, propagate, and sample the
// trajectory at `times` (plus exactly at every lambda_k). Fails listing the
// offending frequencies if any mode determinant exceeds the condition cap.
SpectralTrajectory solve_linear(const LinearProblem& problem, const MultipointSpec& spec,
                                const std::vector<double>& times, SolveReport* report = nullptr,
                                const SolveOptions& options = {});

// The solved initial pair (u0, u1) in mode space, stored as two spectral
// fields. Used for oracle cross-checks.
struct InitialPair {
    SpectralField u0;
    SpectralField u1;
};
InitialPair solve_initial_data(const LinearProblem& problem, const MultipointSpec& spec,
                               SolveReport* report = nullptr, const SolveOptions& options = {});

struct ResidualReport {
    double pde_residual{0.0};        // relative, second-order time differencing
    double cond_u_residual{0.0};     // relative residual of u(0) = phi + sum alpha_k u(lambda_k)
    double cond_ut_residual{0.0};    // same for u_t
    double energy_drift{0.0};        // relative, only meaningful when F = 0
    bool has_energy{false};
};

// Pure measurement on a trajectory; does not re-solve. Multipoint residuals
// use the trajectory's tagged lambda snapshots when present, otherwise the
// lambda_k must coincide with grid times.
ResidualReport verify_solution(const SpectralTrajectory& traj, const LinearProblem& problem,
                               const MultipointSpec& spec);

// Aggregate per-mode wave energy |u^_t|^2 + <A_xi u^, u^> at one snapshot.
double trajectory_energy(const SpectralTrajectory& traj, const OperatorSpec& op, std::size_t i);

std::vector<double> uniform_times(double t0, double t1, std::size_t count);

}  // namespace mw

#endif
