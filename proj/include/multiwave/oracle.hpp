#ifndef MULTIWAVE_ORACLE_HPP
#define MULTIWAVE_ORACLE_HPP

#include <vector>

#include "multiwave/linear_solver.hpp"

namespace mw {

// Independent brute-force checks: classical RK4 in time per Fourier mode, and
// a shooting-style assembly of the multipoint map that never touches the
// analytic cosine/sine formulas or the mode determinant.

// Method-of-lines integrator for (u, v)' = (v, -(A + |xi|^2) u + F^) with
// classical RK4 per mode. dt must divide the horizon and satisfy
// dt <= 0.5 / sqrt(max eigenvalue of A_xi). Snapshots are taken at
// output_times, each of which must land on an RK4 step.
SpectralTrajectory rk4_integrate(const LinearProblem& problem, const Field& u0, const Field& u1,
                                 double dt, const std::vector<double>& output_times,
                                 int threads = 1);

// Stability bound 0.5 / sqrt(max_xi lambda_max(A_xi)) for a problem.
double rk4_stability_bound(const LinearProblem& problem);

struct ShootingReport {
    double min_singular_value{0.0};  // min over modes of the assembled map's smallest sv
    std::vector<std::vector<int>> singular_modes;
};

// Per mode: RK4-propagate the 2d basis columns of (u0, u1)-space to every
// lambda_k, assemble the 2d x 2d linear map of the multipoint conditions
// numerically, and solve by dense elimination with partial pivoting.
InitialPair shooting_multipoint(const LinearProblem& problem, const MultipointSpec& spec,
                                double dt, ShootingReport* report = nullptr, int threads = 1,
                                double singular_tol = 1e-10);

struct CompareReport {
    double sup_diff{0.0};
    double l2_diff{0.0};
    double mixed_diff{0.0};  // L^2_t L^2_x of the difference
    double sup_ref{0.0};
};

// Norm differences between two trajectories on the same grid/time axis.
CompareReport compare_trajectories(const SpectralTrajectory& a, const SpectralTrajectory& b);

}  // namespace mw

#endif
