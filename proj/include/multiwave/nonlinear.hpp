#ifndef MULTIWAVE_NONLINEAR_HPP
#define MULTIWAVE_NONLINEAR_HPP

#include <vector>

#include "multiwave/exponents.hpp"
#include "multiwave/linear_solver.hpp"

namespace mw {

// Power nonlinearity F(u) = lambda |u|^{k-1} u (scalar fibers) or
// F(u) = lambda ||u(x)||_H^{k-1} u(x) (vector fibers), k > 1.
struct Nonlinearity {
    enum class Kind { scalar_power, fiber_norm_power };
    Kind kind{Kind::scalar_power};
    double lambda{0.0};
    double k{3.0};

    static Nonlinearity scalar_power(double lambda, double k);
    static Nonlinearity fiber_norm_power(double lambda, double k);
};

Field eval_nonlinearity(const Nonlinearity& nl, const Field& u);

struct PicardConfig {
    int max_iter{50};
    double tol{1e-10};               // successive-difference tolerance in the V-norm
    double contraction_target{0.5};  // the window rule enforces T^{1/p} M^{k-1} <= this
    double ball_radius{0.0};         // M; 0 -> choose 2 ||S(0)||_V
    double holder_p{0.0};            // p of the window rule; 0 -> derive from exponents
    double window{0.0};              // explicit window T; 0 -> select_window
    Rat gamma{};                     // V-norm regularity; 0/1 -> n(1/2 - 1/k)
    int time_steps{64};              // samples per window
};

// Largest T on the dyadic ladder {horizon * 2^-j} with T^{1/p} M^{k-1} <= 1/2
// (or the configured target). Warns through the report when T < 1e-6.
double select_window(double ball_radius, double k, double holder_p, double horizon,
                     double target = 0.5);

// The Hoelder exponent p >= 1 of the window rule, derived from the V-norm
// pair: 1/rt = 1 - k/r, 1/qt = n/2 - 1 + gamma - n/rt, 1/p = 1/qt' - k/q.
// Empty when no valid p >= 1 exists.
std::optional<double> derive_holder_p(int n, Rat gamma, double k, ExponentPair pair);

// V-norm of a trajectory: mixed L^q_t L^r_x norm of A u with (q, r) the sharp
// admissible pair on the gap line for (n, gamma).
struct VNorm {
    ExponentPair pair;
    double q{0.0};
    double r{0.0};

    static VNorm make(int n, Rat gamma);
    double operator()(const SpectralTrajectory& traj, const OperatorSpec& op) const;
};

struct ConvergenceReport {
    int iterations{0};
    std::vector<double> diffs;   // successive V-norm differences
    std::vector<double> ratios;  // diffs[i] / diffs[i-1]
    double window{0.0};
    double ball_radius{0.0};
    double final_vnorm{0.0};
    bool converged{false};
    bool in_ball{false};
    bool window_warning{false};  // window below 1e-6
};

// One Picard application: S(u) = S1 phi + S2 psi + G(F(u)) — a full
// multipoint linear solve with source F(u(.)).
SpectralTrajectory picard_map(const SpectralTrajectory& u, const LinearProblem& problem,
                              const MultipointSpec& spec, const Nonlinearity& nl,
                              const SolveOptions& options = {});

// Picard iteration from u0 = S(0) until the successive V-norm difference
// falls below tol. Errors if max_iter is exceeded or an iterate escapes the
// 2M ball.
SpectralTrajectory solve_nonlinear(const LinearProblem& problem, const MultipointSpec& spec,
                                   const Nonlinearity& nl, const PicardConfig& config,
                                   ConvergenceReport* report = nullptr,
                                   const SolveOptions& options = {},
                                   bool start_from_zero = false);

// Chains contraction windows to cover [0, t_star]; multipoint conditions act
// on the first window only (all lambda_k must fall inside it), later windows
// continue as classical Cauchy problems from the previous end state. Aborts
// with the partial trajectory if the window shrinks below 1e-6.
struct ContinuationReport {
    std::vector<double> window_ends;
    bool completed{false};
    ConvergenceReport last_window;
};
SpectralTrajectory continue_solution(const LinearProblem& problem, const MultipointSpec& spec,
                                     const Nonlinearity& nl, const PicardConfig& config,
                                     double t_star, ContinuationReport* report = nullptr,
                                     const SolveOptions& options = {});

}  // namespace mw

#endif
