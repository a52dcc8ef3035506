#ifndef MULTIWAVE_MULTIPOINT_HPP
#define MULTIWAVE_MULTIPOINT_HPP

#include <utility>
#include <vector>

#include "multiwave/operator_algebra.hpp"
#include "multiwave/types.hpp"

namespace mw {

// Multipoint-in-time condition data of
//   u(0)   = phi + sum_k alpha_k u(lambda_k),
//   u_t(0) = psi + sum_k beta_k  u_t(lambda_k).
// The all-zero coefficient case is the classical Cauchy problem and is
// accepted; otherwise |alpha_k + beta_k| > 0 for every k and
// (sum alpha)(sum beta) != 0 are required.
struct MultipointSpec {
    std::vector<cplx> alphas;
    std::vector<cplx> betas;
    std::vector<double> lambdas;

    static MultipointSpec cauchy() { return MultipointSpec{}; }
    static MultipointSpec make(std::vector<cplx> alphas, std::vector<cplx> betas,
                               std::vector<double> lambdas);

    std::size_t count() const { return lambdas.size(); }
    bool is_cauchy() const;
    double max_lambda() const;
    // lambdas must lie in (0, T]
    void validate_horizon(double horizon) const;
};

// Time-sampled fiber source F^(t, xi) for one mode, on a uniform grid.
struct ModeSource {
    std::vector<double> times;   // uniform, starting at 0
    std::vector<CVec> values;    // one fiber vector per sample

    bool empty() const { return times.empty(); }
};

// Per-mode 2x2 block system in (u0, u1); blocks are commuting functions of
// A_xi assembled from cosine/sine evaluations at the lambda_k.
struct ModeSystem {
    CMat a11, a12, a21, a22;
};

ModeSystem assemble_mode_system(const MultipointSpec& spec, const ShiftedOperator& shifted);

// D = a11 a22 - a12 a21 (valid as a 2x2-block determinant because all blocks
// commute). Throws a "singular multipoint mode" error when ||D^-1|| exceeds
// cond_cap.
CMat mode_determinant(const ModeSystem& sys, const ShiftedOperator& shifted,
                      double cond_cap = 1e12, const std::vector<int>* freq = nullptr);

// Duhamel integrals over the source grid: per-step 2-point Gauss-Legendre,
// source linearly interpolated within steps, trig kernels evaluated exactly.
//   duhamel_integral:     int_0^t S(t - tau) F^(tau) dtau
//   duhamel_integral_cos: int_0^t C(t - tau) F^(tau) dtau   (the d/dt of the above)
CVec duhamel_integral(const ShiftedOperator& shifted, const ModeSource& source, double t);
CVec duhamel_integral_cos(const ShiftedOperator& shifted, const ModeSource& source, double t);

// Right-hand sides of the block system:
//   f1 = sum_k alpha_k int_0^{lambda_k} S(lambda_k - tau) F^ dtau + phi^
//   f2 = sum_k beta_k  int_0^{lambda_k} C(lambda_k - tau) F^ dtau + psi^
// The C kernel in f2 follows from differentiating the Duhamel term. With
// half_source_term an extra (1/2) F^(lambda_k) is added inside the beta sum
// (an alternate assembly convention, kept selectable for comparison runs).
std::pair<CVec, CVec> assemble_rhs(const MultipointSpec& spec, const ShiftedOperator& shifted,
                                   const ModeSource& source, const CVec& phi_hat,
                                   const CVec& psi_hat, bool half_source_term = false);

// Block Cramer: u0 = D^-1 [a22 f1 - a12 f2], u1 = D^-1 [a11 f2 - a21 f1].
std::pair<CVec, CVec> solve_initial_pair(const ModeSystem& sys, const CMat& det,
                                         const ShiftedOperator& shifted, const CVec& f1,
                                         const CVec& f2);

// u^(t)  = C(t) u0 + S(t) u1 + int_0^t S(t-tau) F^ dtau
// u^_t(t) = -A_xi S(t) u0 + C(t) u1 + int_0^t C(t-tau) F^ dtau
std::pair<CVec, CVec> propagate_mode(const ShiftedOperator& shifted, const CVec& u0,
                                     const CVec& u1, const ModeSource& source, double t);

}  // namespace mw

#endif
