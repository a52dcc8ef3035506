#ifndef MULTIWAVE_STRICHARTZ_HPP
#define MULTIWAVE_STRICHARTZ_HPP

#include <string>
#include <vector>

#include "multiwave/exponents.hpp"
#include "multiwave/field.hpp"
#include "multiwave/linear_solver.hpp"
#include "multiwave/operator_algebra.hpp"

namespace mw {

// One verified inequality instance.
struct EstimateReport {
    double lhs{0.0};
    double rhs{0.0};
    double ratio{0.0};  // lhs/rhs when rhs > 0, else 0
    std::string label;
};

// Decay-model fit e of values ~ C * t^-e (power) or C * (1+t)^-e (shifted),
// least squares in log-log.
enum class DecayModel { power, one_plus_t };
struct DecayFit {
    DecayModel model{DecayModel::power};
    double exponent{0.0};
    double log_c{0.0};
    double sse{0.0};
};
DecayFit fit_decay(const std::vector<double>& times, const std::vector<double>& values,
                   DecayModel model);
DecayFit fit_best_decay(const std::vector<double>& times, const std::vector<double>& values);

// Dispersive check series for the homogeneous propagator U(t) (u0 = f,
// u1 = 0, F = 0):
//   norm(t)  = ||A^alpha U(t) f||_Lp
//   ratio(t) = t^{n(1/2 - 1/p) + alpha} * norm(t) / ||f||_Lp'
// Times must stay inside the pre-wraparound window t <= min(L)/4, and the
// data must be numerically compactly supported inside the box.
struct DispersiveSeries {
    std::vector<double> times;
    std::vector<double> norms;
    std::vector<double> ratios;
    double claimed_exponent{0.0};  // n(1/2 - 1/p) + alpha
    double data_dual_norm{0.0};    // ||f||_Lp'

    DecayFit norm_fit;   // best model fit of norm(t)
    DecayFit power_fit;  // pure power-law fit of norm(t)
    // Slope of log ratio vs log t: claimed_exponent - fitted decay. Zero when
    // the claimed rate matches the measurement exactly.
    double ratio_slope{0.0};
    double max_ratio{0.0};
};

DispersiveSeries dispersive_ratio(const OperatorSpec& op, double alpha, double p, const Field& data,
                                  const std::vector<double>& times, int threads = 1);

// Full Strichartz report for one solved problem instance:
//   LHS = ||A^a u||_{Lq Lr} + sup_t ||A^a u||_L2 + sup_t ||A^a u_t||_{W.^{gamma-1,2}}
//   RHS = ||A phi||_{W.^{gamma,2}} + ||A psi||_{W.^{gamma-1,2}} + ||F||_{Lqt' Lrt'}
// Homogeneous norms of negative order drop the zero mode (torus seminorm).
EstimateReport strichartz_report(const LinearProblem& problem, const MultipointSpec& spec,
                                 const GapRelation& gap, const std::vector<double>& times,
                                 const SolveOptions& options = {});

// Retarded bilinear form
//   T(F,G) = int int_{s<t} <(A^{a/2} U(s))^* F(s), (A^{a/2} U(t))^* G(t)> ds dt
// via double trapezoid in time and exact spatial (Plancherel) inner products.
// Also reports the constant C = |T| / (||F||_{Lq' Lr'} ||G||_{Lq' Lr'}).
struct BilinearFormResult {
    cplx value{0.0, 0.0};
    double bound_constant{0.0};
    double f_norm{0.0};
    double g_norm{0.0};
};
BilinearFormResult bilinear_form(const OperatorSpec& op, double alpha,
                                 const std::vector<double>& times,
                                 const std::vector<Field>& f_snapshots,
                                 const std::vector<Field>& g_snapshots, ExponentPair pair);

// sup over a declared finite admissible pair set of mixed norms.
double strichartz_norm(const std::vector<double>& times, const std::vector<Field>& snapshots,
                       int n, const std::vector<ExponentPair>& pairs);

}  // namespace mw

#endif
