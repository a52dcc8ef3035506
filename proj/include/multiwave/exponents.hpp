#ifndef MULTIWAVE_EXPONENTS_HPP
#define MULTIWAVE_EXPONENTS_HPP

#include <optional>
#include <vector>

#include "multiwave/rational.hpp"

namespace mw {

struct ExponentPair {
    Exponent q;
    Exponent r;
};

struct AdmissibilityVerdict {
    bool admissible{false};
    bool sharp{false};
    bool endpoint{false};
    bool excluded_triple{false};  // (n, q, r) == (2, 2, inf)
};

// Exact-rational evaluation of the wave admissibility condition
//   1/q + (n-1)/(2r) <= (n-1)/4,  2 <= q, r <= inf,  (n,q,r) != (2,2,inf).
// sharp on equality; endpoint at (2, 2(n-1)/(n-3)) for n > 3. Requires n >= 2.
AdmissibilityVerdict classify_pair(int n, Exponent q, Exponent r);

// The endpoint pair (2, 2(n-1)/(n-3)), defined for n > 3.
ExponentPair endpoint_pair(int n);

struct GapCheckResult {
    bool first_holds{false};   // 1/q + n/r == n/2 - gamma
    bool second_holds{false};  // 1/qt + n/rt - 2 == n/2 - gamma (as displayed)
    Rat residual_first;        // lhs - mid
    Rat residual_second;
};

// Checks the displayed scaling relation verbatim, reporting exact residuals.
GapCheckResult gap_check(int n, Rat gamma, Exponent q, Exponent r, Exponent qt, Exponent rt);

// beta(r, rt) = n/2 - 1 - (n/2)(1/r - 1/rt). r, rt >= 1.
Rat beta_exponent(int n, Exponent r, Exponent rt);

// The claim "beta(r,r) <= 0 when n > 2" contradicts the formula
// (beta(r,r) = n/2 - 1 > 0); surfaced so reports can flag it.
bool beta_diagonal_contradiction(int n);

// Validated exponent data for one Strichartz estimate instance. The primal
// side satisfies 1/q + n/r = n/2 - gamma exactly; the dual side satisfies the
// Hoelder-conjugated form 1/qt' + n/rt' - 2 = n/2 - gamma (the displayed
// unprimed variant admits no admissible solutions). Both pairs admissible.
struct GapRelation {
    int n{2};
    Rat gamma;
    ExponentPair pair;        // (q, r)
    ExponentPair dual_pair;   // (qt, rt)
    double alpha{0.0};        // fractional power, [0, 1)

    static GapRelation make(int n, Rat gamma, ExponentPair pair, ExponentPair dual_pair,
                            double alpha);
};

// The unique sharp admissible pair on the gap line for given (n, gamma), when
// it lies in range.
std::optional<ExponentPair> sharp_pair_for_gamma(int n, Rat gamma);

// A default admissible dual pair on the conjugated gap line, if one exists.
std::optional<ExponentPair> default_dual_pair(int n, Rat gamma);

struct LocalExistenceConstants {
    Rat gamma;  // (n-3) / (2 (n-1))
    Rat k0;     // (n+1)^2 / ((n-1)^2 + 4)
    Rat q0;     // 2 (n+1) / (n-3)
    Rat r0;     // 2 (n^2-1) / ((n^2-1) + 4)
    bool r0_admissible_range{false};  // r0 >= 2 never holds; reported verbatim
};

// Exact rationals of the local-existence exponent set; requires n >= 4.
LocalExistenceConstants local_existence_constants(int n);

// Default finite pair set for the Strichartz norm sup: (inf,2), (4,4) when
// admissible, and the endpoint for n > 3. (2, inf) is skipped by policy.
std::vector<ExponentPair> default_pair_set(int n);

}  // namespace mw

#endif
