#include "multiwave/exponents.hpp"

namespace mw {
namespace {

bool in_range(const Exponent& e) {
    // 2 <= e <= inf
    if (e.inf) return true;
    return e.value >= Rat(2);
}

bool exponent_at_least_one(const Exponent& e) { return e.inf || e.value >= Rat(1); }

}  // namespace

AdmissibilityVerdict classify_pair(int n, Exponent q, Exponent r) {
    if (n <= 1) throw_invalid("admissibility classification requires n > 1");
    AdmissibilityVerdict v;
    v.excluded_triple = (n == 2 && !q.inf && q.value == Rat(2) && r.inf);
    if (!in_range(q) || !in_range(r)) return v;

    // 1/q + (n-1)/(2r) <= (n-1)/4
    const Rat lhs = q.reciprocal() + Rat(n - 1, 2) * r.reciprocal();
    const Rat rhs = Rat(n - 1, 4);
    if (lhs > rhs) return v;
    if (v.excluded_triple) return v;

    v.admissible = true;
    v.sharp = (lhs == rhs);
    if (n > 3 && !q.inf && q.value == Rat(2) && !r.inf && r.value == Rat(2 * (n - 1), n - 3))
        v.endpoint = true;
    return v;
}

ExponentPair endpoint_pair(int n) {
    if (n <= 3) throw_invalid("endpoint pair requires n > 3");
    return ExponentPair{Exponent(Rat(2)), Exponent(Rat(2 * (n - 1), n - 3))};
}

GapCheckResult gap_check(int n, Rat gamma, Exponent q, Exponent r, Exponent qt, Exponent rt) {
    const Rat mid = Rat(n, 2) - gamma;
    const Rat lhs1 = q.reciprocal() + Rat(n) * r.reciprocal();
    const Rat lhs2 = qt.reciprocal() + Rat(n) * rt.reciprocal() - Rat(2);
    GapCheckResult res;
    res.residual_first = lhs1 - mid;
    res.residual_second = lhs2 - mid;
    res.first_holds = res.residual_first.is_zero();
    res.second_holds = res.residual_second.is_zero();
    return res;
}

Rat beta_exponent(int n, Exponent r, Exponent rt) {
    if (!exponent_at_least_one(r) || !exponent_at_least_one(rt))
        throw_invalid("beta exponent requires r, rt >= 1");
    return Rat(n, 2) - Rat(1) - Rat(n, 2) * (r.reciprocal() - rt.reciprocal());
}

bool beta_diagonal_contradiction(int n) {
    // beta(r, r) = n/2 - 1 is positive for n > 2, contradicting the claimed
    // "beta(r,r) <= 0 when n > 2".
    return n > 2 && beta_exponent(n, Exponent(Rat(2)), Exponent(Rat(2))) > Rat(0);
}

GapRelation GapRelation::make(int n, Rat gamma, ExponentPair pair, ExponentPair dual_pair,
                              double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw_invalid("fractional power alpha must be in [0, 1)");
    const AdmissibilityVerdict v = classify_pair(n, pair.q, pair.r);
    if (!v.admissible) throw_invalid("gap relation: (q, r) is not admissible");
    const AdmissibilityVerdict vd = classify_pair(n, dual_pair.q, dual_pair.r);
    if (!vd.admissible) throw_invalid("gap relation: dual (qt, rt) is not admissible");

    const Rat mid = Rat(n, 2) - gamma;
    if (pair.q.reciprocal() + Rat(n) * pair.r.reciprocal() != mid)
        throw_invalid("gap relation: 1/q + n/r != n/2 - gamma");
    // Dual side in the Hoelder-conjugated form: 1/qt' + n/rt' - 2 = n/2 - gamma.
    const Exponent qtp = dual_pair.q.conjugate();
    const Exponent rtp = dual_pair.r.conjugate();
    if (qtp.reciprocal() + Rat(n) * rtp.reciprocal() - Rat(2) != mid)
        throw_invalid("gap relation: 1/qt' + n/rt' - 2 != n/2 - gamma");

    GapRelation g;
    g.n = n;
    g.gamma = gamma;
    g.pair = pair;
    g.dual_pair = dual_pair;
    g.alpha = alpha;
    return g;
}

std::optional<ExponentPair> sharp_pair_for_gamma(int n, Rat gamma) {
    // Intersect 1/q + n/r = n/2 - gamma with sharpness 1/q + (n-1)/(2r) = (n-1)/4.
    const Rat inv_r = (Rat(n + 1) - Rat(4) * gamma) / Rat(2 * (n + 1));
    const Rat inv_q = Rat(n - 1, 4) - Rat(n - 1, 2) * inv_r;
    if (inv_r.is_negative() || inv_q.is_negative()) return std::nullopt;
    if (inv_r > Rat(1, 2) || inv_q > Rat(1, 2)) return std::nullopt;  // q, r >= 2
    Exponent q = inv_q.is_zero() ? Exponent::infinity() : Exponent(Rat(1) / inv_q);
    Exponent r = inv_r.is_zero() ? Exponent::infinity() : Exponent(Rat(1) / inv_r);
    const AdmissibilityVerdict v = classify_pair(n, q, r);
    if (!v.admissible) return std::nullopt;
    return ExponentPair{q, r};
}

std::optional<ExponentPair> default_dual_pair(int n, Rat gamma) {
    // 1/qt + n/rt = n/2 - 1 + gamma with (qt, rt) admissible; scan a small
    // ladder of rt candidates.
    const Rat target = Rat(n, 2) - Rat(1) + gamma;
    if (target.is_negative()) return std::nullopt;
    const std::int64_t denominators[] = {2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64};
    for (std::int64_t rd : denominators) {
        const Rat inv_rt = Rat(1, rd);
        const Rat inv_qt = target - Rat(n) * inv_rt;
        if (inv_qt.is_negative() || inv_qt > Rat(1, 2)) continue;
        Exponent qt = inv_qt.is_zero() ? Exponent::infinity() : Exponent(Rat(1) / inv_qt);
        Exponent rt = Exponent(Rat(rd));
        if (classify_pair(n, qt, rt).admissible) return ExponentPair{qt, rt};
    }
    if (target.is_zero()) {
        // (inf, inf) solves it but r must be >= 2; use (inf, inf) -> not
        // admissible for any n; give up.
        return std::nullopt;
    }
    // rt = inf branch: 1/qt = target
    if (target <= Rat(1, 2)) {
        Exponent qt = Exponent(Rat(1) / target);
        if (classify_pair(n, qt, Exponent::infinity()).admissible)
            return ExponentPair{qt, Exponent::infinity()};
    }
    return std::nullopt;
}

LocalExistenceConstants local_existence_constants(int n) {
    if (n < 4) throw_invalid("local-existence constants require n >= 4");
    const std::int64_t nn = n;
    LocalExistenceConstants c;
    c.gamma = Rat(nn - 3, 2 * (nn - 1));
    c.k0 = Rat((nn + 1) * (nn + 1), (nn - 1) * (nn - 1) + 4);
    c.q0 = Rat(2 * (nn + 1), nn - 3);
    c.r0 = Rat(2 * (nn * nn - 1), (nn * nn - 1) + 4);
    c.r0_admissible_range = c.r0 >= Rat(2);
    return c;
}

std::vector<ExponentPair> default_pair_set(int n) {
    std::vector<ExponentPair> pairs;
    pairs.push_back({Exponent::infinity(), Exponent(Rat(2))});
    if (classify_pair(n, Exponent(Rat(4)), Exponent(Rat(4))).admissible)
        pairs.push_back({Exponent(Rat(4)), Exponent(Rat(4))});
    if (n > 3) pairs.push_back(endpoint_pair(n));
    // (2, inf) is left out even where Condition 4.1 admits it.
    return pairs;
}

}  // namespace mw
