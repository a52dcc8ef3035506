#include "multiwave/multipoint.hpp"

#include <cmath>

#include "multiwave/grid.hpp"

namespace mw {
namespace {

// Diagonal of V^* M V for a block M that is a function of A_xi (so V
// diagonalizes it exactly; off-diagonal entries are roundoff).
std::vector<cplx> block_eigenvalues(const CMat& block, const OperatorSpec& base) {
    const int d = block.dim;
    std::vector<cplx> diag(static_cast<std::size_t>(d));
    std::vector<cplx> col(static_cast<std::size_t>(d));
    std::vector<cplx> tmp(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        // column i of V
        for (int r = 0; r < d; ++r) col[static_cast<std::size_t>(r)] = base.eigenvectors()(r, i);
        for (int r = 0; r < d; ++r) {
            cplx s{};
            for (int c = 0; c < d; ++c) s += block(r, c) * col[static_cast<std::size_t>(c)];
            tmp[static_cast<std::size_t>(r)] = s;
        }
        cplx s{};
        for (int r = 0; r < d; ++r) s += std::conj(base.eigenvectors()(r, i)) * tmp[static_cast<std::size_t>(r)];
        diag[static_cast<std::size_t>(i)] = s;
    }
    return diag;
}

CVec apply_block_inverse(const CMat& block, const OperatorSpec& base, const CVec& x) {
    const int d = block.dim;
    const std::vector<cplx> diag = block_eigenvalues(block, base);
    std::vector<cplx> w(static_cast<std::size_t>(d));
    base.to_eigenbasis(x.v.data(), w.data());
    for (int i = 0; i < d; ++i) w[static_cast<std::size_t>(i)] /= diag[static_cast<std::size_t>(i)];
    CVec out(static_cast<std::size_t>(d));
    base.from_eigenbasis(w.data(), out.v.data());
    return out;
}

void validate_source(const ModeSource& source) {
    if (source.times.size() != source.values.size())
        throw_invalid("mode source: times/values length mismatch");
    if (source.times.size() < 2) throw_invalid("mode source needs >= 2 samples");
    if (std::abs(source.times.front()) > 1e-12) throw_invalid("mode source must start at t = 0");
    const double dt = source.times[1] - source.times[0];
    if (!(dt > 0)) throw_invalid("mode source time grid must be increasing");
    for (std::size_t i = 1; i + 1 < source.times.size(); ++i)
        if (std::abs((source.times[i + 1] - source.times[i]) - dt) > 1e-9 * dt)
            throw_invalid("mode source time grid must be uniform");
}

// int_{ta}^{tb} kernel(t - tau) F^(tau) dtau by 2-point Gauss-Legendre with
// the source linearly interpolated on [sa, sb] (its enclosing sample step).
template <typename Kernel>
void gauss_segment(const Kernel& kernel, double t, double ta, double tb, double sa, double sb,
                   const CVec& fa, const CVec& fb, CVec& acc) {
    static const double node = 0.5773502691896257645;  // 1/sqrt(3)
    const double half = 0.5 * (tb - ta);
    const double mid = 0.5 * (ta + tb);
    const double span = sb - sa;
    for (int g = 0; g < 2; ++g) {
        const double tau = mid + (g == 0 ? -node : node) * half;
        const double w = half;  // each Gauss weight is 1 on [-1,1], scaled by half
        const double theta = (tau - sa) / span;
        const CVec* lo = &fa;
        const CVec* hi = &fb;
        for (std::size_t i = 0; i < acc.size(); ++i) {
            const cplx f = (1.0 - theta) * (*lo)[i] + theta * (*hi)[i];
            acc[i] += w * kernel(t - tau, i, f);
        }
    }
}

template <bool UseCosine>
CVec duhamel_impl(const ShiftedOperator& shifted, const ModeSource& source, double t) {
    validate_source(source);
    const int d = shifted.base->hdim();
    CVec result(static_cast<std::size_t>(d));
    if (t == 0.0) return result;
    if (t < 0.0 || t > source.times.back() + 1e-9 * source.times.back())
        throw_invalid("duhamel time t outside the sampled source range");

    // Work in the eigenbasis: the kernel is scalar per eigencomponent.
    std::vector<double> omega(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) omega[static_cast<std::size_t>(i)] = std::sqrt(shifted.eigenvalue(i));
    std::vector<CVec> rotated(source.values.size(), CVec(static_cast<std::size_t>(d)));
    for (std::size_t j = 0; j < source.values.size(); ++j)
        shifted.base->to_eigenbasis(source.values[j].v.data(), rotated[j].v.data());

    auto kernel = [&](double dt_arg, std::size_t i, cplx f) -> cplx {
        const double w = omega[i];
        if constexpr (UseCosine)
            return std::cos(dt_arg * w) * f;
        else
            return std::sin(dt_arg * w) / w * f;
    };

    CVec acc(static_cast<std::size_t>(d));
    const double dt = source.times[1] - source.times[0];
    std::size_t j = 0;
    while (j + 1 < source.times.size() && source.times[j + 1] <= t + 1e-12 * std::max(t, dt)) {
        gauss_segment(kernel, t, source.times[j], source.times[j + 1], source.times[j],
                      source.times[j + 1], rotated[j], rotated[j + 1], acc);
        ++j;
    }
    const double remaining = t - source.times[j];
    if (remaining > 1e-12 * std::max(t, dt) && j + 1 < source.times.size()) {
        gauss_segment(kernel, t, source.times[j], t, source.times[j], source.times[j + 1],
                      rotated[j], rotated[j + 1], acc);
    }

    CVec out(static_cast<std::size_t>(d));
    shifted.base->from_eigenbasis(acc.v.data(), out.v.data());
    return out;
}

}  // namespace

MultipointSpec MultipointSpec::make(std::vector<cplx> alphas, std::vector<cplx> betas,
                                    std::vector<double> lambdas) {
    if (alphas.size() != betas.size() || alphas.size() != lambdas.size())
        throw_invalid("multipoint spec: alphas/betas/lambdas must have equal length");
    MultipointSpec spec;
    spec.alphas = std::move(alphas);
    spec.betas = std::move(betas);
    spec.lambdas = std::move(lambdas);
    for (double l : spec.lambdas)
        if (!(l > 0.0) || !std::isfinite(l))
            throw_invalid("multipoint times lambda_k must be strictly positive");
    if (!spec.is_cauchy()) {
        cplx alpha_sum{}, beta_sum{};
        for (std::size_t k = 0; k < spec.count(); ++k) {
            if (std::abs(spec.alphas[k] + spec.betas[k]) == 0.0)
                throw_invalid("multipoint solvability condition violated: alpha_k + beta_k = 0 at k=" +
                              std::to_string(k + 1));
            alpha_sum += spec.alphas[k];
            beta_sum += spec.betas[k];
        }
        if (std::abs(alpha_sum * beta_sum) == 0.0)
            throw_invalid("multipoint solvability condition violated: (sum alpha)(sum beta) = 0");
    }
    return spec;
}

bool MultipointSpec::is_cauchy() const {
    for (const cplx& a : alphas)
        if (a != cplx{}) return false;
    for (const cplx& b : betas)
        if (b != cplx{}) return false;
    return true;
}

double MultipointSpec::max_lambda() const {
    double m = 0.0;
    for (double l : lambdas) m = std::max(m, l);
    return m;
}

void MultipointSpec::validate_horizon(double horizon) const {
    for (double l : lambdas)
        if (l > horizon * (1.0 + 1e-12))
            throw_invalid("multipoint time lambda_k = " + std::to_string(l) +
                          " exceeds horizon T = " + std::to_string(horizon));
}

ModeSystem assemble_mode_system(const MultipointSpec& spec, const ShiftedOperator& shifted) {
    const int d = shifted.base->hdim();
    ModeSystem sys{CMat::identity(d), CMat(d), CMat(d), CMat::identity(d)};
    for (std::size_t k = 0; k < spec.count(); ++k) {
        const CMat c = cosine_at(shifted, spec.lambdas[k]);
        const CMat s = sine_at(shifted, spec.lambdas[k]);
        const CMat as = shifted.base->spectral_function(shifted.shift, [&](double mu) {
            const double omega = std::sqrt(mu);
            return omega * std::sin(spec.lambdas[k] * omega);
        });  // A_xi S(lambda_k)
        sys.a11 = sys.a11 - spec.alphas[k] * c;
        sys.a12 = sys.a12 - spec.alphas[k] * s;
        sys.a21 = sys.a21 + spec.betas[k] * as;
        sys.a22 = sys.a22 - spec.betas[k] * c;
    }
    return sys;
}

CMat mode_determinant(const ModeSystem& sys, const ShiftedOperator& shifted, double cond_cap,
                      const std::vector<int>* freq) {
    const CMat det = sys.a11 * sys.a22 - sys.a12 * sys.a21;
    const std::vector<cplx> diag = block_eigenvalues(det, *shifted.base);
    double min_abs = std::abs(diag[0]);
    for (const cplx& z : diag) min_abs = std::min(min_abs, std::abs(z));
    if (!(min_abs * cond_cap > 1.0)) {
        std::string where = freq ? (" at xi index k=" + format_freq(*freq)) : "";
        throw_numerical("singular multipoint mode" + where + ": |det| = " + std::to_string(min_abs));
    }
    return det;
}

CVec duhamel_integral(const ShiftedOperator& shifted, const ModeSource& source, double t) {
    return duhamel_impl<false>(shifted, source, t);
}

CVec duhamel_integral_cos(const ShiftedOperator& shifted, const ModeSource& source, double t) {
    return duhamel_impl<true>(shifted, source, t);
}

std::pair<CVec, CVec> assemble_rhs(const MultipointSpec& spec, const ShiftedOperator& shifted,
                                   const ModeSource& source, const CVec& phi_hat,
                                   const CVec& psi_hat, bool half_source_term) {
    const int d = shifted.base->hdim();
    CVec f1 = phi_hat;
    CVec f2 = psi_hat;
    if (source.empty() || spec.is_cauchy()) return {f1, f2};
    for (std::size_t k = 0; k < spec.count(); ++k) {
        const CVec sine_part = duhamel_integral(shifted, source, spec.lambdas[k]);
        const CVec cos_part = duhamel_integral_cos(shifted, source, spec.lambdas[k]);
        for (int i = 0; i < d; ++i) {
            f1[static_cast<std::size_t>(i)] += spec.alphas[k] * sine_part[static_cast<std::size_t>(i)];
            f2[static_cast<std::size_t>(i)] += spec.betas[k] * cos_part[static_cast<std::size_t>(i)];
        }
        if (half_source_term) {
            // alternate convention: extra (1/2) F^(lambda_k, xi) inside the
            // beta sum, selectable for comparison runs only
            const double dt = source.times[1] - source.times[0];
            const double pos = spec.lambdas[k] / dt;
            const std::size_t j = std::min(source.times.size() - 2, static_cast<std::size_t>(pos));
            const double theta = (spec.lambdas[k] - source.times[j]) / dt;
            for (int i = 0; i < d; ++i) {
                const cplx f = (1.0 - theta) * source.values[j][static_cast<std::size_t>(i)] +
                               theta * source.values[j + 1][static_cast<std::size_t>(i)];
                f2[static_cast<std::size_t>(i)] += 0.5 * spec.betas[k] * f;
            }
        }
    }
    return {f1, f2};
}

std::pair<CVec, CVec> solve_initial_pair(const ModeSystem& sys, const CMat& det,
                                         const ShiftedOperator& shifted, const CVec& f1,
                                         const CVec& f2) {
    const int d = det.dim;
    CVec rhs0 = sys.a22 * f1;
    const CVec a12f2 = sys.a12 * f2;
    CVec rhs1 = sys.a11 * f2;
    const CVec a21f1 = sys.a21 * f1;
    for (int i = 0; i < d; ++i) {
        rhs0[static_cast<std::size_t>(i)] -= a12f2[static_cast<std::size_t>(i)];
        rhs1[static_cast<std::size_t>(i)] -= a21f1[static_cast<std::size_t>(i)];
    }
    return {apply_block_inverse(det, *shifted.base, rhs0),
            apply_block_inverse(det, *shifted.base, rhs1)};
}

std::pair<CVec, CVec> propagate_mode(const ShiftedOperator& shifted, const CVec& u0,
                                     const CVec& u1, const ModeSource& source, double t) {
    const int d = shifted.base->hdim();
    const CMat c = cosine_at(shifted, t);
    const CMat s = sine_at(shifted, t);
    const CMat as = shifted.base->spectral_function(shifted.shift, [t](double mu) {
        const double omega = std::sqrt(mu);
        return omega * std::sin(t * omega);
    });
    CVec u = c * u0;
    const CVec su1 = s * u1;
    CVec ut = c * u1;
    const CVec asu0 = as * u0;
    for (int i = 0; i < d; ++i) {
        u[static_cast<std::size_t>(i)] += su1[static_cast<std::size_t>(i)];
        ut[static_cast<std::size_t>(i)] -= asu0[static_cast<std::size_t>(i)];
    }
    if (!source.empty()) {
        const CVec du = duhamel_integral(shifted, source, t);
        const CVec dut = duhamel_integral_cos(shifted, source, t);
        for (int i = 0; i < d; ++i) {
            u[static_cast<std::size_t>(i)] += du[static_cast<std::size_t>(i)];
            ut[static_cast<std::size_t>(i)] += dut[static_cast<std::size_t>(i)];
        }
    }
    return {u, ut};
}

}  // namespace mw
