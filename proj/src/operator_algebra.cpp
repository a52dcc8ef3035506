#include "multiwave/operator_algebra.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace mw {
namespace {

Eigen::MatrixXcd to_eigen(const CMat& m) {
    Eigen::MatrixXcd e(m.dim, m.dim);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) e(i, j) = m(i, j);
    return e;
}

CMat from_eigen(const Eigen::MatrixXcd& e) {
    CMat m(static_cast<int>(e.rows()));
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) m(i, j) = e(i, j);
    return m;
}

constexpr double hermitian_tol = 1e-12;
constexpr double positivity_tol = 1e-12;
constexpr double reconstruct_tol = 1e-11;

}  // namespace

OperatorSpec OperatorSpec::build(const CMat& matrix) {
    if (matrix.dim < 1) throw_invalid("operator matrix must be at least 1x1");
    if (!matrix.all_finite()) throw_invalid("operator matrix has non-finite entries");

    const double scale = matrix.frobenius_norm();
    const CMat defect = matrix - matrix.adjoint();
    if (defect.frobenius_norm() > hermitian_tol * std::max(scale, 1e-300))
        throw_invalid("operator matrix is not Hermitian");

    Eigen::MatrixXcd a = to_eigen(matrix);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a);
    if (solver.info() != Eigen::Success)
        throw_numerical("eigendecomposition failed");

    OperatorSpec op;
    op.hdim_ = matrix.dim;
    op.matrix_ = matrix;
    op.eigenvalues_.resize(static_cast<std::size_t>(matrix.dim));
    for (int i = 0; i < matrix.dim; ++i) op.eigenvalues_[i] = solver.eigenvalues()(i);
    op.eigenvectors_ = from_eigen(solver.eigenvectors());

    const double radius = std::max(std::abs(op.eigenvalues_.front()), std::abs(op.eigenvalues_.back()));
    if (!(op.eigenvalues_.front() > positivity_tol * std::max(radius, 1e-300)))
        throw_invalid("operator is not absolute positive (smallest eigenvalue " +
                      std::to_string(op.eigenvalues_.front()) + ")");

    Eigen::MatrixXcd recon = solver.eigenvectors() *
                             solver.eigenvalues().asDiagonal() *
                             solver.eigenvectors().adjoint();
    if ((recon - a).norm() > reconstruct_tol * std::max(scale, 1e-300))
        throw_numerical("eigendecomposition does not reconstruct the operator");

    return op;
}

OperatorSpec OperatorSpec::sturm_liouville(std::span<const double> a_mid,
                                           std::span<const double> c_interior, int points) {
    if (points < 3) throw_invalid("sturm-liouville needs points >= 3");
    const int m = points - 2;
    if (a_mid.size() != static_cast<std::size_t>(points - 1))
        throw_invalid("sturm-liouville: need points-1 midpoint samples of a");
    if (c_interior.size() != static_cast<std::size_t>(m))
        throw_invalid("sturm-liouville: need points-2 interior samples of c");
    for (double a : a_mid)
        if (!(a > 0.0)) throw_invalid("sturm-liouville coefficient a must be positive");

    const double h = 1.0 / (points - 1);
    const double inv_h2 = 1.0 / (h * h);
    CMat matrix(m);
    for (int i = 0; i < m; ++i) {
        matrix(i, i) = (a_mid[static_cast<std::size_t>(i)] + a_mid[static_cast<std::size_t>(i) + 1]) * inv_h2 +
                       c_interior[static_cast<std::size_t>(i)];
        if (i + 1 < m) {
            matrix(i, i + 1) = -a_mid[static_cast<std::size_t>(i) + 1] * inv_h2;
            matrix(i + 1, i) = -a_mid[static_cast<std::size_t>(i) + 1] * inv_h2;
        }
    }
    return build(matrix);
}

OperatorSpec OperatorSpec::sturm_liouville_const(double a, double c, int points) {
    if (points < 3) throw_invalid("sturm-liouville needs points >= 3");
    std::vector<double> a_mid(static_cast<std::size_t>(points - 1), a);
    std::vector<double> c_int(static_cast<std::size_t>(points - 2), c);
    return sturm_liouville(a_mid, c_int, points);
}

CMat OperatorSpec::fractional_power(double theta) const {
    if (theta < 0.0) throw_invalid("fractional power requires theta >= 0");
    return spectral_function(0.0, [theta](double lambda) { return std::pow(lambda, theta); });
}

CMat OperatorSpec::spectral_function(double shift, const std::function<double(double)>& f) const {
    const int d = hdim_;
    CMat out(d);
    // V diag(f(lambda+shift)) V^*
    for (int i = 0; i < d; ++i) {
        const double fi = f(eigenvalues_[static_cast<std::size_t>(i)] + shift);
        for (int r = 0; r < d; ++r) {
            const cplx vr = eigenvectors_(r, i) * fi;
            for (int c = 0; c < d; ++c) out(r, c) += vr * std::conj(eigenvectors_(c, i));
        }
    }
    return out;
}

void OperatorSpec::to_eigenbasis(const cplx* x, cplx* w) const {
    const int d = hdim_;
    for (int i = 0; i < d; ++i) {
        cplx s{};
        for (int r = 0; r < d; ++r) s += std::conj(eigenvectors_(r, i)) * x[r];
        w[i] = s;
    }
}

void OperatorSpec::from_eigenbasis(const cplx* w, cplx* x) const {
    const int d = hdim_;
    for (int r = 0; r < d; ++r) {
        cplx s{};
        for (int i = 0; i < d; ++i) s += eigenvectors_(r, i) * w[i];
        x[r] = s;
    }
}

CVec OperatorSpec::apply(const CVec& x) const { return matrix_ * x; }

ShiftedOperator::ShiftedOperator(const OperatorSpec& op, double s) : base(&op), shift(s) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw_invalid("shift |xi|^2 must be finite and >= 0");
}

CMat cosine_at(const ShiftedOperator& shifted, double t) {
    return shifted.base->spectral_function(shifted.shift, [t](double mu) {
        return std::cos(t * std::sqrt(mu));
    });
}

CMat sine_at(const ShiftedOperator& shifted, double t) {
    return shifted.base->spectral_function(shifted.shift, [t](double mu) {
        const double omega = std::sqrt(mu);
        return std::sin(t * omega) / omega;
    });
}

}  // namespace mw
