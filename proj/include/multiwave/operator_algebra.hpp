#ifndef MULTIWAVE_OPERATOR_ALGEBRA_HPP
#define MULTIWAVE_OPERATOR_ALGEBRA_HPP

#include <functional>
#include <span>
#include <vector>

#include "multiwave/types.hpp"

namespace mw {

// The operator A as a Hermitian positive-definite matrix with its cached
// eigendecomposition A = V diag(lambda) V^*. The smallest eigenvalue plays
// the role of the positivity margin omega.
class OperatorSpec {
public:
    // Validates Hermiticity (||A - A^*|| <= 1e-12 ||A||), strict positivity
    // (eigenvalues > 1e-12 * spectral radius) and that the decomposition
    // reconstructs A to 1e-11 relative.
    static OperatorSpec build(const CMat& matrix);

    // Symmetric finite differences for -(a u')' + c u on (0,1) with Dirichlet
    // ends. `points` counts grid nodes including both endpoints; a_mid holds
    // the points-1 midpoint samples of a, c_interior the points-2 node samples
    // of c. The matrix acts on the interior nodes.
    static OperatorSpec sturm_liouville(std::span<const double> a_mid,
                                        std::span<const double> c_interior, int points);
    // Convenience: constant coefficients.
    static OperatorSpec sturm_liouville_const(double a, double c, int points);

    int hdim() const { return hdim_; }
    const CMat& matrix() const { return matrix_; }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }  // ascending
    const CMat& eigenvectors() const { return eigenvectors_; }               // unitary columns
    double positivity_margin() const { return eigenvalues_.front(); }
    double spectral_radius() const { return eigenvalues_.back(); }

    // V diag(lambda^theta) V^*, theta >= 0
    CMat fractional_power(double theta) const;
    // V diag(f(lambda + shift)) V^*
    CMat spectral_function(double shift, const std::function<double(double)>& f) const;

    // Fiber-vector rotations into/out of the eigenbasis: w = V^* x, x = V w.
    void to_eigenbasis(const cplx* x, cplx* w) const;
    void from_eigenbasis(const cplx* w, cplx* x) const;

    CVec apply(const CVec& x) const;  // A x

private:
    OperatorSpec() = default;
    int hdim_{0};
    CMat matrix_;
    std::vector<double> eigenvalues_;
    CMat eigenvectors_;
};

// A_xi = A + |xi|^2, the per-mode generator of the cosine/sine family.
struct ShiftedOperator {
    const OperatorSpec* base{nullptr};
    double shift{0.0};  // |xi|^2 >= 0

    ShiftedOperator(const OperatorSpec& op, double s);
    double eigenvalue(int i) const { return base->eigenvalues()[i] + shift; }
    double max_eigenvalue() const { return base->eigenvalues().back() + shift; }
};

// Trigonometric cosine/sine operator families of A_xi:
//   C(t) = cos(t A_xi^{1/2}),  S(t) = A_xi^{-1/2} sin(t A_xi^{1/2}),
// the solution operators of v'' + A_xi v = 0 with C(0)=I, S(0)=0, S'(0)=I.
CMat cosine_at(const ShiftedOperator& shifted, double t);
CMat sine_at(const ShiftedOperator& shifted, double t);

}  // namespace mw

#endif
