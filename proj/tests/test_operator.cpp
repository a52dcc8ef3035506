#include <doctest.h>

#include <cmath>

#include "multiwave/operator_algebra.hpp"
#include "test_helpers.hpp"

using namespace mw;
using namespace mwtest;

namespace {

CMat scalar_matrix(double a) {
    CMat m(1);
    m(0, 0) = a;
    return m;
}

CMat random_spd(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CMat b(d);
    for (auto& z : b.a) z = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
    // B^* B + d * I is Hermitian positive definite
    CMat m = b.adjoint() * b;
    for (int i = 0; i < d; ++i) m(i, i) += static_cast<double>(d);
    return m;
}

double mat_diff(const CMat& x, const CMat& y) { return (x - y).frobenius_norm(); }

}  // namespace

TEST_SUITE("operator") {
    TEST_CASE("scalar build") {
        const OperatorSpec op = OperatorSpec::build(scalar_matrix(4.0));
        CHECK(op.eigenvalues() == std::vector<double>{4.0});
        CHECK(op.positivity_margin() == doctest::Approx(4.0));
    }

    TEST_CASE("2x2 hand eigendecomposition") {
        CMat m(2);
        m(0, 0) = 2.0; m(0, 1) = 1.0;
        m(1, 0) = 1.0; m(1, 1) = 2.0;
        const OperatorSpec op = OperatorSpec::build(m);
        CHECK(op.eigenvalues()[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(op.eigenvalues()[1] == doctest::Approx(3.0).epsilon(1e-12));
    }

    TEST_CASE("degenerate and non-Hermitian rejected") {
        CHECK_THROWS_AS(OperatorSpec::build(scalar_matrix(0.0)), Error);
        CHECK_THROWS_AS(OperatorSpec::build(scalar_matrix(-1.0)), Error);
        CMat m(2);
        m(0, 0) = 1.0; m(0, 1) = 2.0;
        m(1, 0) = 0.5; m(1, 1) = 1.0;
        CHECK_THROWS_AS(OperatorSpec::build(m), Error);
    }

    TEST_CASE("sturm-liouville smallest case is [[8]]") {
        const OperatorSpec op = OperatorSpec::sturm_liouville_const(1.0, 0.0, 3);
        CHECK(op.hdim() == 1);
        CHECK(op.matrix()(0, 0).real() == doctest::Approx(8.0));
    }

    TEST_CASE("sturm-liouville approaches the Dirichlet laplacian spectrum") {
        const OperatorSpec op = OperatorSpec::sturm_liouville_const(1.0, 0.0, 201);
        const double pi2 = M_PI * M_PI;
        CHECK(std::abs(op.positivity_margin() - pi2) <= 0.02 * pi2);
    }

    TEST_CASE("constant potential shifts all eigenvalues exactly") {
        const OperatorSpec base = OperatorSpec::sturm_liouville_const(1.0, 0.0, 33);
        const OperatorSpec shifted = OperatorSpec::sturm_liouville_const(1.0, 5.0, 33);
        for (std::size_t i = 0; i < base.eigenvalues().size(); ++i)
            CHECK(shifted.eigenvalues()[i] - base.eigenvalues()[i] ==
                  doctest::Approx(5.0).epsilon(1e-11));
    }

    TEST_CASE("sturm-liouville input validation") {
        CHECK_THROWS_AS(OperatorSpec::sturm_liouville_const(-1.0, 0.0, 9), Error);
        CHECK_THROWS_AS(OperatorSpec::sturm_liouville_const(1.0, 0.0, 2), Error);
        // potential negative enough to kill positivity
        CHECK_THROWS_AS(OperatorSpec::sturm_liouville_const(1.0, -50.0, 65), Error);
    }

    TEST_CASE("fractional powers of a diagonal") {
        CMat m(2);
        m(0, 0) = 4.0;
        m(1, 1) = 9.0;
        const OperatorSpec op = OperatorSpec::build(m);
        const CMat half = op.fractional_power(0.5);
        CHECK(std::abs(half(0, 0) - cplx(2.0, 0)) <= 1e-12);
        CHECK(std::abs(half(1, 1) - cplx(3.0, 0)) <= 1e-12);
        CHECK(std::abs(half(0, 1)) <= 1e-12);

        CHECK(mat_diff(op.fractional_power(0.0), CMat::identity(2)) <= 1e-12);
        CHECK(mat_diff(op.fractional_power(1.0), m) <= 1e-12 * m.frobenius_norm());
    }

    TEST_CASE("square root squares back and powers add") {
        const CMat m = random_spd(4, 17);
        const OperatorSpec op = OperatorSpec::build(m);
        const CMat half = op.fractional_power(0.5);
        CHECK(mat_diff(half * half, m) <= 1e-10 * m.frobenius_norm());

        const CMat p1 = op.fractional_power(0.3);
        const CMat p2 = op.fractional_power(0.9);
        const CMat sum = op.fractional_power(1.2);
        CHECK(mat_diff(p1 * p2, sum) <= 1e-10 * sum.frobenius_norm());
    }

    TEST_CASE("scalar cosine and sine values") {
        const OperatorSpec op = OperatorSpec::build(scalar_matrix(4.0));
        const ShiftedOperator sh(op, 0.0);
        CHECK(cosine_at(sh, M_PI / 2)(0, 0).real() == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(std::abs(sine_at(sh, M_PI / 2)(0, 0)) <= 1e-14);           // sin(pi)/2 = 0
        CHECK(sine_at(sh, M_PI / 4)(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
    }

    TEST_CASE("initial values of the family") {
        const CMat m = random_spd(3, 23);
        const OperatorSpec op = OperatorSpec::build(m);
        const ShiftedOperator sh(op, 2.7);
        CHECK(mat_diff(cosine_at(sh, 0.0), CMat::identity(3)) <= 1e-13);
        CHECK(sine_at(sh, 0.0).frobenius_norm() <= 1e-13);
    }

    TEST_CASE("matrix families match the per-eigenvalue oracle") {
        CMat m(2);
        m(0, 0) = 1.0;
        m(1, 1) = 4.0;
        const OperatorSpec op = OperatorSpec::build(m);
        const ShiftedOperator sh(op, 3.0);
        for (double t : {0.3, 1.1, 2.9}) {
            const CMat c = cosine_at(sh, t);
            CHECK(std::abs(c(0, 0) - cplx(std::cos(2.0 * t), 0)) <= 1e-13);
            CHECK(std::abs(c(1, 1) - cplx(std::cos(std::sqrt(7.0) * t), 0)) <= 1e-13);
            const CMat s = sine_at(sh, t);
            CHECK(std::abs(s(0, 0) - cplx(std::sin(2.0 * t) / 2.0, 0)) <= 1e-13);
            CHECK(std::abs(s(1, 1) - cplx(std::sin(std::sqrt(7.0) * t) / std::sqrt(7.0), 0)) <=
                  1e-13);
        }
    }

    TEST_CASE("d'Alembert identity per mode") {
        const CMat m = random_spd(3, 29);
        const OperatorSpec op = OperatorSpec::build(m);
        const ShiftedOperator sh(op, 1.4);
        CMat a_xi = m;
        for (int i = 0; i < 3; ++i) a_xi(i, i) += 1.4;
        for (double t : {0.2, 0.9, 2.4, 6.0}) {
            const CMat c = cosine_at(sh, t);
            const CMat s = sine_at(sh, t);
            const CMat lhs = c * c + a_xi * (s * s);
            CHECK(mat_diff(lhs, CMat::identity(3)) <= 1e-11);
        }
    }

    TEST_CASE("addition formula") {
        const CMat m = random_spd(2, 31);
        const OperatorSpec op = OperatorSpec::build(m);
        const ShiftedOperator sh(op, 0.6);
        CMat a_xi = m;
        for (int i = 0; i < 2; ++i) a_xi(i, i) += 0.6;
        const double t = 0.8, s = 0.5;
        const CMat lhs = cosine_at(sh, t + s);
        const CMat rhs = cosine_at(sh, t) * cosine_at(sh, s) -
                         a_xi * (sine_at(sh, t) * sine_at(sh, s));
        CHECK(mat_diff(lhs, rhs) <= 1e-11);
    }

    TEST_CASE("derivative of cosine via Richardson has order >= 1.9") {
        const CMat m = random_spd(2, 37);
        const OperatorSpec op = OperatorSpec::build(m);
        const ShiftedOperator sh(op, 0.9);
        CMat a_xi = m;
        for (int i = 0; i < 2; ++i) a_xi(i, i) += 0.9;
        const double t = 0.7;
        const CMat exact = cplx(-1.0, 0) * (a_xi * sine_at(sh, t));
        auto error_at = [&](double h) {
            const CMat diff =
                cplx(1.0 / (2.0 * h), 0) * (cosine_at(sh, t + h) - cosine_at(sh, t - h));
            return mat_diff(diff, exact);
        };
        const double e1 = error_at(1e-2);
        const double e2 = error_at(5e-3);
        const double order = std::log2(e1 / e2);
        CHECK(order >= 1.9);
        CHECK(order <= 2.2);
    }

    TEST_CASE("shift validation") {
        const OperatorSpec op = OperatorSpec::build(scalar_matrix(1.0));
        CHECK_THROWS_AS(ShiftedOperator(op, -1.0), Error);
    }
}
