#include <doctest.h>

#include <cmath>

#include "multiwave/oracle.hpp"
#include "test_helpers.hpp"

using namespace mw;
using namespace mwtest;

namespace {

OperatorSpec scalar_op(double a) {
    CMat m(1);
    m(0, 0) = a;
    return OperatorSpec::build(m);
}

CMat hermitian3() {
    CMat m(3);
    m(0, 0) = 2.0; m(0, 1) = cplx(0.3, 0.1); m(0, 2) = 0.0;
    m(1, 0) = cplx(0.3, -0.1); m(1, 1) = 1.1; m(1, 2) = cplx(0.0, 0.25);
    m(2, 0) = 0.0; m(2, 1) = cplx(0.0, -0.25); m(2, 2) = 3.0;
    return m;
}

}  // namespace

TEST_SUITE("oracle") {
    TEST_CASE("zero data integrates to zero") {
        const GridSpec grid = grid1d(16, 4.0);
        const OperatorSpec op = scalar_op(1.0);
        LinearProblem problem;
        problem.grid = grid;
        problem.op = &op;
        problem.phi = Field(grid, 1);
        problem.psi = Field(grid, 1);
        problem.horizon = 0.5;
        const SpectralTrajectory traj = rk4_integrate(problem, problem.phi, problem.psi, 1e-2,
                                                      uniform_times(0.0, 0.5, 6));
        for (const auto& snap : traj.u_hat)
            for (const cplx& z : snap.values) CHECK(std::abs(z) == 0.0);
    }

    TEST_CASE("stability bound is enforced and reported") {
        const GridSpec grid = grid1d(64, 2.0 * M_PI);  // |xi| up to 32
        const OperatorSpec op = scalar_op(4.0);
        LinearProblem problem;
        problem.grid = grid;
        problem.op = &op;
        problem.phi = single_mode(grid, 1, {1});
        problem.psi = Field(grid, 1);
        problem.horizon = 1.0;
        const double bound = rk4_stability_bound(problem);
        CHECK(bound == doctest::Approx(0.5 / std::sqrt(4.0 + 32.0 * 32.0)));
        CHECK_THROWS_WITH_AS(
            (void)rk4_integrate(problem, problem.phi, problem.psi, 0.1,
                                uniform_times(0.0, 1.0, 3)),
            doctest::Contains("stability bound"), Error);
        CHECK_THROWS_WITH_AS(
            (void)rk4_integrate(problem, problem.phi, problem.psi, 3e-3,
                                uniform_times(0.0, 1.0, 3)),
            doctest::Contains("divide"), Error);
    }

    TEST_CASE("global error order fits 4.0 +- 0.2 on a single mode") {
        const GridSpec grid = grid1d(8, 2.0 * M_PI);
        const OperatorSpec op = scalar_op(3.0);
        LinearProblem problem;
        problem.grid = grid;
        problem.op = &op;
        problem.phi = single_mode(grid, 1, {1});
        problem.psi = Field(grid, 1);
        problem.horizon = 1.0;
        const double omega = std::sqrt(3.0 + 1.0);

        auto error_at = [&](double dt) {
            const SpectralTrajectory traj = rk4_integrate(problem, problem.phi, problem.psi, dt,
                                                          {1.0});
            const Field u = traj.u_physical(0);
            const Field expected = cplx(std::cos(omega), 0.0) * single_mode(grid, 1, {1});
            double err = 0.0;
            for (std::size_t i = 0; i < u.values.size(); ++i)
                err = std::max(err, std::abs(u.values[i] - expected.values[i]));
            return err;
        };
        const double e1 = error_at(4e-3);
        const double e2 = error_at(2e-3);
        const double e3 = error_at(1e-3);
        const double o12 = std::log2(e1 / e2);
        const double o23 = std::log2(e2 / e3);
        CHECK(o12 >= 3.8);
        CHECK(o12 <= 4.2);
        CHECK(o23 >= 3.8);
        CHECK(o23 <= 4.2);
    }

    TEST_CASE("energy drift stays tiny over [0,1] at dt = 1e-3") {
        const GridSpec grid = grid1d(16, 6.0);
        const OperatorSpec op = OperatorSpec::build(hermitian3());
        LinearProblem problem;
        problem.grid = grid;
        problem.op = &op;
        problem.phi = random_field(grid, 3, 4001);
        problem.psi = random_field(grid, 3, 4002);
        problem.horizon = 1.0;
        const SpectralTrajectory traj = rk4_integrate(problem, problem.phi, problem.psi, 1e-3,
                                                      uniform_times(0.0, 1.0, 11));
        double e0 = trajectory_energy(traj, op, 0);
        double drift = 0.0;
        for (std::size_t j = 1; j < traj.samples(); ++j)
            drift = std::max(drift, rel_diff(trajectory_energy(traj, op, j), e0));
        CHECK(drift <= 1e-10);
    }

    TEST_CASE("shooting with zero coefficients returns the data") {
        const GridSpec grid = grid1d(16, 4.0);
        const OperatorSpec op = scalar_op(2.0);
        LinearProblem problem;
        problem.grid = grid;
        problem.op = &op;
        problem.phi = random_field(grid, 1, 71);
        problem.psi = random_field(grid, 1, 72);
        problem.horizon = 0.5;
        const InitialPair pair =
            shooting_multipoint(problem, MultipointSpec::cauchy(), 1e-2);
        const SpectralField phi_hat = forward_transform(problem.phi);
        const SpectralField psi_hat = forward_transform(problem.psi);
        double err = 0.0;
        for (std::size_t i = 0; i < pair.u0.values.size(); ++i) {
            err = std::max(err, std::abs(pair.u0.values[i] - phi_hat.values[i]));
            err = std::max(err, std::abs(pair.u1.values[i] - psi_hat.values[i]));
        }
        CHECK(err <= 1e-12);
    }

    TEST_CASE("worked m = 1 instance matches the analytic initial pair") {
        const GridSpec grid = grid1d(8, 2.0 * M_PI);
        const OperatorSpec op = scalar_op(1.0);
        LinearProblem problem;
        problem.grid = grid;
        problem.op = &op;
        problem.phi = single_mode(grid, 1, {0}, cplx(1.0, 0.0));
        problem.psi = Field(grid, 1);
        problem.horizon = 1.0;
        const MultipointSpec spec =
            MultipointSpec::make({cplx(0.25, 0)}, {cplx(0.25, 0)}, {0.5});
        const InitialPair analytic = solve_initial_data(problem, spec);
        const InitialPair shot = shooting_multipoint(problem, spec, 1.0 / 2048.0);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < analytic.u0.values.size(); ++i) {
            num += std::norm(analytic.u0.values[i] - shot.u0.values[i]) +
                   std::norm(analytic.u1.values[i] - shot.u1.values[i]);
            den += std::norm(analytic.u0.values[i]) + std::norm(analytic.u1.values[i]);
        }
        CHECK(std::sqrt(num / den) <= 1e-8);
    }

    TEST_CASE("randomized agreement between the analytic and shooting pairs") {
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 4; ++trial) {
            const int n = trial % 2 == 0 ? 1 : 2;
            const int hdim = 1 + trial % 3;
            const GridSpec grid = n == 1 ? grid1d(16, 2.0 * M_PI) : grid2d(8, 2.0 * M_PI);
            CMat m(hdim);
            for (int i = 0; i < hdim; ++i) {
                m(i, i) = 1.0 + uniform(rng, 0.0, 2.0);
                for (int j = i + 1; j < hdim; ++j) {
                    const cplx z(0.2 * uniform(rng, -1, 1), 0.2 * uniform(rng, -1, 1));
                    m(i, j) = z;
                    m(j, i) = std::conj(z);
                }
            }
            const OperatorSpec op = OperatorSpec::build(m);
            LinearProblem problem;
            problem.grid = grid;
            problem.op = &op;
            problem.phi = random_field(grid, hdim, 9000 + static_cast<std::uint64_t>(trial));
            problem.psi = random_field(grid, hdim, 9100 + static_cast<std::uint64_t>(trial));
            problem.horizon = 1.0;

            const int mcount = 1 + trial % 3;
            std::vector<cplx> alphas, betas;
            std::vector<double> lambdas;
            for (int k = 0; k < mcount; ++k) {
                alphas.push_back(cplx(uniform(rng, 0.05, 0.25), uniform(rng, -0.1, 0.1)));
                betas.push_back(cplx(uniform(rng, 0.05, 0.25), uniform(rng, -0.1, 0.1)));
                lambdas.push_back((1 + k) / 16.0 * 4.0);  // multiples of 1/4 within [0, 1]
            }
            for (double& l : lambdas) l = std::min(l, 1.0);
            const MultipointSpec spec = MultipointSpec::make(alphas, betas, lambdas);

            const InitialPair analytic = solve_initial_data(problem, spec);
            const InitialPair shot = shooting_multipoint(problem, spec, 1.0 / 512.0);
            double num = 0.0, den = 0.0;
            for (std::size_t i = 0; i < analytic.u0.values.size(); ++i) {
                num += std::norm(analytic.u0.values[i] - shot.u0.values[i]) +
                       std::norm(analytic.u1.values[i] - shot.u1.values[i]);
                den += std::norm(analytic.u0.values[i]) + std::norm(analytic.u1.values[i]);
            }
            CHECK(std::sqrt(num / den) <= 1e-8);
        }
    }

    TEST_CASE("both paths flag the engineered singular instance") {
        const GridSpec grid = grid1d(8, 2.0 * M_PI);
        const OperatorSpec op = scalar_op(1.0);
        LinearProblem problem;
        problem.grid = grid;
        problem.op = &op;
        problem.phi = single_mode(grid, 1, {1});
        problem.psi = Field(grid, 1);
        problem.horizon = 7.0;
        const MultipointSpec spec =
            MultipointSpec::make({cplx(1, 0)}, {cplx(1, 0)}, {2.0 * M_PI});

        SolveReport analytic_report;
        CHECK_THROWS_AS((void)solve_initial_data(problem, spec, &analytic_report), Error);
        ShootingReport shooting_report;
        CHECK_THROWS_AS(
            (void)shooting_multipoint(problem, spec, M_PI / 1024.0, &shooting_report), Error);
        CHECK(analytic_report.singular_modes == shooting_report.singular_modes);
        CHECK(analytic_report.min_abs_det <= 1e-10);
        CHECK(shooting_report.min_singular_value <= 1e-10);
    }

    TEST_CASE("spectral and rk4 trajectories agree within the convergence envelope") {
        const GridSpec grid = grid1d(16, 2.0 * M_PI);
        const OperatorSpec op = scalar_op(2.0);
        LinearProblem problem;
        problem.grid = grid;
        problem.op = &op;
        problem.phi = gaussian_bump(grid, 1, 0.6);
        problem.psi = gaussian_bump(grid, 1, 0.8, 0.5);
        problem.horizon = 1.0;
        const std::vector<double> times = uniform_times(0.0, 1.0, 5);
        const SpectralTrajectory spectral =
            solve_linear(problem, MultipointSpec::cauchy(), times);
        const SpectralTrajectory rk4 =
            rk4_integrate(problem, problem.phi, problem.psi, 1e-3, times);
        const CompareReport cmp = compare_trajectories(spectral, rk4);
        CHECK(cmp.sup_diff <= std::max(1e-8, 1e2 * std::pow(1e-3, 4)));

        // identical trajectories compare to zero
        const CompareReport self = compare_trajectories(spectral, spectral);
        CHECK(self.sup_diff == 0.0);
        CHECK(self.l2_diff == 0.0);
        CHECK(self.mixed_diff == 0.0);

        // an injected perturbation shows up at its own magnitude
        SpectralTrajectory perturbed = spectral;
        for (auto& z : perturbed.u_hat[2].values) z += cplx(1e-5, 0.0);
        const CompareReport fault = compare_trajectories(spectral, perturbed);
        CHECK(fault.sup_diff >= 1e-6);
        CHECK(fault.sup_diff <= 1e-3);
    }
}
