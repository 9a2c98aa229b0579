#include "qfc/model.hpp"
#include "qfc/propagator.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace qfc;

namespace {

ScenarioSpec resonant_rabi(double g, int n_trunc) {
    PresetParams p;
    p.g = g;
    p.control_time = 1.0;
    p.theta = std::numbers::pi;
    p.n_max = std::min(10, n_trunc);
    p.n_trunc = n_trunc;
    return make_preset(Preset::rabi_resonant, p);
}

}  // namespace

TEST(Eigendecompose, DiagonalInput) {
    ComplexMatrix h = ComplexMatrix::Zero(4, 4);
    h.diagonal() << 3.0, -1.0, 2.0, 0.5;
    const SpectralDecomposition d = eigendecompose(h);
    const double sorted[] = {-1.0, 0.5, 2.0, 3.0};
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(d.eigenvalues(i), sorted[i], 1e-14);
    for (int c = 0; c < 4; ++c) {
        EXPECT_NEAR(d.eigenvectors.col(c).cwiseAbs().maxCoeff(), 1.0, 1e-14);
        EXPECT_NEAR(d.eigenvectors.col(c).cwiseAbs().sum(), 1.0, 1e-14);
    }
}

TEST(Eigendecompose, PauliX) {
    ComplexMatrix sx(2, 2);
    sx << 0, 1, 1, 0;
    const SpectralDecomposition d = eigendecompose(sx);
    EXPECT_NEAR(d.eigenvalues(0), -1.0, 1e-15);
    EXPECT_NEAR(d.eigenvalues(1), 1.0, 1e-15);
}

TEST(Eigendecompose, ReconstructionAndUnitarity) {
    for (int dim : {1, 7, 60}) {
        for (bool complex_input : {false, true}) {
            ComplexMatrix h = oracle::random_hermitian(dim, 11 + dim);
            if (!complex_input) h = ComplexMatrix(h.real().cast<Complex>());
            const SpectralDecomposition d = eigendecompose(h);
            const ComplexMatrix rec = d.eigenvectors * d.eigenvalues.cast<Complex>().asDiagonal() *
                                      d.eigenvectors.adjoint();
            EXPECT_LT((rec - h).cwiseAbs().maxCoeff(), 1e-9 * h.cwiseAbs().maxCoeff());
            EXPECT_LT((d.eigenvectors.adjoint() * d.eigenvectors - ComplexMatrix::Identity(dim, dim))
                          .cwiseAbs()
                          .maxCoeff(),
                      1e-10);
            for (int i = 1; i < dim; ++i) EXPECT_LE(d.eigenvalues(i - 1), d.eigenvalues(i));
        }
    }
}

TEST(Eigendecompose, RejectsNonHermitian) {
    ComplexMatrix h = oracle::random_hermitian(5, 2);
    h(0, 1) += Complex(1e-6, 0.0);
    EXPECT_THROW((void)eigendecompose(h), std::invalid_argument);
    EXPECT_THROW((void)eigendecompose(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST(Eigendecompose, JcSplittingMatchesRabiFrequency) {
    const double g = 0.001;
    const SpectralDecomposition d = eigendecompose(build_hamiltonian(resonant_rabi(g, 30)));
    // manifold n: |G,n>, |E,n-1> near energy n; splitting 2 sqrt(n) g
    for (int n = 1; n <= 20; ++n) {
        std::vector<double> near;
        for (int i = 0; i < d.dim(); ++i) {
            if (std::abs(d.eigenvalues(i) - n) < 0.5) near.push_back(d.eigenvalues(i));
        }
        ASSERT_EQ(near.size(), 2u) << n;
        const double omega = 2.0 * std::sqrt(static_cast<double>(n)) * g;
        EXPECT_NEAR(near[1] - near[0], omega, 0.01 * omega) << n;
    }
}

TEST(Evolve, IdentityAtZeroAndGroupProperty) {
    const SpectralDecomposition d = eigendecompose(oracle::random_hermitian(20, 5));
    EXPECT_TRUE(evolve_unitary(d, 0.0).isIdentity(1e-12));
    const ComplexMatrix u1 = evolve_unitary(d, 0.37);
    const ComplexMatrix u2 = evolve_unitary(d, 1.91);
    EXPECT_LT((u1 * u2 - evolve_unitary(d, 2.28)).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Evolve, UnitarityForRandomInstances) {
    for (std::uint32_t seed = 0; seed < 5; ++seed) {
        const SpectralDecomposition d = eigendecompose(oracle::random_hermitian(25, 100 + seed));
        const ComplexMatrix u = evolve_unitary(d, 0.5 + 3.1 * seed);
        EXPECT_LT((u.adjoint() * u - ComplexMatrix::Identity(25, 25)).cwiseAbs().maxCoeff(), 1e-9);
    }
}

TEST(Evolve, DecoupledPhase) {
    const ScenarioSpec s = resonant_rabi(0.0, 6);
    const SpectralDecomposition d = eigendecompose(build_hamiltonian(s));
    const CompositeSpace space = s.space();
    const double t = 2.7;
    const ComplexMatrix u = evolve_unitary(d, t);
    for (int n = 0; n <= 6; ++n) {
        const int i = space.flatten(n, 1);
        const Complex expected = std::polar(1.0, -(1.0 + n) * t);
        EXPECT_NEAR(std::abs(u(i, i) - expected), 0.0, 1e-12);
    }
}

TEST(Evolve, StateMatchesUnitary) {
    const SpectralDecomposition d = eigendecompose(oracle::random_hermitian(15, 9));
    const StateVector psi = oracle::random_state(15, 10);
    EXPECT_LT((evolve_state(d, psi, 1.3) - evolve_unitary(d, 1.3) * psi).norm(), 1e-12);
}

TEST(Evolve, AgreesWithRungeKutta) {
    const ComplexMatrix h = oracle::random_hermitian(50, 2024, 0.2);
    const StateVector psi0 = oracle::random_state(50, 2025);
    const SpectralDecomposition d = eigendecompose(h);
    double worst = 0.0;
    StateVector rk = psi0;
    for (int k = 1; k <= 5; ++k) {
        rk = oracle::rk4(h, rk, 0.4, 1e-3);
        worst = std::max(worst, (rk - evolve_state(d, psi0, 0.4 * k)).cwiseAbs().maxCoeff());
    }
    EXPECT_LT(worst, 1e-6);
}

TEST(Evolve, EnergyConservation) {
    const ComplexMatrix h = oracle::random_hermitian(30, 77);
    const SpectralDecomposition d = eigendecompose(h);
    const StateVector psi0 = oracle::random_state(30, 78);
    const double e0 = psi0.dot(h * psi0).real();
    for (double t : {0.5, 3.0, 40.0}) {
        const StateVector psi = evolve_state(d, psi0, t);
        EXPECT_NEAR(psi.dot(h * psi).real(), e0, 1e-9 * std::abs(e0) + 1e-12);
    }
}

TEST(Populations, InitialProjectorAndNorm) {
    const SpectralDecomposition d = eigendecompose(oracle::random_hermitian(12, 4));
    const StateVector psi0 = oracle::random_state(12, 5);
    const std::vector<double> t0{0.0};
    EXPECT_NEAR(population_timeseries(d, psi0, t0, psi0 * psi0.adjoint())[0], 1.0, 1e-12);
    std::vector<double> times;
    for (int i = 0; i < 50; ++i) times.push_back(0.3 * i);
    for (double p : population_timeseries(d, psi0, times, ComplexMatrix::Identity(12, 12))) {
        EXPECT_NEAR(p, 1.0, 1e-9);
    }
    for (double p : population_timeseries_diagonal(d, psi0, times, RealVector::Ones(12))) {
        EXPECT_NEAR(p, 1.0, 1e-9);
    }
}

TEST(Populations, JcClosedForm) {
    const double g = 0.001;
    const ScenarioSpec s = resonant_rabi(g, 30);
    const CompositeSpace space = s.space();
    const SpectralDecomposition d = eigendecompose(build_hamiltonian(s));
    RealVector weights = RealVector::Zero(space.dim());
    for (int n = 0; n <= 30; ++n) weights(space.flatten(n, 1)) = 1.0;
    for (int n : {1, 4, 9}) {
        const StateVector psi0 = product_state(fock_state(n, 31), ground_state(2));
        std::vector<double> times;
        for (int k = 1; k <= 20; ++k) times.push_back(k * std::numbers::pi / (2.0 * std::sqrt(n) * g) / 10.0);
        const auto p = population_timeseries_diagonal(d, psi0, times, weights);
        for (std::size_t k = 0; k < times.size(); ++k) {
            const double expected = std::pow(std::sin(std::sqrt(n) * g * times[k]), 2);
            EXPECT_NEAR(p[k], expected, 0.01) << "n=" << n << " t=" << times[k];
        }
    }
}

TEST(Populations, BoundedAndDimensionChecked) {
    const SpectralDecomposition d = eigendecompose(oracle::random_hermitian(8, 40));
    const StateVector psi0 = oracle::random_state(8, 41);
    ComplexMatrix proj = ComplexMatrix::Zero(8, 8);
    proj.topLeftCorner(3, 3).setIdentity();
    std::vector<double> times{0.0, 1.0, 2.0, 5.0};
    for (double p : population_timeseries(d, psi0, times, proj)) {
        EXPECT_GE(p, -1e-12);
        EXPECT_LE(p, 1.0 + 1e-9);
    }
    EXPECT_THROW((void)population_timeseries(d, oracle::random_state(7, 1), times, proj), std::invalid_argument);
}
