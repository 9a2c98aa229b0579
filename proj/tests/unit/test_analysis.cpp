#include "qfc/analysis.hpp"
#include "qfc/propagator.hpp"
#include "qfc/targets.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace qfc;

TEST(FockStatistics, FockState) {
    const AnalysisReport r = fock_statistics(fock_state(5, 12));
    EXPECT_DOUBLE_EQ(r.n_av, 5.0);
    EXPECT_DOUBLE_EQ(r.mandel_q, -1.0);
    EXPECT_DOUBLE_EQ(r.parity_expectation, -1.0);
    for (int n : {1, 2, 7, 11}) EXPECT_DOUBLE_EQ(fock_statistics(fock_state(n, 12)).mandel_q, -1.0);
}

TEST(FockStatistics, CoherentIsPoissonian) {
    for (double r : {0.5, 2.0, 3.1}) {
        const AnalysisReport rep = fock_statistics(coherent_state(std::polar(r, 0.4), 80));
        EXPECT_NEAR(rep.mandel_q, 0.0, 1e-6);
        EXPECT_NEAR(rep.n_av, r * r, 1e-8);
    }
}

TEST(FockStatistics, VacuumQUndefined) {
    const AnalysisReport r = fock_statistics(fock_state(0, 4));
    EXPECT_TRUE(std::isnan(r.mandel_q));
    EXPECT_DOUBLE_EQ(r.n_av, 0.0);
    EXPECT_DOUBLE_EQ(r.parity_expectation, 1.0);
}

TEST(FockStatistics, InvariantsOnRandomStates) {
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
        const AnalysisReport r = fock_statistics(oracle::random_state(15, seed));
        EXPECT_NEAR(r.fock_amplitudes.squaredNorm(), 1.0, 1e-9);
        EXPECT_GE(r.n_av, 0.0);
        EXPECT_GE(r.mandel_q, -1.0 - 1e-12);
        EXPECT_LE(std::abs(r.parity_expectation), 1.0 + 1e-12);
    }
}

TEST(Poisson, Reference) {
    const auto p0 = poisson_reference(0.0, 5);
    EXPECT_DOUBLE_EQ(p0[0], 1.0);
    for (int n = 1; n <= 5; ++n) EXPECT_DOUBLE_EQ(p0[n], 0.0);
    const auto p1 = poisson_reference(1.0, 4);
    EXPECT_NEAR(p1[0], std::exp(-1.0), 1e-15);
    EXPECT_NEAR(p1[1], std::exp(-1.0), 1e-15);
    EXPECT_THROW((void)poisson_reference(-1.0, 3), std::invalid_argument);
}

TEST(Poisson, TailBound) {
    for (double mean : {0.5, 4.0, 25.0, 80.0}) {
        const int nt = static_cast<int>(std::ceil(mean + 10.0 * std::sqrt(mean)));
        double sum = 0.0;
        for (double p : poisson_reference(mean, nt)) sum += p;
        EXPECT_GE(sum, 1.0 - 1e-8) << mean;
    }
}

TEST(Wigner, VacuumGaussian) {
    const StateVector vac = fock_state(0, 40);
    EXPECT_NEAR(wigner_at(vac, 0.0), 2.0 / std::numbers::pi, 1e-12);
    for (double x = -2.0; x <= 2.0; x += 0.25) {
        for (double p = -2.0; p <= 2.0; p += 0.5) {
            if (x * x + p * p > 9.0) continue;
            const double expected = 2.0 / std::numbers::pi * std::exp(-2.0 * (x * x + p * p));
            EXPECT_NEAR(wigner_at(vac, {x, p}), expected, 1e-6);
        }
    }
}

TEST(Wigner, DisplacedVacuumGaussian) {
    const Complex beta{1.1, -0.6};
    const int dim = 60;
    const StateVector coh = coherent_state(beta, dim);
    WignerAxes axes;
    axes.x_min = -1.0;
    axes.x_max = 3.0;
    axes.p_min = -2.5;
    axes.p_max = 1.5;
    axes.x_points = 17;
    axes.p_points = 17;
    const WignerGrid w = wigner(coh, axes);
    EXPECT_FALSE(w.beyond_reliable_region);
    for (std::size_t i = 0; i < w.x.size(); ++i) {
        for (std::size_t k = 0; k < w.p.size(); ++k) {
            const double d2 = std::norm(Complex{w.x[i], w.p[k]} - beta);
            EXPECT_NEAR(w.values(i, k), 2.0 / std::numbers::pi * std::exp(-2.0 * d2), 1e-6);
        }
    }
}

TEST(Wigner, FockOneNegativeAtOrigin) {
    EXPECT_NEAR(wigner_at(fock_state(1, 30), 0.0), -2.0 / std::numbers::pi, 1e-10);
}

TEST(Wigner, MatchesLaguerreClosedForm) {
    const int dim = 12;
    StateVector psi = oracle::random_state(dim, 31);
    const StateVector padded_psi = [&] {
        StateVector v = StateVector::Zero(70);
        v.head(dim) = psi;
        return v;
    }();
    for (Complex beta : {Complex{0.0, 0.0}, Complex{0.7, 0.2}, Complex{-1.3, 0.9}, Complex{0.1, -2.0}}) {
        EXPECT_NEAR(wigner_at(psi, beta, 70), oracle::wigner_laguerre(padded_psi, beta), 1e-9);
    }
}

TEST(Wigner, IntegralIsOne) {
    WignerAxes axes;
    axes.x_points = 241;
    axes.p_points = 241;
    for (std::uint32_t seed : {1u, 2u}) {
        // random state with n_av <= 10
        StateVector psi = oracle::random_state(11, seed);
        const WignerGrid w = wigner(psi, axes);
        EXPECT_NEAR(w.integral(), 1.0, 1e-3);
    }
}

TEST(Wigner, ReliabilityFlag) {
    WignerAxes axes;
    axes.x_points = 5;
    axes.p_points = 5;
    axes.x_min = axes.p_min = -6.0;
    axes.x_max = axes.p_max = 6.0;
    EXPECT_FALSE(wigner(fock_state(0, 20), axes).beyond_reliable_region);
    axes.basis_dim = 40;
    EXPECT_TRUE(wigner(fock_state(0, 20), axes).beyond_reliable_region);
    axes.x_min = axes.p_min = -1.0;
    axes.x_max = axes.p_max = 1.0;
    EXPECT_FALSE(wigner(fock_state(0, 20), axes).beyond_reliable_region);
}

TEST(Displacement, UnitaryAndCoherent) {
    const DisplacementBuilder b(50);
    const Complex beta{0.9, 0.4};
    const ComplexMatrix d = b.displacement(beta);
    EXPECT_LT((d.adjoint() * d - ComplexMatrix::Identity(50, 50)).cwiseAbs().maxCoeff(), 1e-10);
    const StateVector c = d * fock_state(0, 50);
    EXPECT_GT(std::norm(coherent_state(beta, 50).dot(c)), 1.0 - 1e-10);
    const StateVector psi = oracle::random_state(50, 3);
    EXPECT_LT((b.apply_inverse(beta, psi) - d.adjoint() * psi).norm(), 1e-10);
}

TEST(JcResonance, ExactCases) {
    EXPECT_EQ(jc_fock_resonance(1.0, std::numbers::pi / 2, 0, 10), 1);
    EXPECT_EQ(jc_fock_resonance(1.0, std::numbers::pi / 4, 0, 10), 4);
    EXPECT_EQ(jc_fock_resonance(1.0, std::numbers::pi / 4, 1, 100), 36);
    EXPECT_THROW((void)jc_fock_resonance(1.0, std::numbers::pi / 4, 1, 20), std::out_of_range);
    EXPECT_THROW((void)jc_fock_resonance(0.0, 1.0, 0, 20), std::invalid_argument);
    try {
        (void)jc_fock_resonance(0.001, 10.0, 0, 80);
        FAIL();
    } catch (const std::out_of_range& e) {
        EXPECT_NE(std::string(e.what()).find("n_max"), std::string::npos);
    }
}

TEST(Entropy, ProductAndBell) {
    const StateVector prod = product_state(oracle::random_state(4, 1), oracle::random_state(3, 2));
    EXPECT_NEAR(entanglement_entropy_bits(prod, 4, 3), 0.0, 1e-10);
    StateVector bell = StateVector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(entanglement_entropy_bits(bell, 2, 2), 1.0, 1e-12);
}

TEST(JcResonance, PredictedFockStateReachesExcitedState) {
    const double g = 0.001;
    const double t = std::numbers::pi / (4.0 * g);
    const int n = jc_fock_resonance(g, t, 0, 20);
    ASSERT_EQ(n, 4);
    AtomicSystem atoms;
    Atom a;
    a.energies = RealVector::LinSpaced(2, 0.0, 1.0);
    a.couplings = RealMatrix::Zero(2, 2);
    a.couplings(0, 1) = a.couplings(1, 0) = 2.0 * g;
    atoms.atoms.push_back(a);
    const CompositeSpace space({20, 30}, atoms);
    ComplexMatrix h = embed_field_operator(number_matrix(space.field()), space) +
                      embed_atomic_operator(transition_operator_matrix(atoms, 0, 1, 1), space) +
                      2.0 * g *
                          embed_field_operator(quadratures(space.field()).x, space) *
                          embed_atomic_operator(transition_operator_matrix(atoms, 0, 0, 1) +
                                                    transition_operator_matrix(atoms, 0, 1, 0),
                                                space);
    const StateVector psi = evolve_state(eigendecompose(h), product_state(fock_state(n, 31), bloch_target(0, 0)), t);
    double pe = 0.0;
    for (int k = 0; k <= 30; ++k) pe += std::norm(psi(space.flatten(k, 1)));
    EXPECT_GT(pe, 0.999);
}

TEST(Displacement, BatchMatchesSingle) {
    const DisplacementBuilder b(30);
    const StateVector psi = oracle::random_state(30, 8);
    const std::vector<Complex> betas{{0.0, 0.0}, {0.5, -0.2}, {-1.0, 1.0}};
    const ComplexMatrix batch = b.apply_inverse(betas, psi);
    for (std::size_t k = 0; k < betas.size(); ++k) {
        EXPECT_LT((batch.col(k) - b.apply_inverse(betas[k], psi)).norm(), 1e-12);
    }
}
