#include "qfc/control.hpp"
#include "qfc/model.hpp"
#include "qfc/propagator.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace qfc;

namespace {

ScenarioSpec rabi(double g, double t, double theta, int n_max, int n_trunc) {
    PresetParams p;
    p.g = g;
    p.control_time = t;
    p.theta = theta;
    p.n_max = n_max;
    p.n_trunc = n_trunc;
    return make_preset(Preset::rabi_resonant, p);
}

ScenarioSpec random_spec(std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ScenarioSpec s;
    s.field = {2, 5};
    for (int j = 0; j < 2; ++j) {
        const int nl = 2 + j;
        Atom a;
        a.energies = RealVector::NullaryExpr(nl, [&](Eigen::Index) { return 1.0 + u(rng); });
        a.couplings = RealMatrix::Zero(nl, nl);
        for (int k = 0; k < nl; ++k)
            for (int l = k + 1; l < nl; ++l) a.couplings(k, l) = a.couplings(l, k) = 0.3 * u(rng);
        s.atoms.atoms.push_back(a);
    }
    s.control_time = 2.0;
    s.initial_atomic = ground_state(6);
    s.target_atomic = oracle::random_state(6, seed + 1);
    return s;
}

}  // namespace

TEST(Hamiltonian, MatchesRabiForm) {
    const double g = 0.07;
    const ScenarioSpec s = rabi(g, 1.0, 0.3, 4, 12);
    const ComplexMatrix h = build_hamiltonian(s);
    // omega_c a†a + omega_E sigma_EE + g sigma_x (a + a†), assembled directly
    const int nf = 13;
    ComplexMatrix a = ComplexMatrix::Zero(nf, nf);
    for (int n = 1; n < nf; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    ComplexMatrix sx(2, 2), see(2, 2);
    sx << 0, 1, 1, 0;
    see << 0, 0, 0, 1;
    const ComplexMatrix expected = kronecker(a.adjoint() * a, ComplexMatrix::Identity(2, 2)) +
                                   kronecker(ComplexMatrix::Identity(nf, nf), see) +
                                   g * kronecker(a + a.adjoint(), sx);
    EXPECT_LT((h - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Hamiltonian, DecoupledIsDiagonal) {
    ScenarioSpec s = random_spec(3);
    for (auto& a : s.atoms.atoms) a.couplings.setZero();
    const ComplexMatrix h = build_hamiltonian(s);
    const CompositeSpace space = s.space();
    const RealVector atomic = atomic_energy_operator(s.atoms).diagonal().real();
    for (int i = 0; i < h.rows(); ++i) {
        const auto [n, m] = space.unflatten(i);
        for (int j = 0; j < h.cols(); ++j) {
            const Complex expected = i == j ? Complex(n + atomic(m), 0.0) : Complex(0.0, 0.0);
            EXPECT_NEAR(std::abs(h(i, j) - expected), 0.0, 1e-14);
        }
    }
}

TEST(Hamiltonian, RabiGroundStateBelowSecondOrderEstimate) {
    const double g = 0.2;
    const ScenarioSpec s = rabi(g, 1.0, 0.0, 10, 30);
    const double e0 = eigendecompose(build_hamiltonian(s)).eigenvalues(0);
    // second-order estimate -g^2/(omega_c + omega_E); higher orders lower it further
    EXPECT_LT(e0, -g * g / 2.0);
    const ScenarioSpec big = rabi(g, 1.0, 0.0, 10, 60);
    EXPECT_NEAR(eigendecompose(build_hamiltonian(big)).eigenvalues(0), e0, 1e-12);
}

TEST(Hamiltonian, HermitianForRandomSpecs) {
    for (std::uint32_t seed = 1; seed <= 10; ++seed) {
        EXPECT_LT(max_abs_deviation_from_hermitian(build_hamiltonian(random_spec(seed))), 1e-12);
    }
}

TEST(Hamiltonian, RejectsNonSymmetricCouplings) {
    ScenarioSpec s = random_spec(2);
    s.atoms.atoms[0].couplings(0, 1) += 0.01;
    EXPECT_THROW((void)build_hamiltonian(s), std::invalid_argument);
}

TEST(Hamiltonian, CommutesWithJointParity) {
    PresetParams p;
    p.control_time = 1.0;
    p.n_atoms = 2;
    p.n_max = 3;
    p.n_trunc = 8;
    p.g = 0.3;
    const ScenarioSpec s = make_preset(Preset::multiqubit, p);
    const ComplexMatrix h = build_hamiltonian(s);
    const CompositeSpace space = s.space();
    ComplexMatrix parity = ComplexMatrix::Zero(space.dim(), space.dim());
    for (int i = 0; i < space.dim(); ++i) {
        const auto [n, m] = space.unflatten(i);
        int excitations = n;
        for (int lvl : space.atomic_levels(m)) excitations += lvl;
        parity(i, i) = excitations % 2 == 0 ? 1.0 : -1.0;
    }
    EXPECT_LT((h * parity - parity * h).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Hamiltonian, ScaleInvariance) {
    // multiplying {omega_k, g, omega_c} by s and dividing T by s leaves F unchanged
    const ScenarioSpec base = rabi(0.05, 7.0, 1.1, 6, 20);
    const double f0 = ControlProblem(base).solve().fidelity;
    ScenarioSpec scaled = base;
    const double sc = 2.5;
    scaled.omega_c *= sc;
    for (auto& a : scaled.atoms.atoms) {
        a.energies *= sc;
        a.couplings *= sc;
    }
    scaled.control_time /= sc;
    EXPECT_NEAR(ControlProblem(scaled).solve().fidelity, f0, 1e-10);
}

TEST(Preset, MultilevelDrEnergies) {
    PresetParams p;
    p.control_time = 0.2;
    p.n_max = 4;
    const ScenarioSpec s = make_preset(Preset::multilevel_dr, p);
    ASSERT_EQ(s.atoms.count(), 1);
    const RealVector e = s.atoms.atoms[0].energies;
    const double expected[] = {0.0, 0.32, 0.35, 0.4, 0.42, 0.5};
    ASSERT_EQ(e.size(), 6);
    for (int k = 0; k < 6; ++k) EXPECT_DOUBLE_EQ(e(k), expected[k]);
    const RealMatrix& g = s.atoms.atoms[0].couplings;
    for (int k = 1; k <= 4; ++k) {
        EXPECT_DOUBLE_EQ(g(0, k), 2 * 0.5);
        EXPECT_DOUBLE_EQ(g(k, 5), 2 * 0.5);
    }
    EXPECT_DOUBLE_EQ(g(0, 5), 0.0);
    EXPECT_DOUBLE_EQ(g(1, 2), 0.0);
    EXPECT_NEAR(std::abs(s.target_atomic(5) - 1.0), 0.0, 1e-15);
}

TEST(Preset, MultilevelRscAndJc) {
    PresetParams p;
    p.control_time = 1.0;
    p.n_max = 2;
    const ScenarioSpec rsc = make_preset(Preset::multilevel_rsc, p);
    const ScenarioSpec jc = make_preset(Preset::multilevel_jc, p);
    const double expected[] = {0.0, 0.86, 0.92, 1.1, 1.2, 2.0};
    for (int k = 0; k < 6; ++k) {
        EXPECT_DOUBLE_EQ(rsc.atoms.atoms[0].energies(k), expected[k]);
        EXPECT_DOUBLE_EQ(jc.atoms.atoms[0].energies(k), expected[k]);
    }
    EXPECT_DOUBLE_EQ(rsc.atoms.atoms[0].couplings(0, 1), 0.2);
    EXPECT_DOUBLE_EQ(jc.atoms.atoms[0].couplings(0, 1), 0.002);
}

TEST(Preset, RabiThetaZeroTargetIsInitial) {
    const ScenarioSpec s = rabi(0.01, 25.0, 0.0, 3, 6);
    EXPECT_LT((s.target_atomic - s.initial_atomic).norm(), 1e-15);
    EXPECT_NEAR(std::abs(s.initial_atomic(0) - 1.0), 0.0, 1e-15);
}

TEST(Preset, MultiqubitGhz) {
    PresetParams p;
    p.control_time = 10.0;
    p.n_atoms = 3;
    p.n_max = 3;
    const ScenarioSpec s = make_preset(Preset::multiqubit, p);
    EXPECT_EQ(s.atoms.dim(), 8);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(s.target_atomic(0) - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.target_atomic(7) - r), 0.0, 1e-15);
    for (const auto& a : s.atoms.atoms) {
        EXPECT_DOUBLE_EQ(a.energies(1), 1.0);
        EXPECT_DOUBLE_EQ(a.couplings(0, 1), 0.02);
    }
}

TEST(Preset, Errors) {
    EXPECT_THROW((void)parse_preset("rabi"), std::invalid_argument);
    PresetParams p;
    p.g = 0.1;
    p.theta = 1.0;
    try {
        (void)make_preset(Preset::rabi_resonant, p);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("T"), std::string::npos);
    }
    EXPECT_THROW((void)make_preset(Preset::multilevel_rsc, PresetParams{}), std::invalid_argument);
}

TEST(ScenarioSpec, ValidateRejectsNegativeTime) {
    ScenarioSpec s = rabi(0.01, 1.0, 0.2, 2, 4);
    s.control_time = -1.0;
    try {
        s.validate();
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("control_time"), std::string::npos);
    }
}

TEST(ScenarioSpec, ValidateRejectsUnnormalizedStates) {
    ScenarioSpec s = rabi(0.01, 1.0, 0.2, 2, 4);
    s.target_atomic *= 1.1;
    EXPECT_THROW(s.validate(), std::invalid_argument);
}
